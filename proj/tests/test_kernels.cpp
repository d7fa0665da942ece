#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "ringtop/kernels.hpp"

using namespace ringtop::kernels;
using u16 = std::uint16_t;
using u64 = std::uint64_t;

namespace {

std::mt19937_64 rng(0x516e70ULL);

// gather kernels may read 32 bits at the final element, so give every table
// one element of slack
std::vector<u16> random_table(std::size_t len, u16 max_value) {
  std::vector<u16> t(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) t[i] = u16(rng() % (max_value + 1));
  return t;
}

std::vector<u64> random_words(std::size_t words) {
  std::vector<u64> w(words);
  for (auto& x : w) x = rng();
  return w;
}

const std::vector<std::size_t> kSizes{0, 1, 5, 7, 8, 9, 16, 33, 100, 257};

}  // namespace

TEST_CASE("gather kernels: scalar reference semantics") {
  const auto& s = scalar_backend();
  std::vector<u16> base{10, 20, 30, 40, 0};
  std::vector<u16> idx{3, 2, 1, 0, 0};
  std::vector<u16> expect{40, 30, 20, 10, 0};
  CHECK(s.gather_mismatch(expect.data(), base.data(), idx.data(), 4) == npos);
  expect[2] = 99;
  CHECK(s.gather_mismatch(expect.data(), base.data(), idx.data(), 4) == 2);
  CHECK(s.gather_mismatch(expect.data(), base.data(), idx.data(), 2) == npos);
}

TEST_CASE("gather kernels: backends agree on random data") {
  const Backend* backends[] = {avx2_backend()};
  const auto& s = scalar_backend();
  for (const Backend* b : backends) {
    if (!b) continue;
    CAPTURE(b->name);
    for (std::size_t n : kSizes) {
      const std::size_t span = n ? n : 1;
      for (int trial = 0; trial < 20; ++trial) {
        auto base1 = random_table(span, u16(span - 1));
        auto base2 = random_table(span, u16(span - 1));
        auto idx1 = random_table(n, u16(span - 1));
        auto idx2 = random_table(n, u16(span - 1));
        auto expect = random_table(n, u16(span - 1));

        CHECK(s.gather_mismatch(expect.data(), base1.data(), idx1.data(), n) ==
              b->gather_mismatch(expect.data(), base1.data(), idx1.data(), n));
        CHECK(s.gather2_mismatch(base1.data(), idx1.data(), base2.data(),
                                 idx2.data(), n) ==
              b->gather2_mismatch(base1.data(), idx1.data(), base2.data(),
                                  idx2.data(), n));

        // 2-d gather over a span x span table
        auto table = random_table(span * span, u16(span - 1));
        auto flat_expect = random_table(n, u16(span - 1));
        CHECK(s.gather2d_mismatch(flat_expect.data(), table.data(), span,
                                  idx1.data(), idx2.data(), n) ==
              b->gather2d_mismatch(flat_expect.data(), table.data(), span,
                                   idx1.data(), idx2.data(), n));
      }

      // planted match ending in a planted mismatch at every lane position
      if (n == 0) continue;
      for (std::size_t pos = 0; pos < std::min<std::size_t>(n, 24); ++pos) {
        auto base = random_table(span, u16(span - 1));
        auto idx = random_table(n, u16(span - 1));
        std::vector<u16> expect(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) expect[i] = base[idx[i]];
        expect[pos] = u16(expect[pos] + 1);
        CHECK(b->gather_mismatch(expect.data(), base.data(), idx.data(), n) ==
              pos);
      }
    }
  }
}

TEST_CASE("mask kernels: backends agree and match naive recomputation") {
  const Backend* backends[] = {&scalar_backend(), avx2_backend()};
  for (const Backend* b : backends) {
    if (!b) continue;
    CAPTURE(b->name);
    for (std::size_t words : {std::size_t(0), std::size_t(1), std::size_t(3),
                              std::size_t(4), std::size_t(5), std::size_t(8),
                              std::size_t(13), std::size_t(64)}) {
      for (int trial = 0; trial < 50; ++trial) {
        auto a = random_words(words);
        auto c = random_words(words);
        if (trial % 4 == 0) c = a;               // equality path
        if (trial % 4 == 1)
          for (std::size_t w = 0; w < words; ++w) c[w] |= a[w];  // subset path

        bool naive_inter = false, naive_sub = true, naive_eq = true;
        std::size_t naive_pop = 0;
        for (std::size_t w = 0; w < words; ++w) {
          naive_inter = naive_inter || (a[w] & c[w]);
          naive_sub = naive_sub && !(a[w] & ~c[w]);
          naive_eq = naive_eq && a[w] == c[w];
          naive_pop += std::size_t(__builtin_popcountll(a[w]));
        }
        CHECK(b->mask_intersects(a.data(), c.data(), words) == naive_inter);
        CHECK(b->mask_subset(a.data(), c.data(), words) == naive_sub);
        CHECK(b->mask_equal(a.data(), c.data(), words) == naive_eq);
        CHECK(b->mask_popcount(a.data(), words) == naive_pop);

        auto d1 = a, d2 = a;
        b->mask_or_into(d1.data(), c.data(), words);
        b->mask_and_into(d2.data(), c.data(), words);
        for (std::size_t w = 0; w < words; ++w) {
          CHECK(d1[w] == (a[w] | c[w]));
          CHECK(d2[w] == (a[w] & c[w]));
        }
      }
    }
  }
}

TEST_CASE("backend selection") {
  CHECK(std::string(scalar_backend().name) == "scalar");
  CHECK(active().gather_mismatch != nullptr);
  select_backend("scalar");
  CHECK(std::string(active().name) == "scalar");
  select_backend("auto");
  if (avx2_backend()) {
    select_backend("avx2");
    CHECK(std::string(active().name) == "avx2");
    select_backend("auto");
  } else {
    CHECK_THROWS(select_backend("avx2"));
  }
  CHECK_THROWS(select_backend("no-such-backend"));
}
