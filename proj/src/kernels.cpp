#include "ringtop/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace ringtop::kernels {

namespace scalar {

std::size_t gather_mismatch(const std::uint16_t* expect,
                            const std::uint16_t* base,
                            const std::uint16_t* idx, std::size_t n) {
  for (std::size_t z = 0; z < n; ++z)
    if (expect[z] != base[idx[z]]) return z;
  return npos;
}

std::size_t gather2_mismatch(const std::uint16_t* b1, const std::uint16_t* i1,
                             const std::uint16_t* b2, const std::uint16_t* i2,
                             std::size_t n) {
  for (std::size_t z = 0; z < n; ++z)
    if (b1[i1[z]] != b2[i2[z]]) return z;
  return npos;
}

std::size_t gather2d_mismatch(const std::uint16_t* expect,
                              const std::uint16_t* table, std::size_t stride,
                              const std::uint16_t* i, const std::uint16_t* j,
                              std::size_t n) {
  for (std::size_t z = 0; z < n; ++z)
    if (expect[z] != table[static_cast<std::size_t>(i[z]) * stride + j[z]])
      return z;
  return npos;
}

bool mask_intersects(const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

bool mask_subset(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

bool mask_equal(const std::uint64_t* a, const std::uint64_t* b,
                std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] != b[w]) return false;
  return true;
}

void mask_or_into(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
}

void mask_and_into(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] &= src[w];
}

std::size_t mask_popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w)
    c += static_cast<std::size_t>(__builtin_popcountll(a[w]));
  return c;
}

}  // namespace scalar

const Backend& scalar_backend() {
  static const Backend b{
      "scalar",
      scalar::gather_mismatch,
      scalar::gather2_mismatch,
      scalar::gather2d_mismatch,
      scalar::mask_intersects,
      scalar::mask_subset,
      scalar::mask_equal,
      scalar::mask_or_into,
      scalar::mask_and_into,
      scalar::mask_popcount,
  };
  return b;
}

#if defined(RINGTOP_HAVE_AVX2_TU)
namespace avx2 {  // defined in kernels_avx2.cpp
extern const Backend backend;
}
#endif

const Backend* avx2_backend() {
#if defined(RINGTOP_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return &avx2::backend;
#endif
  return nullptr;
}

namespace {

std::atomic<const Backend*> g_selected{nullptr};

const Backend* resolve_default() {
  if (const char* env = std::getenv("RINGTOP_KERNELS")) {
    std::string want(env);
    if (want == "scalar") return &scalar_backend();
    if (want == "avx2" && avx2_backend()) return avx2_backend();
    // silently fall through on unknown/unavailable env request
  }
  if (const Backend* b = avx2_backend()) return b;
  return &scalar_backend();
}

}  // namespace

const Backend& active() {
  const Backend* b = g_selected.load(std::memory_order_acquire);
  if (!b) {
    b = resolve_default();
    g_selected.store(b, std::memory_order_release);
  }
  return *b;
}

void select_backend(const char* name) {
  std::string want(name);
  if (want == "auto") {
    g_selected.store(resolve_default(), std::memory_order_release);
  } else if (want == "scalar") {
    g_selected.store(&scalar_backend(), std::memory_order_release);
  } else if (want == "avx2") {
    const Backend* b = avx2_backend();
    if (!b) throw std::runtime_error("avx2 backend unavailable");
    g_selected.store(b, std::memory_order_release);
  } else {
    throw std::runtime_error("unknown kernel backend: " + want);
  }
}

}  // namespace ringtop::kernels
