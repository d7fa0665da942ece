// AVX2 variants of the kernel set. This TU is the only one compiled with
// -mavx2; callers reach it through the dispatch table after a cpuid check.

#include <immintrin.h>

#include "ringtop/kernels.hpp"

namespace ringtop::kernels::avx2 {

namespace {

// Gather 8 u16 values base[idx[k]] as epi32 lanes. Each lane issues a 32-bit
// load at byte offset 2*idx, hence the one-element padding contract.
inline __m256i gather_u16(const std::uint16_t* base, __m128i idx16) {
  const __m256i idx = _mm256_cvtepu16_epi32(idx16);
  const __m256i raw = _mm256_i32gather_epi32(
      reinterpret_cast<const int*>(base), idx, 2);
  return _mm256_and_si256(raw, _mm256_set1_epi32(0xFFFF));
}

inline std::size_t first_diff_lane(__m256i a, __m256i b) {
  const __m256i eq = _mm256_cmpeq_epi32(a, b);
  const std::uint32_t m = static_cast<std::uint32_t>(_mm256_movemask_ps(
      _mm256_castsi256_ps(eq)));
  return static_cast<std::size_t>(__builtin_ctz(~m & 0xFFu));
}

std::size_t gather_mismatch(const std::uint16_t* expect,
                            const std::uint16_t* base,
                            const std::uint16_t* idx, std::size_t n) {
  std::size_t z = 0;
  for (; z + 8 <= n; z += 8) {
    const __m256i got = gather_u16(
        base, _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + z)));
    const __m256i want = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(expect + z)));
    const __m256i eq = _mm256_cmpeq_epi32(got, want);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(eq)) != 0xFF)
      return z + first_diff_lane(got, want);
  }
  for (; z < n; ++z)
    if (expect[z] != base[idx[z]]) return z;
  return npos;
}

std::size_t gather2_mismatch(const std::uint16_t* b1, const std::uint16_t* i1,
                             const std::uint16_t* b2, const std::uint16_t* i2,
                             std::size_t n) {
  std::size_t z = 0;
  for (; z + 8 <= n; z += 8) {
    const __m256i v1 = gather_u16(
        b1, _mm_loadu_si128(reinterpret_cast<const __m128i*>(i1 + z)));
    const __m256i v2 = gather_u16(
        b2, _mm_loadu_si128(reinterpret_cast<const __m128i*>(i2 + z)));
    const __m256i eq = _mm256_cmpeq_epi32(v1, v2);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(eq)) != 0xFF)
      return z + first_diff_lane(v1, v2);
  }
  for (; z < n; ++z)
    if (b1[i1[z]] != b2[i2[z]]) return z;
  return npos;
}

std::size_t gather2d_mismatch(const std::uint16_t* expect,
                              const std::uint16_t* table, std::size_t stride,
                              const std::uint16_t* i, const std::uint16_t* j,
                              std::size_t n) {
  const __m256i vstride = _mm256_set1_epi32(static_cast<int>(stride));
  std::size_t z = 0;
  for (; z + 8 <= n; z += 8) {
    const __m256i vi = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(i + z)));
    const __m256i vj = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(j + z)));
    const __m256i flat = _mm256_add_epi32(_mm256_mullo_epi32(vi, vstride), vj);
    const __m256i raw = _mm256_i32gather_epi32(
        reinterpret_cast<const int*>(table), flat, 2);
    const __m256i got = _mm256_and_si256(raw, _mm256_set1_epi32(0xFFFF));
    const __m256i want = _mm256_cvtepu16_epi32(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(expect + z)));
    const __m256i eq = _mm256_cmpeq_epi32(got, want);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(eq)) != 0xFF)
      return z + first_diff_lane(got, want);
  }
  for (; z < n; ++z)
    if (expect[z] != table[static_cast<std::size_t>(i[z]) * stride + j[z]])
      return z;
  return npos;
}

bool mask_intersects(const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; w < words; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

bool mask_subset(const std::uint64_t* a, const std::uint64_t* b,
                 std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(b + w));
    if (!_mm256_testc_si256(vb, va)) return false;  // (~b & a) != 0
  }
  for (; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

bool mask_equal(const std::uint64_t* a, const std::uint64_t* b,
                std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i va = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(a + w));
    const __m256i vb = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(b + w));
    const __m256i x = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; w < words; ++w)
    if (a[w] != b[w]) return false;
  return true;
}

void mask_or_into(std::uint64_t* dst, const std::uint64_t* src,
                  std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i vd = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(dst + w));
    const __m256i vs = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w),
                        _mm256_or_si256(vd, vs));
  }
  for (; w < words; ++w) dst[w] |= src[w];
}

void mask_and_into(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t words) {
  std::size_t w = 0;
  for (; w + 4 <= words; w += 4) {
    const __m256i vd = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(dst + w));
    const __m256i vs = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w),
                        _mm256_and_si256(vd, vs));
  }
  for (; w < words; ++w) dst[w] &= src[w];
}

std::size_t mask_popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w)
    c += static_cast<std::size_t>(__builtin_popcountll(a[w]));
  return c;
}

}  // namespace

extern const Backend backend;
const Backend backend{
    "avx2",
    gather_mismatch,
    gather2_mismatch,
    gather2d_mismatch,
    mask_intersects,
    mask_subset,
    mask_equal,
    mask_or_into,
    mask_and_into,
    mask_popcount,
};

}  // namespace ringtop::kernels::avx2
