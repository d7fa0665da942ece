#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops, split out so each gets a scalar reference
// implementation plus SIMD variants selected at runtime. Two families:
//
//  * gather kernels over uint16 Cayley tables -- the O(n^3) ring-axiom
//    sweeps reduce to "does row A equal row B permuted by row C";
//  * bitset kernels over uint64 words -- closure/interior/derived-set
//    sweeps reduce to subset/intersection tests against cached orbit masks.
//
// Gather kernels may read 32 bits at the address of a 16-bit element, so
// every table handed to them must own one spare uint16 past its last entry.

namespace ringtop::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct Backend {
  const char* name;

  // First z in [0,n) with expect[z] != base[idx[z]], or npos.
  std::size_t (*gather_mismatch)(const std::uint16_t* expect,
                                 const std::uint16_t* base,
                                 const std::uint16_t* idx, std::size_t n);
  // First z with b1[i1[z]] != b2[i2[z]], or npos.
  std::size_t (*gather2_mismatch)(const std::uint16_t* b1,
                                  const std::uint16_t* i1,
                                  const std::uint16_t* b2,
                                  const std::uint16_t* i2, std::size_t n);
  // First z with expect[z] != table[i[z]*stride + j[z]], or npos.
  std::size_t (*gather2d_mismatch)(const std::uint16_t* expect,
                                   const std::uint16_t* table,
                                   std::size_t stride, const std::uint16_t* i,
                                   const std::uint16_t* j, std::size_t n);

  bool (*mask_intersects)(const std::uint64_t* a, const std::uint64_t* b,
                          std::size_t words);
  bool (*mask_subset)(const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t words);  // a subset of b
  bool (*mask_equal)(const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words);
  void (*mask_or_into)(std::uint64_t* dst, const std::uint64_t* src,
                       std::size_t words);
  void (*mask_and_into)(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t words);
  std::size_t (*mask_popcount)(const std::uint64_t* a, std::size_t words);
};

const Backend& scalar_backend();

/// AVX2 variants, or nullptr when the binary or the CPU lacks them.
const Backend* avx2_backend();

/// The backend all hot paths route through. Resolution order: explicit
/// select_backend() call, RINGTOP_KERNELS env var ("scalar"/"avx2"), best
/// available.
const Backend& active();

/// name: "auto", "scalar" or "avx2". Throws std::runtime_error if the
/// requested backend is unavailable.
void select_backend(const char* name);

}  // namespace ringtop::kernels
