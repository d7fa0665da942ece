#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "ringtop/kernels.hpp"
#include "ringtop/types.hpp"

namespace ringtop {

/// A subset of the ring's element universe [0, n) with O(1) membership.
/// The currency of every topological operator. Unused tail bits stay zero.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::uint32_t universe)
      : n_(universe), w_((universe + 63) / 64, 0) {}

  static SubsetMask empty_set(std::uint32_t universe) {
    return SubsetMask(universe);
  }
  static SubsetMask full_set(std::uint32_t universe);
  static SubsetMask single(std::uint32_t universe, elem x) {
    SubsetMask m(universe);
    m.set(x);
    return m;
  }
  static SubsetMask of(std::uint32_t universe, std::initializer_list<elem> xs) {
    SubsetMask m(universe);
    for (elem x : xs) m.set(x);
    return m;
  }
  /// For oracle interop on universes of at most 32 elements.
  static SubsetMask from_bits(std::uint32_t universe, std::uint32_t bits);

  std::uint32_t universe() const { return n_; }
  std::size_t word_count() const { return w_.size(); }
  const std::uint64_t* words() const { return w_.data(); }
  std::uint64_t* words() { return w_.data(); }

  bool test(elem x) const {
    assert(x < n_);
    return (w_[x >> 6] >> (x & 63)) & 1u;
  }
  void set(elem x) {
    assert(x < n_);
    w_[x >> 6] |= std::uint64_t(1) << (x & 63);
  }
  void reset(elem x) {
    assert(x < n_);
    w_[x >> 6] &= ~(std::uint64_t(1) << (x & 63));
  }

  std::size_t count() const {
    return kernels::active().mask_popcount(w_.data(), w_.size());
  }
  bool empty() const;
  bool is_full() const { return count() == n_; }

  SubsetMask& operator|=(const SubsetMask& o) {
    assert(n_ == o.n_);
    kernels::active().mask_or_into(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  SubsetMask& operator&=(const SubsetMask& o) {
    assert(n_ == o.n_);
    kernels::active().mask_and_into(w_.data(), o.w_.data(), w_.size());
    return *this;
  }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) {
    a |= b;
    return a;
  }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) {
    a &= b;
    return a;
  }

  SubsetMask complement() const;
  /// this \ o
  SubsetMask minus(const SubsetMask& o) const;

  bool intersects(const SubsetMask& o) const {
    assert(n_ == o.n_);
    return kernels::active().mask_intersects(w_.data(), o.w_.data(), w_.size());
  }
  /// Does this ∩ o contain anything besides (possibly) `skip`?
  bool intersects_excluding(const SubsetMask& o, elem skip) const;
  bool is_subset_of(const SubsetMask& o) const {
    assert(n_ == o.n_);
    return kernels::active().mask_subset(w_.data(), o.w_.data(), w_.size());
  }
  bool operator==(const SubsetMask& o) const {
    return n_ == o.n_ &&
           kernels::active().mask_equal(w_.data(), o.w_.data(), w_.size());
  }

  std::vector<elem> members() const;
  std::uint32_t as_bits() const;  // universe must be <= 32

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < w_.size(); ++w) {
      std::uint64_t bits = w_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// "{0,2,4}" by element index; "{}" when empty.
  std::string to_string() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ringtop
