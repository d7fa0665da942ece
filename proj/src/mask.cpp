#include "ringtop/mask.hpp"

namespace ringtop {

SubsetMask SubsetMask::full_set(std::uint32_t universe) {
  SubsetMask m(universe);
  for (std::size_t w = 0; w < m.w_.size(); ++w) m.w_[w] = ~std::uint64_t(0);
  if (universe % 64) m.w_.back() = (std::uint64_t(1) << (universe % 64)) - 1;
  return m;
}

SubsetMask SubsetMask::from_bits(std::uint32_t universe, std::uint32_t bits) {
  assert(universe <= 32);
  SubsetMask m(universe);
  if (!m.w_.empty()) m.w_[0] = bits;
  return m;
}

bool SubsetMask::empty() const {
  for (std::uint64_t w : w_)
    if (w) return false;
  return true;
}

SubsetMask SubsetMask::complement() const {
  SubsetMask m(n_);
  for (std::size_t w = 0; w < w_.size(); ++w) m.w_[w] = ~w_[w];
  if (n_ % 64 && !m.w_.empty())
    m.w_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
  return m;
}

SubsetMask SubsetMask::minus(const SubsetMask& o) const {
  assert(n_ == o.n_);
  SubsetMask m(n_);
  for (std::size_t w = 0; w < w_.size(); ++w) m.w_[w] = w_[w] & ~o.w_[w];
  return m;
}

bool SubsetMask::intersects_excluding(const SubsetMask& o, elem skip) const {
  assert(n_ == o.n_);
  const std::size_t skip_word = skip >> 6;
  const std::uint64_t skip_bit = std::uint64_t(1) << (skip & 63);
  for (std::size_t w = 0; w < w_.size(); ++w) {
    std::uint64_t v = w_[w] & o.w_[w];
    if (w == skip_word) v &= ~skip_bit;
    if (v) return true;
  }
  return false;
}

std::vector<elem> SubsetMask::members() const {
  std::vector<elem> out;
  out.reserve(count());
  for_each([&](elem x) { out.push_back(x); });
  return out;
}

std::uint32_t SubsetMask::as_bits() const {
  assert(n_ <= 32);
  return w_.empty() ? 0u : static_cast<std::uint32_t>(w_[0]);
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](elem x) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  });
  s += '}';
  return s;
}

}  // namespace ringtop
