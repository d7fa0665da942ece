#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ringtop/mask.hpp"
#include "ringtop/types.hpp"

namespace ringtop {

/// Axiom violation found while validating Cayley tables. kind() is always
/// "axiom-violation"; axiom() names the broken law, witness() the elements.
class axiom_error : public error {
 public:
  axiom_error(std::string axiom, std::string message, std::vector<elem> witness)
      : error("axiom-violation", axiom + ": " + message, std::move(witness)),
        axiom_(std::move(axiom)) {}
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// A finite unital ring as a pair of dense Cayley tables over indices
/// 0..order-1. Immutable once built; every constructor validates all ring
/// axioms exhaustively (the quantifier sweeps run through the SIMD kernels).
struct FiniteRing {
  std::string spec;  // canonical shorthand ("zn:6", "ut:f2", ...)
  std::uint32_t order = 0;
  elem zero = 0;
  elem one = 0;
  bool commutative = false;
  std::vector<std::string> labels;
  std::vector<elem> neg;  // additive inverse per element

  elem add(elem x, elem y) const {
    return add_tab_[std::size_t(x) * order + y];
  }
  elem mul(elem x, elem y) const {
    return mul_tab_[std::size_t(x) * order + y];
  }
  elem one_minus(elem e) const { return add(one, neg[e]); }

  const elem* add_row(elem x) const {
    return add_tab_.data() + std::size_t(x) * order;
  }
  const elem* mul_row(elem x) const {
    return mul_tab_.data() + std::size_t(x) * order;
  }
  const elem* add_table() const { return add_tab_.data(); }
  const elem* mul_table() const { return mul_tab_.data(); }

  const std::string& label(elem x) const { return labels[x]; }
  std::optional<elem> element_by_label(std::string_view s) const;

  /// Tables are stored with one trailing pad element (gather kernels may
  /// read 32 bits at the last entry's address).
  static FiniteRing from_tables(std::string spec, std::uint32_t order,
                                std::vector<elem> add, std::vector<elem> mul,
                                elem zero, elem one,
                                std::vector<std::string> labels = {});

 private:
  std::vector<elem> add_tab_, mul_tab_;
  std::unordered_map<std::string, elem> by_label_;
};

FiniteRing build_zn(std::uint32_t n);
FiniteRing build_matrix_ring(const FiniteRing& base, std::uint32_t k);
FiniteRing build_upper_triangular(const FiniteRing& base);
FiniteRing build_product(const FiniteRing& r1, const FiniteRing& r2);
/// Validates user-supplied tables; throws axiom_error naming the first
/// violated axiom with its witnessing elements.
FiniteRing build_from_tables(std::uint32_t order, std::vector<elem> add,
                             std::vector<elem> mul, elem zero, elem one,
                             std::vector<std::string> labels = {},
                             std::string spec = "tables");

bool is_idempotent(const FiniteRing& r, elem e);
/// All e with e*e == e, ascending. Always contains zero and one.
std::vector<elem> idempotents(const FiniteRing& r);

/// {x*a | x in R}: the set swept out by right multiplication.
SubsetMask left_set(const FiniteRing& r, elem a);
/// Image of the action map: Ra for right, aR for left.
SubsetMask action_image(const FiniteRing& r, elem a, ActionSide side);

/// The splitting R = Re ⊕ R(1-e) (right side; eR ⊕ (1-e)R for left).
/// fixed_part is pointwise fixed by the action of e; kernel_part is sent
/// to zero. 1-e is computed as one + (-e).
struct PierceSplit {
  elem e;
  ActionSide side;
  SubsetMask fixed_part;
  SubsetMask kernel_part;
  bool direct_sum_verified;
};
PierceSplit pierce_decompose(const FiniteRing& r, elem e,
                             ActionSide side = ActionSide::right);

}  // namespace ringtop
