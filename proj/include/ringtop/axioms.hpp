#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringtop/oracle.hpp"
#include "ringtop/topology.hpp"

namespace ringtop {

struct AxiomWitness {
  std::vector<elem> elements;
  std::optional<SubsetMask> set;  // the failing U or F where one is involved
  std::string detail;
};

/// Each axiom is decided twice: from the definition (via minimal opens or
/// the explicit oracle) and from its power-condition characterization. A
/// witness is attached whenever either flag is false or they disagree.
struct AxiomVerdict {
  std::string axiom;
  bool holds_definitional = false;
  bool holds_characterization = false;
  std::optional<AxiomWitness> witness;
  std::string note;

  bool agree() const { return holds_definitional == holds_characterization; }
  bool holds() const { return holds_definitional && holds_characterization; }
};

/// T0: no two distinct points share every neighborhood. Characterization:
/// never both x = y*a^n and y = x*a^m with n,m >= 1.
AxiomVerdict t0(const TopologySpace& t);
/// T1: singletons are closed. Characterization: x != y*a^n for all
/// distinct x, y and n >= 1.
AxiomVerdict t1(const TopologySpace& t);
/// T2: disjoint neighborhoods exist. Characterization: y*a^m != x*a^n for
/// all distinct x, y and m,n >= 1.
AxiomVerdict t2(const TopologySpace& t);
/// Regularity; needs the powerset oracle, so order <= 16 (throws
/// "oracle-required" beyond). The undefined O_h operator is read as orbit
/// saturation; the verdict note records that interpretation.
AxiomVerdict regular(const TopologySpace& t);

/// Fixed points of the action ({x : xa = x} resp. {x : ax = x}).
/// 0 is always fixed, which makes the unqualified notion vacuous; callers
/// choose whether to exclude it.
std::vector<elem> s_unital_fixed_points(const TopologySpace& t,
                                        bool exclude_zero);

struct CoverSearch {
  /// (element, cover index) with both x and successor(x) in that member.
  std::optional<std::pair<elem, std::size_t>> witness;
};
/// Every member must be open and the family must cover the ring; anything
/// else throws "invalid-cover".
CoverSearch cover_witness(const TopologySpace& t,
                          std::span<const SubsetMask> cover);

}  // namespace ringtop
