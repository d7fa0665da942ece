#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ringtop/mask.hpp"
#include "ringtop/ring.hpp"
#include "ringtop/types.hpp"

namespace ringtop {

/// The forward orbit {x, xa, xa^2, ...}: the minimal open set containing x.
/// tail_length steps lead into a terminal cycle of cycle_length elements.
struct OrbitSet {
  SubsetMask members;
  elem entry = 0;
  std::uint32_t tail_length = 0;
  std::uint32_t cycle_length = 0;

  std::uint32_t period() const { return tail_length + cycle_length; }
};

struct FixedPointAudit {
  /// Finite spaces are compact, so the compactness hypothesis always holds.
  bool compactness_automatic = true;
  /// "if xa != x then x is outside the closure of the orbit of xa^2", for
  /// all x.
  bool hypothesis2_holds = false;
  std::optional<elem> hypothesis2_violator;
  std::optional<elem> fixed_point;
};

/// A finite ring equipped with the topology whose opens are exactly the
/// subsets closed under the successor map x -> x*a (right) or x -> a*x
/// (left). This is an Alexandrov topology: the orbit base determines every
/// operator, so nothing here ever enumerates open sets.
class TopologySpace {
 public:
  TopologySpace(std::shared_ptr<const FiniteRing> ring, elem a,
                ActionSide side = ActionSide::right);

  const FiniteRing& ring() const { return *ring_; }
  const std::shared_ptr<const FiniteRing>& ring_ptr() const { return ring_; }
  elem acting_element() const { return a_; }
  ActionSide side() const { return side_; }
  std::uint32_t order() const { return ring_->order; }

  elem successor(elem x) const { return succ_[x]; }
  std::span<const elem> successor_map() const { return succ_; }
  bool successor_is_identity() const;

  const OrbitSet& orbit(elem x) const { return orbits_[x]; }

  bool is_open(const SubsetMask& s) const;
  bool is_closed(const SubsetMask& s) const;
  SubsetMask closure(const SubsetMask& s) const;
  SubsetMask interior(const SubsetMask& s) const;
  /// Cluster points: x such that some other point of s lies in every open
  /// neighborhood of x.
  SubsetMask derived_set(const SubsetMask& s) const;
  /// x such that y*a^n lands in every neighborhood of x for some y in
  /// s\{x}, n >= min_power. min_power must be 0 or 1.
  SubsetMask limited_points(const SubsetMask& s, int min_power) const;
  /// Union of member orbits: the smallest open superset.
  SubsetMask saturation(const SubsetMask& s) const;
  /// {x | successor(x) in s}.
  SubsetMask hat_preimage(const SubsetMask& s) const;

  /// True iff the preimage of every base open under g is open.
  bool is_continuous_self_map(std::span<const elem> g) const;

  std::uint32_t component_count() const { return component_count_; }
  std::uint32_t component_of(elem x) const { return component_[x]; }
  /// Weak components of the successor graph, ordered by smallest member.
  std::vector<std::vector<elem>> connected_components() const;
  bool is_union_of_components(const SubsetMask& s) const;

  /// closure(orbit(x)), asserted clopen; a failure would be an engine bug.
  SubsetMask clopen_orbit_closure(elem x) const;

  FixedPointAudit fixed_point_audit(elem x0) const;

 private:
  std::shared_ptr<const FiniteRing> ring_;
  elem a_;
  ActionSide side_;
  std::vector<elem> succ_;
  std::vector<OrbitSet> orbits_;
  std::vector<std::uint32_t> component_;
  std::vector<elem> component_rep_;
  std::uint32_t component_count_ = 0;
};

/// Graphviz rendering of the successor graph: one node per element in index
/// order, one edge x -> successor(x), nodes colored by weak component.
std::string to_dot(const TopologySpace& t);

}  // namespace ringtop
