#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ringtop/topology.hpp"

namespace ringtop {

/// Ground truth by exhaustive enumeration, for rings of order <= 16: the
/// full list of open sets (all S with S*a inside S) plus definitional
/// recomputations of every operator. Deliberately independent of the orbit
/// engine: the successor map is rebuilt from the Cayley tables and every
/// answer comes from scanning the explicit open list.
///
/// Subsets are uint32 bit masks (bit x = element x). The canonical order of
/// the open list is cardinality first, then numeric mask value.
class ExplicitTopology {
 public:
  static ExplicitTopology enumerate(const TopologySpace& t);

  std::uint32_t universe() const { return n_; }
  std::uint32_t full_mask() const { return full_; }
  std::size_t count() const { return opens_.size(); }
  const std::vector<std::uint32_t>& opens() const { return opens_; }

  bool is_open_bits(std::uint32_t s) const {
    return (image_[s] & ~s & full_) == 0;
  }
  bool is_closed_bits(std::uint32_t s) const {
    return is_open_bits(full_ & ~s);
  }

  std::uint32_t closure_bits(std::uint32_t s) const;
  std::uint32_t interior_bits(std::uint32_t s) const;
  std::uint32_t saturation_bits(std::uint32_t s) const;
  std::uint32_t derived_set_bits(std::uint32_t s) const;
  std::uint32_t limited_points_bits(std::uint32_t s, int min_power) const;
  /// Intersection of all listed opens containing x.
  std::uint32_t minimal_open_of(elem x) const { return min_open_[x]; }

  // SubsetMask-typed conveniences.
  bool is_open(const SubsetMask& s) const { return is_open_bits(s.as_bits()); }
  bool is_closed(const SubsetMask& s) const {
    return is_closed_bits(s.as_bits());
  }
  SubsetMask closure(const SubsetMask& s) const {
    return SubsetMask::from_bits(n_, closure_bits(s.as_bits()));
  }
  SubsetMask interior(const SubsetMask& s) const {
    return SubsetMask::from_bits(n_, interior_bits(s.as_bits()));
  }
  SubsetMask saturation(const SubsetMask& s) const {
    return SubsetMask::from_bits(n_, saturation_bits(s.as_bits()));
  }
  SubsetMask derived_set(const SubsetMask& s) const {
    return SubsetMask::from_bits(n_, derived_set_bits(s.as_bits()));
  }
  SubsetMask limited_points(const SubsetMask& s, int min_power) const {
    return SubsetMask::from_bits(n_,
                                 limited_points_bits(s.as_bits(), min_power));
  }

  struct Connectivity {
    bool connected;
    std::optional<std::uint32_t> clopen_witness;  // first in canonical order
  };
  Connectivity connected() const;

  struct PairwiseReport {
    bool has_empty = false;
    bool has_full = false;
    bool union_closed = false;
    bool intersection_closed = false;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
    /// Set when the list is the whole powerset, which is closed under any
    /// boolean combination without scanning the quadratic pair space.
    bool used_powerset_shortcut = false;
    bool ok() const {
      return has_empty && has_full && union_closed && intersection_closed;
    }
  };
  /// Pairwise union/intersection closure over the explicit list.
  PairwiseReport verify_pairwise_closure(unsigned threads = 0) const;

  /// Every engine base open appears in the list.
  bool contains_engine_base(const TopologySpace& t) const;

  /// Independent recount of successor-closed subsets by branch-and-propagate
  /// over the subset lattice; no image table involved. Requires order <= 10.
  static std::uint64_t count_by_lattice_dfs(const TopologySpace& t);

 private:
  std::uint32_t n_ = 0;
  std::uint32_t full_ = 0;
  std::vector<elem> succ_;             // rebuilt from the ring tables
  std::vector<std::uint32_t> opens_;   // canonical order
  std::vector<std::uint32_t> image_;   // image[m] = union of successor bits
  std::vector<std::uint32_t> min_open_;
  std::vector<std::uint32_t> fwd0_, fwd1_;  // {y*a^n : n>=0} / {n>=1}
};

}  // namespace ringtop
