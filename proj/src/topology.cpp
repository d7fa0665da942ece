#include "ringtop/topology.hpp"

#include <numeric>

namespace ringtop {

TopologySpace::TopologySpace(std::shared_ptr<const FiniteRing> ring, elem a,
                             ActionSide side)
    : ring_(std::move(ring)), a_(a), side_(side) {
  const std::uint32_t n = ring_->order;
  if (a_ >= n)
    throw error("bad-element", "acting element index out of range", {a_});

  succ_.resize(n);
  for (elem x = 0; x < n; ++x)
    succ_[x] = side_ == ActionSide::right ? ring_->mul(x, a_)
                                          : ring_->mul(a_, x);

  // Forward-walk each element; the walk's first repeated node splits the
  // path into tail and cycle. stamp/pos give O(1) "seen in this walk".
  orbits_.reserve(n);
  std::vector<std::uint32_t> stamp(n, n), pos(n, 0);
  std::vector<elem> path;
  for (elem x = 0; x < n; ++x) {
    path.clear();
    elem z = x;
    while (stamp[z] != x) {
      stamp[z] = x;
      pos[z] = std::uint32_t(path.size());
      path.push_back(z);
      z = succ_[z];
    }
    OrbitSet o;
    o.members = SubsetMask(n);
    o.entry = x;
    o.tail_length = pos[z];
    o.cycle_length = std::uint32_t(path.size()) - pos[z];
    for (elem p : path) o.members.set(p);
    orbits_.push_back(std::move(o));
  }

  // Weak components via union-find on x ~ successor(x).
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (elem x = 0; x < n; ++x) {
    const std::uint32_t rx = find(x), rs = find(succ_[x]);
    if (rx != rs) parent[rx] = rs;
  }
  component_.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, n);
  for (elem x = 0; x < n; ++x) {
    const std::uint32_t r = find(x);
    if (id_of_root[r] == n) {
      id_of_root[r] = component_count_++;
      component_rep_.push_back(x);
    }
    component_[x] = id_of_root[r];
  }
}

bool TopologySpace::successor_is_identity() const {
  for (elem x = 0; x < order(); ++x)
    if (succ_[x] != x) return false;
  return true;
}

bool TopologySpace::is_open(const SubsetMask& s) const {
  bool open = true;
  s.for_each([&](elem x) { open = open && s.test(succ_[x]); });
  return open;
}

bool TopologySpace::is_closed(const SubsetMask& s) const {
  // Complement must be successor-closed: x outside s never steps into s.
  for (elem x = 0; x < order(); ++x)
    if (!s.test(x) && s.test(succ_[x])) return false;
  return true;
}

SubsetMask TopologySpace::closure(const SubsetMask& s) const {
  SubsetMask out(order());
  for (elem x = 0; x < order(); ++x)
    if (orbits_[x].members.intersects(s)) out.set(x);
  return out;
}

SubsetMask TopologySpace::interior(const SubsetMask& s) const {
  SubsetMask out(order());
  s.for_each([&](elem x) {
    if (orbits_[x].members.is_subset_of(s)) out.set(x);
  });
  return out;
}

SubsetMask TopologySpace::derived_set(const SubsetMask& s) const {
  SubsetMask out(order());
  for (elem x = 0; x < order(); ++x)
    if (orbits_[x].members.intersects_excluding(s, x)) out.set(x);
  return out;
}

SubsetMask TopologySpace::limited_points(const SubsetMask& s,
                                         int min_power) const {
  if (min_power != 0 && min_power != 1)
    throw error("invalid-argument", "min_power must be 0 or 1");
  const std::uint32_t n = order();
  auto fwd = [&](elem y) -> const SubsetMask& {
    return orbits_[min_power == 0 ? y : succ_[y]].members;
  };

  SubsetMask any_fwd(n);
  const std::vector<elem> ys = s.members();
  for (elem y : ys) any_fwd |= fwd(y);

  SubsetMask out(n);
  for (elem x = 0; x < n; ++x) {
    const SubsetMask& ox = orbits_[x].members;
    if (!ox.intersects(any_fwd)) continue;
    if (!s.test(x)) {
      out.set(x);
      continue;
    }
    for (elem y : ys)
      if (y != x && ox.intersects(fwd(y))) {
        out.set(x);
        break;
      }
  }
  return out;
}

SubsetMask TopologySpace::saturation(const SubsetMask& s) const {
  SubsetMask out(order());
  s.for_each([&](elem x) { out |= orbits_[x].members; });
  return out;
}

SubsetMask TopologySpace::hat_preimage(const SubsetMask& s) const {
  SubsetMask out(order());
  for (elem x = 0; x < order(); ++x)
    if (s.test(succ_[x])) out.set(x);
  return out;
}

bool TopologySpace::is_continuous_self_map(std::span<const elem> g) const {
  const std::uint32_t n = order();
  if (g.size() != n)
    throw error("invalid-argument", "self-map must be total on the ring");
  for (elem b = 0; b < n; ++b) {
    const SubsetMask& base_open = orbits_[b].members;
    SubsetMask preimage(n);
    for (elem x = 0; x < n; ++x)
      if (base_open.test(g[x])) preimage.set(x);
    if (!is_open(preimage)) return false;
  }
  return true;
}

std::vector<std::vector<elem>> TopologySpace::connected_components() const {
  std::vector<std::vector<elem>> blocks(component_count_);
  for (elem x = 0; x < order(); ++x) blocks[component_[x]].push_back(x);
  return blocks;
}

bool TopologySpace::is_union_of_components(const SubsetMask& s) const {
  for (elem x = 0; x < order(); ++x)
    if (s.test(x) != s.test(component_rep_[component_[x]])) return false;
  return true;
}

SubsetMask TopologySpace::clopen_orbit_closure(elem x) const {
  SubsetMask c = closure(orbits_[x].members);
  if (!is_open(c) || !is_closed(c))
    throw error("engine-invariant",
                "closure(orbit(x)) is not clopen; engine bug", {x});
  return c;
}

FixedPointAudit TopologySpace::fixed_point_audit(elem x0) const {
  if (x0 >= order())
    throw error("bad-element", "start element index out of range", {x0});
  FixedPointAudit audit;
  audit.hypothesis2_holds = true;
  for (elem x = 0; x < order(); ++x) {
    if (succ_[x] == x) continue;
    const elem xa2 = succ_[succ_[x]];
    if (closure(orbits_[xa2].members).test(x)) {
      audit.hypothesis2_holds = false;
      audit.hypothesis2_violator = x;
      break;
    }
  }
  if (audit.hypothesis2_holds) {
    const SubsetMask c = closure(orbits_[x0].members);
    for (elem y = 0; y < order(); ++y)
      if (c.test(y) && succ_[y] == y) {
        audit.fixed_point = y;
        break;
      }
  }
  return audit;
}

}  // namespace ringtop
