#include "ringtop/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace ringtop {

ExplicitTopology ExplicitTopology::enumerate(const TopologySpace& t) {
  const std::uint32_t n = t.order();
  if (n > kOracleMaxOrder)
    throw error("too-large",
                "powerset oracle handles order <= " +
                    std::to_string(kOracleMaxOrder) + ", got " +
                    std::to_string(n));

  ExplicitTopology et;
  et.n_ = n;
  et.full_ = n == 32 ? ~0u : (1u << n) - 1;

  // Successor rebuilt straight from the Cayley tables.
  const FiniteRing& r = t.ring();
  const elem a = t.acting_element();
  et.succ_.resize(n);
  for (elem x = 0; x < n; ++x)
    et.succ_[x] =
        t.side() == ActionSide::right ? r.mul(x, a) : r.mul(a, x);

  std::vector<std::uint32_t> succ_bit(n);
  for (elem x = 0; x < n; ++x) succ_bit[x] = 1u << et.succ_[x];

  const std::uint32_t count = et.full_ == ~0u ? 0 : et.full_ + 1;
  et.image_.resize(std::size_t(count));
  et.image_[0] = 0;
  for (std::uint32_t m = 1; m < count; ++m)
    et.image_[m] = et.image_[m & (m - 1)] |
                   succ_bit[std::uint32_t(std::countr_zero(m))];

  for (std::uint32_t m = 0; m < count; ++m)
    if ((et.image_[m] & ~m) == 0) et.opens_.push_back(m);
  std::stable_sort(et.opens_.begin(), et.opens_.end(),
                   [](std::uint32_t a_, std::uint32_t b_) {
                     return std::popcount(a_) < std::popcount(b_);
                   });

  et.min_open_.assign(n, et.full_);
  for (std::uint32_t u : et.opens_)
    for (elem x = 0; x < n; ++x)
      if (u >> x & 1) et.min_open_[x] &= u;

  et.fwd0_.resize(n);
  et.fwd1_.resize(n);
  for (elem y = 0; y < n; ++y) {
    std::uint32_t seen = 0;
    for (elem z = y; !(seen >> z & 1); z = et.succ_[z]) seen |= 1u << z;
    et.fwd0_[y] = seen;
    seen = 0;
    for (elem z = et.succ_[y]; !(seen >> z & 1); z = et.succ_[z])
      seen |= 1u << z;
    et.fwd1_[y] = seen;
  }
  return et;
}

std::uint32_t ExplicitTopology::closure_bits(std::uint32_t s) const {
  // Smallest closed superset: intersect every closed superset.
  std::uint32_t acc = full_;
  for (std::uint32_t u : opens_) {
    const std::uint32_t closed = full_ & ~u;
    if ((s & ~closed) == 0) acc &= closed;
  }
  return acc;
}

std::uint32_t ExplicitTopology::interior_bits(std::uint32_t s) const {
  // Largest open subset: union every open contained in s.
  std::uint32_t acc = 0;
  for (std::uint32_t u : opens_)
    if ((u & ~s) == 0) acc |= u;
  return acc;
}

std::uint32_t ExplicitTopology::saturation_bits(std::uint32_t s) const {
  // Smallest open superset; intersections of opens are open here.
  std::uint32_t acc = full_;
  for (std::uint32_t u : opens_)
    if ((s & ~u) == 0) acc &= u;
  return acc;
}

std::uint32_t ExplicitTopology::derived_set_bits(std::uint32_t s) const {
  std::uint32_t out = 0;
  for (elem x = 0; x < n_; ++x) {
    const std::uint32_t punctured = s & ~(1u << x);
    bool cluster = true;
    for (std::uint32_t u : opens_)
      if ((u >> x & 1) && (u & punctured) == 0) {
        cluster = false;
        break;
      }
    if (cluster) out |= 1u << x;
  }
  return out;
}

std::uint32_t ExplicitTopology::limited_points_bits(std::uint32_t s,
                                                    int min_power) const {
  if (min_power != 0 && min_power != 1)
    throw error("invalid-argument", "min_power must be 0 or 1");
  const auto& fwd = min_power == 0 ? fwd0_ : fwd1_;
  std::uint32_t out = 0;
  for (elem x = 0; x < n_; ++x) {
    std::uint32_t reach = 0;  // anything some y in s\{x} can push forward
    for (elem y = 0; y < n_; ++y)
      if ((s >> y & 1) && y != x) reach |= fwd[y];
    bool limited = true;
    for (std::uint32_t u : opens_)
      if ((u >> x & 1) && (u & reach) == 0) {
        limited = false;
        break;
      }
    if (limited) out |= 1u << x;
  }
  return out;
}

ExplicitTopology::Connectivity ExplicitTopology::connected() const {
  for (std::uint32_t u : opens_)
    if (u != 0 && u != full_ && is_open_bits(full_ & ~u))
      return {false, u};
  return {true, std::nullopt};
}

ExplicitTopology::PairwiseReport ExplicitTopology::verify_pairwise_closure(
    unsigned threads) const {
  PairwiseReport rep;
  rep.has_empty = !opens_.empty() && opens_.front() == 0;
  rep.has_full = std::find(opens_.begin(), opens_.end(), full_) != opens_.end();

  if (opens_.size() == std::size_t(full_) + 1) {
    // The list is the entire powerset; unions and intersections of subsets
    // are subsets, so closure holds without the quadratic sweep.
    rep.union_closed = rep.intersection_closed = true;
    rep.used_powerset_shortcut = true;
    return rep;
  }

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t m = opens_.size();
  struct Hit {
    std::size_t i = std::size_t(-1), j = std::size_t(-1);
    bool union_bad = false;
  };
  std::vector<Hit> hits(threads);
  std::atomic<std::size_t> next_row{0};

  auto worker = [&](unsigned tid) {
    Hit& hit = hits[tid];
    for (;;) {
      const std::size_t i = next_row.fetch_add(1);
      if (i >= m) return;
      const std::uint32_t u = opens_[i];
      for (std::size_t j = i; j < m; ++j) {
        const std::uint32_t v = opens_[j];
        const std::uint32_t uni = u | v, inter = u & v;
        if (!is_open_bits(uni)) {
          if (i < hit.i || (i == hit.i && j < hit.j))
            hit = {i, j, true};
          break;
        }
        if (!is_open_bits(inter)) {
          if (i < hit.i || (i == hit.i && j < hit.j))
            hit = {i, j, false};
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned tid = 1; tid < threads; ++tid) pool.emplace_back(worker, tid);
  worker(0);
  for (auto& th : pool) th.join();

  Hit best;
  for (const Hit& h : hits)
    if (h.i < best.i || (h.i == best.i && h.j < best.j)) best = h;

  if (best.i == std::size_t(-1)) {
    rep.union_closed = rep.intersection_closed = true;
  } else {
    rep.union_closed = !best.union_bad;
    rep.intersection_closed = best.union_bad;
    rep.witness = {opens_[best.i], opens_[best.j]};
  }
  return rep;
}

bool ExplicitTopology::contains_engine_base(const TopologySpace& t) const {
  for (elem x = 0; x < n_; ++x)
    if (!is_open_bits(t.orbit(x).members.as_bits())) return false;
  return true;
}

std::uint64_t ExplicitTopology::count_by_lattice_dfs(const TopologySpace& t) {
  const std::uint32_t n = t.order();
  if (n > 10)
    throw error("too-large", "lattice DFS recount is capped at order 10");

  const FiniteRing& r = t.ring();
  const elem a = t.acting_element();
  std::vector<elem> succ(n);
  std::vector<std::vector<elem>> preds(n);
  for (elem x = 0; x < n; ++x) {
    succ[x] = t.side() == ActionSide::right ? r.mul(x, a) : r.mul(a, x);
    preds[succ[x]].push_back(x);
  }

  // Branch on the first undecided element; IN forces the successor chain
  // in, OUT forces the predecessor cone out.
  std::vector<signed char> state(n, -1);
  std::vector<elem> trail;
  auto assign = [&](elem x, signed char v) {
    state[x] = v;
    trail.push_back(x);
  };
  auto propagate_in = [&](elem x0) {
    for (elem z = x0; state[z] != 1; z = succ[z]) {
      if (state[z] == 0) return false;
      assign(z, 1);
    }
    return true;
  };
  std::vector<elem> stack;
  auto propagate_out = [&](elem x0) {
    stack.assign(1, x0);
    while (!stack.empty()) {
      const elem z = stack.back();
      stack.pop_back();
      if (state[z] == 1) return false;
      if (state[z] == 0) continue;
      assign(z, 0);
      for (elem p : preds[z]) stack.push_back(p);
    }
    return true;
  };

  std::uint64_t total = 0;
  auto dfs = [&](auto&& self, elem from) -> void {
    elem x = from;
    while (x < n && state[x] != -1) ++x;
    if (x == n) {
      ++total;
      return;
    }
    for (int branch = 0; branch < 2; ++branch) {
      const std::size_t mark = trail.size();
      const bool ok = branch == 0 ? propagate_in(x) : propagate_out(x);
      if (ok) self(self, elem(x + 1));
      while (trail.size() > mark) {
        state[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };
  dfs(dfs, 0);
  return total;
}

}  // namespace ringtop
