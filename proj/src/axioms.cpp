#include "ringtop/axioms.hpp"

namespace ringtop {

namespace {

// {x*a^n : n >= 1}, walked directly off the successor map.
SubsetMask forward_powers(const TopologySpace& t, elem x) {
  SubsetMask seen(t.order());
  for (elem z = t.successor(x); !seen.test(z); z = t.successor(z)) seen.set(z);
  return seen;
}

void note_pair_witness(AxiomVerdict& v, elem x, elem y, const char* which) {
  if (!v.witness) v.witness = AxiomWitness{{x, y}, std::nullopt, which};
}

}  // namespace

AxiomVerdict t0(const TopologySpace& t) {
  AxiomVerdict v{"T0", true, true, std::nullopt, ""};
  std::vector<SubsetMask> fwd1(t.order(), SubsetMask(0));
  for (elem x = 0; x < t.order(); ++x) fwd1[x] = forward_powers(t, x);

  for (elem x = 0; x < t.order(); ++x)
    for (elem y = elem(x + 1); y < t.order(); ++y) {
      // Definitional via minimal opens: some orbit must miss one of them.
      const bool def_ok =
          !(t.orbit(y).members.test(x) && t.orbit(x).members.test(y));
      const bool chr_ok = !(fwd1[y].test(x) && fwd1[x].test(y));
      if (!def_ok) {
        v.holds_definitional = false;
        note_pair_witness(v, x, y, "each lies in every neighborhood of the other");
      }
      if (!chr_ok) {
        v.holds_characterization = false;
        note_pair_witness(v, x, y, "x = y*a^n and y = x*a^m with n,m >= 1");
      }
    }
  return v;
}

AxiomVerdict t1(const TopologySpace& t) {
  AxiomVerdict v{"T1", true, true, std::nullopt, ""};
  for (elem x = 0; x < t.order() && v.holds_definitional; ++x)
    if (!t.is_closed(SubsetMask::single(t.order(), x))) {
      v.holds_definitional = false;
      v.witness = AxiomWitness{{x}, std::nullopt, "singleton {x} is not closed"};
    }
  for (elem x = 0; x < t.order(); ++x) {
    const SubsetMask fwd = forward_powers(t, x);
    for (elem y = 0; y < t.order(); ++y)
      if (y != x && fwd.test(y)) {
        v.holds_characterization = false;
        note_pair_witness(v, x, y, "y = x*a^n with n >= 1");
      }
  }
  return v;
}

AxiomVerdict t2(const TopologySpace& t) {
  AxiomVerdict v{"T2", true, true, std::nullopt, ""};
  std::vector<SubsetMask> fwd1(t.order(), SubsetMask(0));
  for (elem x = 0; x < t.order(); ++x) fwd1[x] = forward_powers(t, x);

  for (elem x = 0; x < t.order(); ++x)
    for (elem y = elem(x + 1); y < t.order(); ++y) {
      if (t.orbit(x).members.intersects(t.orbit(y).members)) {
        v.holds_definitional = false;
        note_pair_witness(v, x, y, "minimal opens of x and y intersect");
      }
      if (fwd1[x].intersects(fwd1[y])) {
        v.holds_characterization = false;
        note_pair_witness(v, x, y, "x*a^n = y*a^m with n,m >= 1");
      }
    }
  return v;
}

AxiomVerdict regular(const TopologySpace& t) {
  if (t.order() > kOracleMaxOrder)
    throw error("oracle-required",
                "regularity needs closed-set enumeration; order is capped at " +
                    std::to_string(kOracleMaxOrder));
  const ExplicitTopology oracle = ExplicitTopology::enumerate(t);
  const std::uint32_t full = oracle.full_mask();

  AxiomVerdict v{"regular", true, true, std::nullopt,
                 "O_h read as orbit saturation"};

  // O(F) as the union of per-point minimal opens, precomputed so the
  // (x, closed set) double loop stays linear per set.
  auto saturate = [&](std::uint32_t s) {
    std::uint32_t acc = 0;
    for (elem y = 0; y < t.order(); ++y)
      if (s >> y & 1) acc |= oracle.minimal_open_of(y);
    return acc;
  };

  // Definitional: closed F avoiding x, other than the complement of the
  // minimal open of x, must have saturation disjoint from that minimal open.
  for (elem x = 0; x < t.order() && v.holds_definitional; ++x) {
    const std::uint32_t mx = oracle.minimal_open_of(x);
    for (std::uint32_t u : oracle.opens()) {
      const std::uint32_t f = full & ~u;
      if (f >> x & 1) continue;
      if (f == (full & ~mx)) continue;
      if (saturate(f) & mx) {
        v.holds_definitional = false;
        v.witness = AxiomWitness{{x},
                                 SubsetMask::from_bits(t.order(), f),
                                 "saturation of closed F meets the minimal "
                                 "open of x"};
        break;
      }
    }
  }

  // Characterization: every open U with x in U, U inside the minimal open,
  // must trap the closure of that minimal open.
  for (elem x = 0; x < t.order() && v.holds_characterization; ++x) {
    const std::uint32_t mx = oracle.minimal_open_of(x);
    const std::uint32_t cl = oracle.closure_bits(mx);
    for (std::uint32_t u : oracle.opens()) {
      if (!(u >> x & 1) || (u & ~mx)) continue;
      if (cl & ~u) {
        v.holds_characterization = false;
        if (!v.witness)
          v.witness = AxiomWitness{{x},
                                   SubsetMask::from_bits(t.order(), u),
                                   "closure of the minimal open of x "
                                   "escapes U"};
        break;
      }
    }
  }
  return v;
}

std::vector<elem> s_unital_fixed_points(const TopologySpace& t,
                                        bool exclude_zero) {
  std::vector<elem> out;
  for (elem x = 0; x < t.order(); ++x)
    if (t.successor(x) == x && !(exclude_zero && x == t.ring().zero))
      out.push_back(x);
  return out;
}

CoverSearch cover_witness(const TopologySpace& t,
                          std::span<const SubsetMask> cover) {
  SubsetMask covered(t.order());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!t.is_open(cover[i]))
      throw error("invalid-cover",
                  "cover member " + std::to_string(i) + " is not open");
    covered |= cover[i];
  }
  if (!covered.is_full())
    throw error("invalid-cover", "family does not cover the ring");

  CoverSearch result;
  for (std::size_t i = 0; i < cover.size() && !result.witness; ++i) {
    const auto ms = cover[i].members();
    for (elem x : ms)
      if (cover[i].test(t.successor(x))) {
        result.witness = {x, i};
        break;
      }
  }
  return result;
}

}  // namespace ringtop
