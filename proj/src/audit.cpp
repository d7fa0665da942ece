#include "ringtop/audit.hpp"

#include <algorithm>

#include "ringtop/ringspec.hpp"

namespace ringtop {

namespace {

// ---------------------------------------------------------------- rng ------
// Deterministic across platforms and corpus iteration order: every sampling
// site derives its stream from (corpus seed, claim, instance).

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t bounded(std::uint64_t n) { return n ? next() % n : 0; }
};

SplitMix stream_for(const AuditCorpus& corpus, std::string_view purpose,
                    const Instance& inst) {
  std::uint64_t h = fnv1a(purpose, corpus.seed() ^ 0x9e3779b97f4a7c15ull);
  h = fnv1a(inst.ring_spec, h);
  h = fnv1a(to_string(inst.side), h);
  h ^= (std::uint64_t(inst.a) + 1) * 0xff51afd7ed558ccdull;
  return SplitMix{h};
}

SubsetMask random_subset(std::uint32_t n, SplitMix& rng) {
  SubsetMask m(n);
  for (std::size_t w = 0; w < m.word_count(); ++w) m.words()[w] = rng.next();
  if (n % 64) m.words()[m.word_count() - 1] &= (std::uint64_t(1) << (n % 64)) - 1;
  return m;
}

// ------------------------------------------------------------- helpers -----

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string replay_command(const char* subcommand, const Instance& inst,
                           const FiniteRing& r) {
  std::string cmd = std::string(subcommand) + " --ring " + inst.ring_spec;
  cmd += subcommand == std::string("pierce") ? " --e " : " --a ";
  cmd += quoted(r.label(inst.a));
  cmd += " --side ";
  cmd += to_string(inst.side);
  return cmd;
}

nlohmann::ordered_json instance_json(const Instance& inst,
                                     const FiniteRing& r) {
  return {{"ring", inst.ring_spec},
          {"a", r.label(inst.a)},
          {"side", to_string(inst.side)}};
}

nlohmann::json mask_members(const SubsetMask& m, const FiniteRing& r) {
  nlohmann::json arr = nlohmann::json::array();
  m.for_each([&](elem x) { arr.push_back(r.label(x)); });
  return arr;
}

struct ClaimContext {
  const AuditCorpus& corpus;
  const Instance& inst;
  const TopologySpace& t;
  const ExplicitTopology* oracle;  // nullptr beyond oracle range

  const FiniteRing& ring() const { return t.ring(); }
  std::uint32_t n() const { return t.order(); }
};

InstanceResult holds_result(const ClaimContext& cx,
                            nlohmann::ordered_json guard = {}) {
  InstanceResult res;
  res.instance = cx.inst;
  res.verdict = Verdict::holds;
  res.guard = std::move(guard);
  return res;
}

InstanceResult fails_result(const ClaimContext& cx,
                            nlohmann::ordered_json witness,
                            nlohmann::ordered_json guard = {}) {
  InstanceResult res;
  res.instance = cx.inst;
  res.verdict = Verdict::fails;
  res.witness = std::move(witness);
  res.guard = std::move(guard);
  return res;
}

InstanceResult na_result(const ClaimContext& cx, std::string reason,
                         nlohmann::ordered_json guard = {}) {
  InstanceResult res;
  res.instance = cx.inst;
  res.verdict = Verdict::not_applicable;
  res.reason = std::move(reason);
  res.guard = std::move(guard);
  return res;
}

// ------------------------------------------------------------ per claim ----

InstanceResult audit_prop_2_2(const ClaimContext& cx) {
  nlohmann::ordered_json guard{{"oracle", cx.oracle ? "powerset" : "engine-only"}};
  if (cx.oracle) {
    const auto rep = cx.oracle->verify_pairwise_closure();
    guard["open_count"] = cx.oracle->count();
    guard["powerset_shortcut"] = rep.used_powerset_shortcut;
    const bool base_ok = cx.oracle->contains_engine_base(cx.t);
    if (rep.ok() && base_ok) return holds_result(cx, guard);
    nlohmann::ordered_json w{{"kind", "topology-law-violation"},
                             {"has_empty", rep.has_empty},
                             {"has_full", rep.has_full},
                             {"union_closed", rep.union_closed},
                             {"intersection_closed", rep.intersection_closed},
                             {"engine_base_listed", base_ok}};
    if (rep.witness) {
      w["pair"] = {SubsetMask::from_bits(cx.n(), rep.witness->first).to_string(),
                   SubsetMask::from_bits(cx.n(), rep.witness->second).to_string()};
    }
    w["replay"] = replay_command("topology", cx.inst, cx.ring());
    return fails_result(cx, w, guard);
  }

  // Engine route: empty/full open, every orbit open, sampled saturations
  // open, sampled pairwise orbit intersections open.
  SplitMix rng = stream_for(cx.corpus, "prop-2.2", cx.inst);
  guard["samples"] = 64;
  bool ok = cx.t.is_open(SubsetMask::empty_set(cx.n())) &&
            cx.t.is_open(SubsetMask::full_set(cx.n()));
  for (elem x = 0; ok && x < cx.n(); ++x)
    ok = cx.t.is_open(cx.t.orbit(x).members);
  for (int i = 0; ok && i < 64; ++i) {
    const SubsetMask s = random_subset(cx.n(), rng);
    ok = cx.t.is_open(cx.t.saturation(s));
    const elem x = elem(rng.bounded(cx.n())), y = elem(rng.bounded(cx.n()));
    ok = ok && cx.t.is_open(cx.t.orbit(x).members & cx.t.orbit(y).members);
  }
  if (ok) return holds_result(cx, guard);
  return fails_result(cx,
                      {{"kind", "topology-law-violation"},
                       {"replay", replay_command("topology", cx.inst, cx.ring())}},
                      guard);
}

InstanceResult audit_remark_2_4(const ClaimContext& cx) {
  SplitMix rng = stream_for(cx.corpus, "remark-2.4", cx.inst);
  nlohmann::ordered_json guard{{"oracle", cx.oracle ? "powerset" : "engine-only"},
                               {"families", 100}};
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + rng.bounded(7);
    if (cx.oracle) {
      std::uint32_t uni = 0, inter = cx.oracle->full_mask();
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t u =
            cx.oracle->opens()[rng.bounded(cx.oracle->count())];
        uni |= u;
        inter &= u;
      }
      // Union of opens open <=> union of the complementary closeds closed.
      if (!cx.oracle->is_open_bits(uni) || !cx.oracle->is_open_bits(inter) ||
          !cx.oracle->is_closed_bits(cx.oracle->full_mask() & ~uni)) {
        return fails_result(
            cx,
            {{"kind", "family-closure-violation"},
             {"union", SubsetMask::from_bits(cx.n(), uni).to_string()},
             {"intersection", SubsetMask::from_bits(cx.n(), inter).to_string()},
             {"replay", replay_command("topology", cx.inst, cx.ring())}},
            guard);
      }
    } else {
      SubsetMask uni(cx.n());
      SubsetMask inter = SubsetMask::full_set(cx.n());
      for (std::size_t i = 0; i < k; ++i) {
        const SubsetMask& o = cx.t.orbit(elem(rng.bounded(cx.n()))).members;
        uni |= o;
        inter &= o;
      }
      if (!cx.t.is_open(uni) || !cx.t.is_open(inter) ||
          !cx.t.is_closed(uni.complement())) {
        return fails_result(
            cx,
            {{"kind", "family-closure-violation"},
             {"union", uni.to_string()},
             {"intersection", inter.to_string()},
             {"replay", replay_command("topology", cx.inst, cx.ring())}},
            guard);
      }
    }
  }
  return holds_result(cx, guard);
}

InstanceResult audit_thm_2_5(const ClaimContext& cx) {
  if (cx.t.is_continuous_self_map(cx.t.successor_map()))
    return holds_result(cx);
  return fails_result(
      cx, {{"kind", "successor-not-continuous"},
           {"replay", replay_command("orbits", cx.inst, cx.ring())}});
}

InstanceResult audit_remark_2_7(const ClaimContext& cx) {
  const bool idem = is_idempotent(cx.ring(), cx.inst.a);
  nlohmann::ordered_json guard{{"idempotent", idem},
                               {"oracle", cx.oracle ? "powerset" : "engine-only"}};
  auto fail = [&](const char* part, nlohmann::ordered_json extra) {
    extra["kind"] = "orbit-base-violation";
    extra["part"] = part;
    extra["replay"] = replay_command("orbits", cx.inst, cx.ring());
    return fails_result(cx, std::move(extra), guard);
  };

  if (cx.oracle) {
    // (1) orbit(x) equals the intersection of all listed opens containing x.
    for (elem x = 0; x < cx.n(); ++x)
      if (cx.t.orbit(x).members.as_bits() != cx.oracle->minimal_open_of(x))
        return fail("minimal-open", {{"x", cx.ring().label(x)}});
    // (2) every open is the union of its members' orbits.
    for (std::uint32_t u : cx.oracle->opens()) {
      std::uint32_t uni = 0;
      for (elem x = 0; x < cx.n(); ++x)
        if (u >> x & 1) uni |= cx.t.orbit(x).members.as_bits();
      if (uni != u)
        return fail("base", {{"open", SubsetMask::from_bits(cx.n(), u).to_string()}});
    }
  } else {
    SplitMix rng = stream_for(cx.corpus, "remark-2.7", cx.inst);
    for (elem x = 0; x < cx.n(); ++x)
      if (!cx.t.is_open(cx.t.orbit(x).members))
        return fail("orbit-open", {{"x", cx.ring().label(x)}});
    for (int i = 0; i < 64; ++i) {
      const SubsetMask v = cx.t.saturation(random_subset(cx.n(), rng));
      bool ok = true;
      v.for_each([&](elem x) {
        ok = ok && cx.t.orbit(x).members.is_subset_of(v);
      });
      if (!ok) return fail("minimal-open", {});
    }
  }

  if (idem) {
    const elem e = cx.inst.a;
    const SubsetMask fixed = action_image(cx.ring(), e, cx.inst.side);
    const SubsetMask kernel =
        action_image(cx.ring(), cx.ring().one_minus(e), cx.inst.side);
    bool ok = true;
    elem bad = 0;
    fixed.for_each([&](elem x) {
      if (!(cx.t.orbit(x).members == SubsetMask::single(cx.n(), x))) {
        ok = false;
        bad = x;
      }
    });
    if (!ok) return fail("fixed-part-orbit", {{"x", cx.ring().label(bad)}});
    kernel.for_each([&](elem x) {
      SubsetMask expect = SubsetMask::single(cx.n(), x);
      expect.set(cx.ring().zero);
      if (!(cx.t.orbit(x).members == expect)) {
        ok = false;
        bad = x;
      }
    });
    if (!ok) return fail("kernel-part-orbit", {{"x", cx.ring().label(bad)}});
  }
  return holds_result(cx, guard);
}

InstanceResult audit_separation(const ClaimContext& cx,
                                AxiomVerdict (*axiom)(const TopologySpace&),
                                const char* oracle_kind) {
  const AxiomVerdict v = axiom(cx.t);
  nlohmann::ordered_json guard{
      {"definitional", v.holds_definitional},
      {"characterization", v.holds_characterization}};

  // Cross-check the definitional side against the explicit open list.
  if (cx.oracle) {
    const ExplicitTopology& o = *cx.oracle;
    bool oracle_def = true;
    if (oracle_kind == std::string("T0")) {
      for (elem x = 0; x < cx.n() && oracle_def; ++x)
        for (elem y = elem(x + 1); y < cx.n() && oracle_def; ++y) {
          bool separated = false;
          for (std::uint32_t u : o.opens())
            if (((u >> x) & 1) != ((u >> y) & 1)) {
              separated = true;
              break;
            }
          oracle_def = separated;
        }
    } else if (oracle_kind == std::string("T1")) {
      for (elem x = 0; x < cx.n() && oracle_def; ++x)
        oracle_def = o.is_closed_bits(1u << x);
    } else {
      for (elem x = 0; x < cx.n() && oracle_def; ++x)
        for (elem y = elem(x + 1); y < cx.n() && oracle_def; ++y)
          oracle_def = (o.minimal_open_of(x) & o.minimal_open_of(y)) == 0;
    }
    guard["oracle_definitional"] = oracle_def;
    if (oracle_def != v.holds_definitional)
      return fails_result(cx,
                          {{"kind", "engine-oracle-mismatch"},
                           {"replay", replay_command("axioms", cx.inst, cx.ring())}},
                          guard);
  }

  if (v.agree()) return holds_result(cx, guard);
  nlohmann::ordered_json w{{"kind", "definitional-characterization-mismatch"}};
  if (v.witness) {
    nlohmann::json elems = nlohmann::json::array();
    for (elem x : v.witness->elements) elems.push_back(cx.ring().label(x));
    w["elements"] = elems;
    w["detail"] = v.witness->detail;
  }
  w["replay"] = replay_command("axioms", cx.inst, cx.ring());
  return fails_result(cx, w, guard);
}

InstanceResult audit_thm_2_11(const ClaimContext& cx) {
  if (cx.n() > kOracleMaxOrder)
    return na_result(cx, "order exceeds the oracle cap; regularity needs "
                         "closed-set enumeration");
  const AxiomVerdict v = regular(cx.t);
  nlohmann::ordered_json guard{{"definitional", v.holds_definitional},
                               {"characterization", v.holds_characterization},
                               {"interpretation", v.note}};
  if (v.agree()) return holds_result(cx, guard);
  nlohmann::ordered_json w{{"kind", "definitional-characterization-mismatch"}};
  if (v.witness) {
    nlohmann::json elems = nlohmann::json::array();
    for (elem x : v.witness->elements) elems.push_back(cx.ring().label(x));
    w["elements"] = elems;
    if (v.witness->set) w["set"] = v.witness->set->to_string();
    w["detail"] = v.witness->detail;
  }
  w["replay"] = replay_command("axioms", cx.inst, cx.ring());
  return fails_result(cx, w, guard);
}

InstanceResult audit_thm_2_12(const ClaimContext& cx) {
  const FiniteRing& r = cx.ring();
  bool left_su_nonzero = false, right_su_nonzero = false;
  for (elem x = 0; x < cx.n(); ++x) {
    if (x != r.zero && r.mul(cx.inst.a, x) == x) left_su_nonzero = true;
    if (x != r.zero && r.mul(x, cx.inst.a) == x) right_su_nonzero = true;
  }
  nlohmann::ordered_json guard{
      {"left_s_unital", true},   // 0 always satisfies ax = x
      {"right_s_unital", true},  // likewise xa = x
      {"left_s_unital_nonzero", left_su_nonzero},
      {"right_s_unital_nonzero", right_su_nonzero},
      {"cover_note",
       "open members are successor-closed, so any nonempty member already "
       "contains some x with x*a"}};

  if (!t2(cx.t).holds_definitional)
    return na_result(cx, "space is not Hausdorff", guard);

  // Hausdorff side established; probe the cover property on the orbit base
  // plus seeded random open covers.
  std::vector<SubsetMask> base;
  for (elem x = 0; x < cx.n(); ++x) base.push_back(cx.t.orbit(x).members);
  bool covers_ok = cover_witness(cx.t, base).witness.has_value();

  SplitMix rng = stream_for(cx.corpus, "thm-2.12", cx.inst);
  for (int trial = 0; trial < 100 && covers_ok; ++trial) {
    std::vector<SubsetMask> cover;
    SubsetMask covered(cx.n());
    const std::size_t k = 1 + rng.bounded(4);
    for (std::size_t i = 0; i < k; ++i) {
      cover.push_back(cx.t.saturation(random_subset(cx.n(), rng)));
      covered |= cover.back();
    }
    if (!covered.is_full()) {
      cover.push_back(cx.t.saturation(covered.complement()));
    }
    covers_ok = cover_witness(cx.t, cover).witness.has_value();
  }
  guard["covers_sampled"] = 101;

  const bool s_unital = true;  // witnessed by x = 0 at minimum
  if (s_unital == covers_ok) return holds_result(cx, guard);
  return fails_result(cx,
                      {{"kind", "cover-biconditional-violation"},
                       {"replay", replay_command("axioms", cx.inst, cx.ring())}},
                      guard);
}

InstanceResult audit_lemma_2_13(const ClaimContext& cx) {
  for (elem x = 0; x < cx.n(); ++x) {
    const SubsetMask c = cx.t.closure(cx.t.orbit(x).members);
    if (!cx.t.is_open(c) || !cx.t.is_closed(c))
      return fails_result(
          cx, {{"kind", "orbit-closure-not-clopen"},
               {"x", cx.ring().label(x)},
               {"closure", c.to_string()},
               {"replay", replay_command("orbits", cx.inst, cx.ring())}});
  }
  return holds_result(cx);
}

InstanceResult audit_cor_2_15(const ClaimContext& cx) {
  nlohmann::ordered_json guard{{"oracle", cx.oracle ? "powerset" : "engine-only"},
                               {"components", cx.t.component_count()}};
  bool disconnected;
  nlohmann::ordered_json witness;
  if (cx.oracle) {
    const auto conn = cx.oracle->connected();
    disconnected = !conn.connected;
    if (conn.clopen_witness)
      guard["clopen_witness"] =
          SubsetMask::from_bits(cx.n(), *conn.clopen_witness).to_string();
  } else {
    // Engine route with its proof obligation: component blocks are clopen
    // and any clopen must be a union of blocks.
    disconnected = cx.t.component_count() > 1;
    for (const auto& block : cx.t.connected_components()) {
      SubsetMask b(cx.n());
      for (elem x : block) b.set(x);
      if (!cx.t.is_open(b) || !cx.t.is_closed(b))
        return fails_result(cx, {{"kind", "component-not-clopen"},
                                 {"block", b.to_string()}},
                            guard);
    }
  }
  if (disconnected) return holds_result(cx, guard);
  witness = {{"kind", "no-proper-clopen"},
             {"detail", "the empty set and the whole space are the only "
                        "clopen subsets"},
             {"replay", replay_command("topology", cx.inst, cx.ring())}};
  return fails_result(cx, witness, guard);
}

InstanceResult audit_thm_2_16(const ClaimContext& cx) {
  const FixedPointAudit probe = cx.t.fixed_point_audit(0);
  nlohmann::ordered_json guard{
      {"compactness", "automatic on a finite space"},
      {"hypothesis2", probe.hypothesis2_holds}};
  if (!probe.hypothesis2_holds) {
    guard["hypothesis2_violator"] = cx.ring().label(*probe.hypothesis2_violator);
    return na_result(cx, "hypothesis (2) fails: some x with xa != x lies in "
                         "the closure of the orbit of x*a^2",
                     guard);
  }
  for (elem x0 = 0; x0 < cx.n(); ++x0) {
    const SubsetMask c = cx.t.closure(cx.t.orbit(x0).members);
    bool found = false;
    for (elem y = 0; y < cx.n() && !found; ++y)
      found = c.test(y) && cx.t.successor(y) == y;
    if (!found)
      return fails_result(
          cx, {{"kind", "no-fixed-point"},
               {"x0", cx.ring().label(x0)},
               {"replay", replay_command("orbits", cx.inst, cx.ring())}},
          guard);
  }
  return holds_result(cx, guard);
}

InstanceResult audit_thm_3_1(const ClaimContext& cx) {
  const FiniteRing& r = cx.ring();
  if (!is_idempotent(r, cx.inst.a))
    return na_result(cx, "acting element is not idempotent");
  const elem e = cx.inst.a;
  nlohmann::ordered_json guard{{"idempotent", true},
                               {"trivial_e", e == r.zero || e == r.one}};

  const SubsetMask fixed = action_image(r, e, cx.inst.side);
  const bool open = cx.t.is_open(fixed);
  const bool dense = cx.t.closure(fixed).is_full();
  const bool derived_ok = cx.t.derived_set(fixed) == fixed.complement();
  if (open && dense && derived_ok) return holds_result(cx, guard);
  return fails_result(cx,
                      {{"kind", "fixed-part-claims"},
                       {"open", open},
                       {"dense", dense},
                       {"derived_is_complement", derived_ok},
                       {"fixed_part", mask_members(fixed, r)},
                       {"replay", replay_command("pierce", cx.inst, r)}},
                      guard);
}

InstanceResult audit_thm_3_2(const ClaimContext& cx) {
  const FiniteRing& r = cx.ring();
  if (!is_idempotent(r, cx.inst.a))
    return na_result(cx, "acting element is not idempotent");
  const elem e = cx.inst.a;
  if (e == r.zero || e == r.one)
    return na_result(cx, "trivial idempotent: the complement part is {0} or R",
                     {{"idempotent", true}, {"trivial_e", true}});

  nlohmann::ordered_json guard{{"idempotent", true}, {"trivial_e", false}};
  const SubsetMask fixed = action_image(r, e, cx.inst.side);
  const SubsetMask kernel = action_image(r, r.one_minus(e), cx.inst.side);

  const bool open = cx.t.is_open(kernel);
  const bool closed = cx.t.is_closed(kernel);  // claim says NOT closed
  const SubsetMask derived = cx.t.derived_set(kernel);
  const SubsetMask claimed = fixed.complement() & kernel.complement();
  const bool derived_ok = derived == claimed;

  if (open && !closed && derived_ok) return holds_result(cx, guard);
  return fails_result(
      cx,
      {{"kind", "kernel-part-claims"},
       {"open", open},
       {"closed", closed},
       {"derived_set", mask_members(derived, r)},
       {"claimed_derived_set", mask_members(claimed, r)},
       {"replay", replay_command("pierce", cx.inst, r)}},
      guard);
}

InstanceResult audit_example_3_3(const ClaimContext& cx) {
  const FiniteRing& r = cx.ring();
  if (cx.inst.ring_spec != "ut:f2" || cx.inst.side != ActionSide::left ||
      r.label(cx.inst.a) != "[[1,1],[0,0]]")
    return na_result(cx, "not the worked 2x2 upper-triangular instance");

  const SubsetMask image = action_image(r, cx.inst.a, ActionSide::left);
  bool shape_ok = image.count() == 4;
  image.for_each([&](elem x) {
    // top-row shape [[*,*],[0,0]] <=> the label's bottom row is [0,0]
    if (!std::string_view(r.label(x)).ends_with(",[0,0]]")) shape_ok = false;
  });
  const bool open = cx.t.is_open(image);
  const bool dense = cx.t.closure(image).is_full();
  if (shape_ok && open && dense)
    return holds_result(cx, {{"image", mask_members(image, r)}});
  return fails_result(cx,
                      {{"kind", "worked-example-mismatch"},
                       {"four_top_row_elements", shape_ok},
                       {"open", open},
                       {"dense", dense},
                       {"image", mask_members(image, r)},
                       {"replay", replay_command("pierce", cx.inst, r)}});
}

}  // namespace

// --------------------------------------------------------------- corpus ----

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "not-applicable";
  }
}

void AuditCorpus::push(const std::string& spec, elem a, ActionSide side) {
  if (std::find(ring_specs_.begin(), ring_specs_.end(), spec) ==
      ring_specs_.end())
    ring_specs_.push_back(spec);
  instances_.push_back({spec, a, side});
}

void AuditCorpus::push_both_sides(const std::string& spec, elem a) {
  push(spec, a, ActionSide::right);
  push(spec, a, ActionSide::left);
}

AuditCorpus AuditCorpus::build_default(std::uint32_t max_order,
                                       std::uint64_t seed) {
  if (max_order < 2 || max_order > kMaxRingOrder)
    throw error("invalid-order",
                "corpus max_order must be in [2, " +
                    std::to_string(kMaxRingOrder) + "]");
  AuditCorpus c;
  c.max_order_ = max_order;
  c.seed_ = seed;

  c.generators_.push_back("zn-sweep(n<=min(max_order,16), every a, both sides)");
  const std::uint32_t zn_cap = std::min(max_order, kOracleMaxOrder);
  for (std::uint32_t n = 2; n <= zn_cap; ++n) {
    const std::string spec = "zn:" + std::to_string(n);
    for (elem a = 0; a < n; ++a) c.push_both_sides(spec, a);
  }

  if (max_order >= 4) {
    c.generators_.push_back("products(Z2xZ2, Z2xZ3; every a, both sides)");
    for (elem a = 0; a < 4; ++a) c.push_both_sides("prod:zn:2,zn:2", a);
    if (max_order >= 6)
      for (elem a = 0; a < 6; ++a) c.push_both_sides("prod:zn:2,zn:3", a);
  }

  auto push_idempotents = [&](const std::string& spec) {
    const auto ring = c.ring(spec);
    for (elem e : idempotents(*ring)) c.push_both_sides(spec, e);
  };
  if (max_order >= 8) {
    c.generators_.push_back("upper-triangular(f2; every idempotent, both sides)");
    push_idempotents("ut:f2");
  }
  if (max_order >= 16) {
    c.generators_.push_back("matrix(m2:f2; curated idempotents, both sides)");
    const auto ring = c.ring("m2:f2");
    for (const char* lbl : {"[[0,0],[0,0]]", "[[1,0],[0,1]]", "[[1,0],[0,0]]",
                            "[[1,1],[0,0]]"})
      c.push_both_sides("m2:f2", *ring->element_by_label(lbl));
  }
  if (max_order >= 27) {
    c.generators_.push_back("upper-triangular(f3; every idempotent, both sides)");
    push_idempotents("ut:f3");
  }

  // Engine-only sizes so the orbit machinery is exercised beyond the oracle
  // range; curated acting elements keep the sweep bounded.
  if (max_order > 27) {
    c.generators_.push_back(
        "large-engine-only(zn:{32,64,100,128,256} curated a; m2:f3 curated "
        "idempotents; both sides)");
    for (std::uint32_t n : {32u, 64u, 100u, 128u, 256u}) {
      if (n > max_order) continue;
      const std::string spec = "zn:" + std::to_string(n);
      std::vector<elem> picks{0, 1, 2, 3, elem(n / 2), elem(n - 1)};
      std::sort(picks.begin(), picks.end());
      picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
      for (elem a : picks) c.push_both_sides(spec, a);
    }
    if (max_order >= 81) {
      const auto ring = c.ring("m2:f3");
      for (const char* lbl : {"[[0,0],[0,0]]", "[[1,0],[0,1]]",
                              "[[1,0],[0,0]]", "[[1,1],[0,0]]"})
        c.push_both_sides("m2:f3", *ring->element_by_label(lbl));
    }
  }
  return c;
}

std::shared_ptr<const FiniteRing> AuditCorpus::ring(
    const std::string& spec) const {
  auto it = rings_.find(spec);
  if (it != rings_.end()) return it->second;
  auto r = std::make_shared<const FiniteRing>(parse_ring_spec(spec));
  rings_.emplace(spec, r);
  return r;
}

namespace {
std::string instance_key(const Instance& inst) {
  return inst.ring_spec + "|" + std::to_string(inst.a) + "|" +
         to_string(inst.side);
}
}  // namespace

const TopologySpace& AuditCorpus::space(const Instance& inst) const {
  const std::string key = instance_key(inst);
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return *it->second;
  auto t = std::make_unique<TopologySpace>(ring(inst.ring_spec), inst.a,
                                           inst.side);
  return *spaces_.emplace(key, std::move(t)).first->second;
}

const ExplicitTopology* AuditCorpus::oracle(const Instance& inst) const {
  const TopologySpace& t = space(inst);
  if (t.order() > kOracleMaxOrder) return nullptr;
  const std::string key = instance_key(inst);
  auto it = oracles_.find(key);
  if (it != oracles_.end()) return it->second.get();
  auto o = std::make_unique<ExplicitTopology>(ExplicitTopology::enumerate(t));
  return oracles_.emplace(key, std::move(o)).first->second.get();
}

// ---------------------------------------------------------------- claims ---

const std::vector<std::pair<std::string, std::string>>& claim_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog{
      {"Prop-2.2",
       "the successor-closed subsets form a topology (empty/full present, "
       "closed under unions and intersections)"},
      {"Remark-2.4",
       "arbitrary unions of closed sets are closed and arbitrary "
       "intersections of open sets are open"},
      {"Thm-2.5", "the action map x -> x*a is continuous as a self-map"},
      {"Remark-2.7",
       "orbits are the minimal open neighborhoods and form a base; for an "
       "idempotent action the fixed part has singleton orbits and the "
       "complement part has orbits {x, 0}"},
      {"Thm-2.8",
       "T0 holds iff no two distinct elements lie in each other's forward "
       "power orbit"},
      {"Thm-2.9",
       "T1 holds iff no element equals another's positive power image"},
      {"Thm-2.10",
       "T2 holds iff positive power orbits of distinct elements never meet"},
      {"Thm-2.11",
       "regularity holds iff every minimal open traps its own closure "
       "inside any open between the point and its minimal open"},
      {"Thm-2.12",
       "on a Hausdorff space: the action admits a fixed point iff every "
       "open cover has a member containing some x together with x*a"},
      {"Lemma-2.13", "the closure of every orbit is clopen"},
      {"Cor-2.15", "the space is disconnected"},
      {"Thm-2.16",
       "if any non-fixed x stays out of the closure of the orbit of x*a^2, "
       "the closure of every orbit contains a fixed point of the action"},
      {"Thm-3.1",
       "for an idempotent action the fixed part is an open dense set whose "
       "derived set is its complement"},
      {"Thm-3.2",
       "for a nontrivial idempotent the complement part is open, not "
       "closed, and has derived set (R \\ fixed) ∩ (R \\ complement)"},
      {"Example-3.3",
       "2x2 upper-triangular ring over F2, e = [[1,1],[0,0]], left action: "
       "eR is the 4-element top-row set, open and dense"},
  };
  return catalog;
}

ClaimReport audit_claim(const std::string& claim_id,
                        const AuditCorpus& corpus) {
  using AuditFn = InstanceResult (*)(const ClaimContext&);
  static const std::map<std::string, AuditFn> dispatch{
      {"Prop-2.2", audit_prop_2_2},
      {"Remark-2.4", audit_remark_2_4},
      {"Thm-2.5", audit_thm_2_5},
      {"Remark-2.7", audit_remark_2_7},
      {"Thm-2.8",
       [](const ClaimContext& cx) { return audit_separation(cx, t0, "T0"); }},
      {"Thm-2.9",
       [](const ClaimContext& cx) { return audit_separation(cx, t1, "T1"); }},
      {"Thm-2.10",
       [](const ClaimContext& cx) { return audit_separation(cx, t2, "T2"); }},
      {"Thm-2.11", audit_thm_2_11},
      {"Thm-2.12", audit_thm_2_12},
      {"Lemma-2.13", audit_lemma_2_13},
      {"Cor-2.15", audit_cor_2_15},
      {"Thm-2.16", audit_thm_2_16},
      {"Thm-3.1", audit_thm_3_1},
      {"Thm-3.2", audit_thm_3_2},
      {"Example-3.3", audit_example_3_3},
  };
  const auto fn = dispatch.find(claim_id);
  if (fn == dispatch.end())
    throw error("unknown-claim", "no claim with id '" + claim_id + "'");

  ClaimReport report;
  report.claim = claim_id;
  for (const auto& [id, statement] : claim_catalog())
    if (id == claim_id) report.statement = statement;

  for (const Instance& inst : corpus.instances()) {
    ClaimContext cx{corpus, inst, corpus.space(inst), corpus.oracle(inst)};
    InstanceResult res = fn->second(cx);
    switch (res.verdict) {
      case Verdict::holds: ++report.holds; break;
      case Verdict::fails: ++report.fails; break;
      case Verdict::not_applicable: ++report.not_applicable; break;
    }
    report.results.push_back(std::move(res));
  }
  return report;
}

std::vector<ClaimReport> audit_all(const AuditCorpus& corpus) {
  std::vector<ClaimReport> reports;
  for (const auto& [id, statement] : claim_catalog())
    reports.push_back(audit_claim(id, corpus));
  return reports;
}

// --------------------------------------------------------------- reports ---

nlohmann::ordered_json report_to_json(const std::vector<ClaimReport>& reports,
                                      const AuditCorpus& corpus) {
  nlohmann::ordered_json root;
  root["schema"] = "ringtop-audit-v1";
  root["config"] = {{"max_order", corpus.max_order()},
                    {"seed", corpus.seed()}};
  root["corpus"] = {{"instances", corpus.instances().size()},
                    {"rings", corpus.ring_specs()},
                    {"generators", corpus.generators()}};
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const ClaimReport& rep : reports) {
    nlohmann::ordered_json c;
    c["claim"] = rep.claim;
    c["statement"] = rep.statement;
    c["tally"] = {{"holds", rep.holds},
                  {"fails", rep.fails},
                  {"not_applicable", rep.not_applicable}};
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    auto emit = [&](Verdict want) {
      for (const InstanceResult& res : rep.results) {
        if (res.verdict != want) continue;
        const auto ring = corpus.ring(res.instance.ring_spec);
        nlohmann::ordered_json r;
        r["instance"] = instance_json(res.instance, *ring);
        r["verdict"] = to_string(res.verdict);
        if (!res.witness.is_null()) r["witness"] = res.witness;
        if (!res.guard.is_null()) r["guard"] = res.guard;
        if (!res.reason.empty()) r["reason"] = res.reason;
        results.push_back(std::move(r));
      }
    };
    emit(Verdict::fails);  // counterexamples first
    emit(Verdict::holds);
    emit(Verdict::not_applicable);
    c["results"] = std::move(results);
    claims.push_back(std::move(c));
  }
  root["claims"] = std::move(claims);
  return root;
}

std::string report_to_markdown(const std::vector<ClaimReport>& reports,
                               const AuditCorpus& corpus) {
  std::string md;
  md += "# Claim audit\n\n";
  md += "corpus: " + std::to_string(corpus.instances().size()) +
        " instances, max order " + std::to_string(corpus.max_order()) +
        ", seed " + std::to_string(corpus.seed()) + "\n\n";
  md += "| claim | ring | holds | fails | not applicable |\n";
  md += "|---|---|---:|---:|---:|\n";
  for (const ClaimReport& rep : reports) {
    for (const std::string& spec : corpus.ring_specs()) {
      std::size_t holds = 0, fails = 0, na = 0;
      for (const InstanceResult& res : rep.results) {
        if (res.instance.ring_spec != spec) continue;
        if (res.verdict == Verdict::holds) ++holds;
        else if (res.verdict == Verdict::fails) ++fails;
        else ++na;
      }
      if (holds + fails + na == 0) continue;
      md += "| " + rep.claim + " | " + spec + " | " + std::to_string(holds) +
            " | " + std::to_string(fails) + " | " + std::to_string(na) +
            " |\n";
    }
  }
  md += "\nFailing claims carry replay commands in the JSON report.\n";
  return md;
}

}  // namespace ringtop
