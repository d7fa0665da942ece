// Acceptance suite: one checker per criterion, each printing a PASS/FAIL
// line. Run with no arguments for the full battery or with a criterion
// number. Exit code counts failing criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "ringtop/audit.hpp"
#include "ringtop/axioms.hpp"
#include "ringtop/oracle.hpp"
#include "ringtop/ringspec.hpp"

using namespace ringtop;

namespace {

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

std::uint64_t fnv1a(std::string_view s,
                    std::uint64_t h = 0xcbf29ce484222325ull) {
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
};

SubsetMask random_subset(std::uint32_t n, SplitMix& rng) {
  SubsetMask m(n);
  for (std::size_t w = 0; w < m.word_count(); ++w) m.words()[w] = rng.next();
  if (n % 64) m.words()[m.word_count() - 1] &= (std::uint64_t(1) << (n % 64)) - 1;
  return m;
}

constexpr std::uint64_t kSeed = 7;

// Every oracle-sized corpus ring, every acting element, both sides.
struct SweepSpace {
  std::string spec;
  elem a;
  ActionSide side;
};
std::vector<SweepSpace> oracle_sweep() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::vector<SweepSpace> out;
  for (const std::string& spec : corpus.ring_specs()) {
    const auto ring = corpus.ring(spec);
    if (ring->order > kOracleMaxOrder) continue;
    for (elem a = 0; a < ring->order; ++a)
      for (ActionSide side : {ActionSide::right, ActionSide::left})
        out.push_back({spec, a, side});
  }
  return out;
}

std::string describe_space(const SweepSpace& s) {
  return s.spec + " a=" + std::to_string(s.a) + " " + to_string(s.side);
}

// ---------------------------------------------------------- criterion 1 ----
// Engine operators equal oracle recomputations on 200 seeded subsets per
// (ring, a, side). Zero tolerance.
CriterionResult criterion_1() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::size_t spaces = 0, comparisons = 0;
  for (const SweepSpace& sw : oracle_sweep()) {
    const TopologySpace t(corpus.ring(sw.spec), sw.a, sw.side);
    const ExplicitTopology o = ExplicitTopology::enumerate(t);
    ++spaces;
    SplitMix rng{fnv1a(describe_space(sw), kSeed)};
    for (int trial = 0; trial < 200; ++trial) {
      const SubsetMask s = random_subset(t.order(), rng);
      const bool ok = t.closure(s) == o.closure(s) &&
                      t.interior(s) == o.interior(s) &&
                      t.derived_set(s) == o.derived_set(s) &&
                      t.limited_points(s, 0) == o.limited_points(s, 0) &&
                      t.limited_points(s, 1) == o.limited_points(s, 1) &&
                      t.saturation(s) == o.saturation(s) &&
                      t.is_open(s) == o.is_open(s) &&
                      t.is_closed(s) == o.is_closed(s);
      comparisons += 8;
      if (!ok)
        return {false, "engine/oracle mismatch on " + describe_space(sw) +
                           " subset " + s.to_string()};
    }
  }
  return {true, std::to_string(comparisons) + " comparisons over " +
                    std::to_string(spaces) + " spaces"};
}

// ---------------------------------------------------------- criterion 2 ----
// Explicit open lists contain {} and R and are closed under pairwise union
// and intersection; every engine base open appears in the list.
CriterionResult criterion_2() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::size_t spaces = 0, pair_shortcuts = 0;
  for (const SweepSpace& sw : oracle_sweep()) {
    const TopologySpace t(corpus.ring(sw.spec), sw.a, sw.side);
    const ExplicitTopology o = ExplicitTopology::enumerate(t);
    const auto rep = o.verify_pairwise_closure();
    ++spaces;
    pair_shortcuts += rep.used_powerset_shortcut;
    if (!rep.ok())
      return {false, "open-list law violated on " + describe_space(sw)};
    if (!o.contains_engine_base(t))
      return {false, "an engine base open is missing from the oracle list on " +
                         describe_space(sw)};
  }
  return {true, std::to_string(spaces) + " spaces verified (" +
                    std::to_string(pair_shortcuts) +
                    " full-powerset shortcuts)"};
}

// ---------------------------------------------------------- criterion 3 ----
// closure(orbit(x)) is clopen for 100% of (instance, x) pairs across the
// corpus extended to engine-only rings of order up to 256.
CriterionResult criterion_3() {
  const AuditCorpus corpus = AuditCorpus::build_default(256, kSeed);
  std::size_t pairs = 0;
  std::uint32_t largest = 0;
  for (const Instance& inst : corpus.instances()) {
    const TopologySpace& t = corpus.space(inst);
    largest = std::max(largest, t.order());
    for (elem x = 0; x < t.order(); ++x) {
      try {
        t.clopen_orbit_closure(x);
      } catch (const error&) {
        return {false, "closure(orbit(" + std::to_string(x) +
                           ")) not clopen on " + inst.ring_spec};
      }
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " (instance, x) pairs, largest ring " +
                    std::to_string(largest)};
}

// ---------------------------------------------------------- criterion 4 ----
// Separation: engine definitional verdicts equal oracle definitional
// verdicts; definitional vs characterization mismatches (none expected) all
// carry witnesses; T1 <=> T2 <=> successor-is-identity corpus-wide.
CriterionResult criterion_4() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::size_t mismatches = 0;
  for (const SweepSpace& sw : oracle_sweep()) {
    const TopologySpace t(corpus.ring(sw.spec), sw.a, sw.side);
    const ExplicitTopology o = ExplicitTopology::enumerate(t);
    const AxiomVerdict v0 = t0(t), v1 = t1(t), v2 = t2(t);

    bool oracle_t0 = true, oracle_t1 = true, oracle_t2 = true;
    for (elem x = 0; x < t.order(); ++x) {
      if (!o.is_closed_bits(1u << x)) oracle_t1 = false;
      for (elem y = elem(x + 1); y < t.order(); ++y) {
        bool separated = false;
        for (std::uint32_t u : o.opens())
          if (((u >> x) & 1) != ((u >> y) & 1)) {
            separated = true;
            break;
          }
        if (!separated) oracle_t0 = false;
        if (o.minimal_open_of(x) & o.minimal_open_of(y)) oracle_t2 = false;
      }
    }
    if (v0.holds_definitional != oracle_t0 ||
        v1.holds_definitional != oracle_t1 ||
        v2.holds_definitional != oracle_t2)
      return {false, "engine vs oracle definitional disagreement on " +
                         describe_space(sw)};

    for (const AxiomVerdict* v : {&v0, &v1, &v2})
      if (!v->agree()) {
        ++mismatches;
        if (!v->witness.has_value())
          return {false, "mismatch without witness on " + describe_space(sw)};
      }
  }

  // three-way equivalence across the full corpus, engine-only rings included
  const AuditCorpus big = AuditCorpus::build_default(256, kSeed);
  for (const Instance& inst : big.instances()) {
    const TopologySpace& t = big.space(inst);
    const bool id = t.successor_is_identity();
    const AxiomVerdict v1 = t1(t), v2 = t2(t);
    if (v1.holds_definitional != id || v2.holds_definitional != id)
      return {false, "T1/T2/identity equivalence broken on " + inst.ring_spec};
  }
  return {true, "oracle agreement everywhere; " + std::to_string(mismatches) +
                    " definitional/characterization mismatches"};
}

// ---------------------------------------------------------- criterion 5 ----
// The stated pierce identities, checked literally for every nontrivial
// idempotent instance: fixed part open and dense with derived set equal to
// its complement; complement part open and NOT closed with derived set
// (R \ fixed) ∩ (R \ complement).
CriterionResult criterion_5() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::size_t instances = 0, open_dense_ok = 0, derived_fixed_ok = 0,
              kernel_open_ok = 0, kernel_not_closed_ok = 0,
              kernel_derived_ok = 0, na = 0;
  std::string first_violation;
  for (const Instance& inst : corpus.instances()) {
    const TopologySpace& t = corpus.space(inst);
    const FiniteRing& r = t.ring();
    if (!is_idempotent(r, inst.a)) continue;
    if (inst.a == r.zero || inst.a == r.one) {
      ++na;
      continue;
    }
    ++instances;
    const elem e = inst.a;
    const SubsetMask fixed = action_image(r, e, inst.side);
    const SubsetMask kernel = action_image(r, r.one_minus(e), inst.side);

    open_dense_ok += t.is_open(fixed) && t.closure(fixed).is_full();
    derived_fixed_ok += t.derived_set(fixed) == fixed.complement();
    kernel_open_ok += t.is_open(kernel);
    const bool not_closed = !t.is_closed(kernel);
    kernel_not_closed_ok += not_closed;
    const bool derived_ok =
        t.derived_set(kernel) == (fixed.complement() & kernel.complement());
    kernel_derived_ok += derived_ok;
    if ((!not_closed || !derived_ok) && first_violation.empty())
      first_violation = inst.ring_spec + " e=" + r.label(e) + " " +
                        to_string(inst.side) + ": complement part is clopen; "
                        "derived set is the complement part minus {0}";
  }
  const bool pass = instances > 0 && open_dense_ok == instances &&
                    derived_fixed_ok == instances &&
                    kernel_open_ok == instances &&
                    kernel_not_closed_ok == instances &&
                    kernel_derived_ok == instances;
  std::ostringstream detail;
  detail << instances << " nontrivial idempotent instances (" << na
         << " trivial marked not-applicable): fixed part open+dense "
         << open_dense_ok << "/" << instances << ", fixed derived identity "
         << derived_fixed_ok << "/" << instances << ", complement open "
         << kernel_open_ok << "/" << instances << ", complement not closed "
         << kernel_not_closed_ok << "/" << instances
         << ", complement derived identity " << kernel_derived_ok << "/"
         << instances;
  if (!first_violation.empty()) detail << "; e.g. " << first_violation;
  return {pass, detail.str()};
}

// ---------------------------------------------------------- criterion 6 ----
// Worked example: order-8 upper-triangular ring over F2, e=[[1,1],[0,0]],
// left action; eR is the 4-element top-row set, open, dense.
CriterionResult criterion_6() {
  auto ring = std::make_shared<const FiniteRing>(parse_ring_spec("ut:f2"));
  if (ring->order != 8) return {false, "ut:f2 should have order 8"};
  const auto e = ring->element_by_label("[[1,1],[0,0]]");
  if (!e || !is_idempotent(*ring, *e))
    return {false, "e=[[1,1],[0,0]] missing or not idempotent"};

  const TopologySpace t(ring, *e, ActionSide::left);
  const SubsetMask image = action_image(*ring, *e, ActionSide::left);
  if (image.count() != 4)
    return {false, "eR has " + std::to_string(image.count()) + " elements"};
  bool shape = true;
  image.for_each([&](elem x) {
    shape = shape && std::string_view(ring->label(x)).ends_with(",[0,0]]");
  });
  if (!shape) return {false, "eR contains an element outside the top row"};
  if (!t.is_open(image)) return {false, "eR is not open"};
  if (!t.closure(image).is_full()) return {false, "eR is not dense"};
  return {true, "eR = {[[a,b],[0,0]]} reproduced: 4 elements, open, dense"};
}

// ---------------------------------------------------------- criterion 7 ----
// Disconnectedness audit: fails on (Z2, a=0) with the no-proper-clopen
// witness, oracle-verified; holds exactly where some orbit closure is a
// proper nonempty clopen.
CriterionResult criterion_7() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  const ClaimReport rep = audit_claim("Cor-2.15", corpus);

  bool sier_right = false, sier_left = false;
  for (const InstanceResult& res : rep.results) {
    if (res.instance.ring_spec == "zn:2" && res.instance.a == 0) {
      if (res.verdict != Verdict::fails ||
          res.witness.at("kind") != "no-proper-clopen" ||
          res.guard.at("oracle") != "powerset")
        return {false, "sierpinski instance lacks the oracle-verified "
                       "no-proper-clopen witness"};
      (res.instance.side == ActionSide::right ? sier_right : sier_left) = true;
    }
  }
  if (!sier_right || !sier_left)
    return {false, "missing (zn:2, a=0) verdicts"};

  for (const InstanceResult& res : rep.results) {
    const TopologySpace& t = corpus.space(res.instance);
    bool proper = false;
    for (elem x = 0; x < t.order() && !proper; ++x) {
      const SubsetMask cl = t.closure(t.orbit(x).members);
      proper = !cl.empty() && !cl.is_full();
    }
    if (proper != (res.verdict == Verdict::holds))
      return {false, "verdict does not track the proper-clopen boundary on " +
                         res.instance.ring_spec};
  }
  return {true, std::to_string(rep.holds) + " holds / " +
                    std::to_string(rep.fails) +
                    " fails, boundary exactly the proper orbit closures"};
}

// ---------------------------------------------------------- criterion 8 ----
// Wherever hypothesis (2) holds for all x, every orbit closure contains a
// fixed point.
CriterionResult criterion_8() {
  const AuditCorpus corpus = AuditCorpus::build_default(16, kSeed);
  std::size_t applicable = 0;
  for (const Instance& inst : corpus.instances()) {
    const TopologySpace& t = corpus.space(inst);
    if (!t.fixed_point_audit(0).hypothesis2_holds) continue;
    ++applicable;
    for (elem x0 = 0; x0 < t.order(); ++x0) {
      const SubsetMask c = t.closure(t.orbit(x0).members);
      bool found = false;
      for (elem y = 0; y < t.order() && !found; ++y)
        found = c.test(y) && t.successor(y) == y;
      if (!found)
        return {false, "no fixed point in closure(orbit(" +
                           std::to_string(x0) + ")) on " + inst.ring_spec};
    }
  }
  return {true, std::to_string(applicable) +
                    " instances satisfy hypothesis (2); fixed points found "
                    "in every orbit closure"};
}

// ---------------------------------------------------------- criterion 9 ----
// Byte-identical reports for two CLI runs of the same audit.
CriterionResult criterion_9() {
  const std::string base = std::string(RINGTOP_CLI_PATH) +
                           " audit --max-order 16 --seed 7 --out ";
  for (const char* path : {"acceptance_a.json", "acceptance_b.json"}) {
    const std::string cmd = base + path + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) == -1) return {false, "could not run the CLI"};
  }
  auto slurp = [](const char* p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string a = slurp("acceptance_a.json");
  const std::string b = slurp("acceptance_b.json");
  std::remove("acceptance_a.json");
  std::remove("acceptance_b.json");
  if (a.empty()) return {false, "audit produced no report"};
  if (a != b) return {false, "reports differ between runs"};
  return {true, std::to_string(a.size()) + "-byte reports are identical"};
}

using Checker = CriterionResult (*)();
const std::vector<std::pair<const char*, Checker>> kCriteria{
    {"oracle equivalence of all operators", criterion_1},
    {"topology laws on explicit open lists", criterion_2},
    {"orbit closures are clopen (corpus to order 256)", criterion_3},
    {"separation characterizations and oracle agreement", criterion_4},
    {"pierce identities as stated", criterion_5},
    {"worked upper-triangular example", criterion_6},
    {"disconnectedness boundary", criterion_7},
    {"fixed points under hypothesis (2)", criterion_8},
    {"byte-identical audit reports", criterion_9},
};

int run_criterion(std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  const CriterionResult res = kCriteria[index].second();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char line[160];
  std::snprintf(line, sizeof line, "criterion %zu: %s (%.1fs) %s",
                index + 1, res.pass ? "PASS" : "FAIL", secs,
                kCriteria[index].first);
  std::cout << line << "\n    " << res.detail << "\n";
  return res.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    const int idx = std::atoi(argv[1]);
    if (idx < 1 || idx > int(kCriteria.size())) {
      std::cerr << "criterion number must be 1.." << kCriteria.size() << "\n";
      return 2;
    }
    return run_criterion(std::size_t(idx - 1));
  }
  int failures = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i)
    failures += run_criterion(i);
  std::cout << (failures ? "FAILURES: " + std::to_string(failures)
                         : std::string("ALL CRITERIA PASS"))
            << "\n";
  return failures;
}
