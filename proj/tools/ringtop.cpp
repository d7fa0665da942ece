// Command-line front end: load ring specs, run topology operators and claim
// audits, export reports and DOT graphs.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ringtop/audit.hpp"
#include "ringtop/axioms.hpp"
#include "ringtop/oracle.hpp"
#include "ringtop/ringspec.hpp"
#include "ringtop/topology.hpp"

namespace {

using namespace ringtop;

struct TargetArgs {
  std::string ring_spec;
  std::string element = "0";
  std::string side = "right";
};

TopologySpace make_space(const TargetArgs& args) {
  auto ring = std::make_shared<const FiniteRing>(parse_ring_spec(args.ring_spec));
  const elem a = parse_element(*ring, args.element);
  return TopologySpace(std::move(ring), a, parse_side(args.side));
}

std::string label_set(const FiniteRing& r, const SubsetMask& m) {
  std::string s;
  bool first = true;
  m.for_each([&](elem x) {
    if (!first) s += ", ";
    s += r.label(x);
    first = false;
  });
  return s.empty() ? "(empty)" : s;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw error("parse-error", "cannot write to '" + out_path + "'");
  out << text;
}

int cmd_describe(const TargetArgs& args) {
  const FiniteRing r = parse_ring_spec(args.ring_spec);
  std::cout << "ring " << r.spec << "\n";
  std::cout << "  order: " << r.order << "\n";
  std::cout << "  zero: " << r.label(r.zero) << "   one: " << r.label(r.one)
            << "\n";
  std::cout << "  commutative: " << (r.commutative ? "yes" : "no") << "\n";
  const auto idem = idempotents(r);
  std::cout << "  idempotents (" << idem.size() << "):";
  for (elem e : idem) std::cout << " " << r.label(e);
  std::cout << "\n";
  if (r.order <= 32) {
    std::cout << "  elements:";
    for (elem x = 0; x < r.order; ++x)
      std::cout << " " << int(x) << "=" << r.label(x);
    std::cout << "\n";
  }
  return 0;
}

int cmd_topology(const TargetArgs& args) {
  const TopologySpace t = make_space(args);
  if (t.order() <= kOracleMaxOrder) {
    const ExplicitTopology oracle = ExplicitTopology::enumerate(t);
    std::cout << oracle.count() << " open sets:";
    const std::size_t show = oracle.count() <= 40 ? oracle.count() : 16;
    for (std::size_t i = 0; i < show; ++i)
      std::cout << (i ? ", " : " ")
                << SubsetMask::from_bits(t.order(), oracle.opens()[i])
                       .to_string();
    if (show < oracle.count()) std::cout << ", ...";
    std::cout << "\n";
    const auto conn = oracle.connected();
    if (conn.connected)
      std::cout << "proper nonempty clopen subsets: none (connected)\n";
    else
      std::cout << "first proper nonempty clopen: "
                << SubsetMask::from_bits(t.order(), *conn.clopen_witness)
                       .to_string()
                << " (disconnected)\n";
  } else {
    std::cout << "order " << t.order()
              << " exceeds the oracle cap of " << kOracleMaxOrder
              << "; open sets not enumerated\n";
    std::vector<const SubsetMask*> orbits;
    orbits.reserve(t.order());
    for (elem x = 0; x < t.order(); ++x) orbits.push_back(&t.orbit(x).members);
    std::sort(orbits.begin(), orbits.end(),
              [](const SubsetMask* a, const SubsetMask* b) {
                return std::lexicographical_compare(
                    a->words(), a->words() + a->word_count(), b->words(),
                    b->words() + b->word_count());
              });
    const std::size_t distinct =
        std::size_t(std::unique(orbits.begin(), orbits.end(),
                                [](const SubsetMask* a, const SubsetMask* b) {
                                  return *a == *b;
                                }) -
                    orbits.begin());
    std::cout << "base: " << distinct << " distinct minimal opens, "
              << t.component_count() << " weak component(s)\n";
    std::cout << (t.component_count() > 1
                      ? "disconnected (component blocks are clopen)\n"
                      : "connected as a successor graph\n");
  }
  return 0;
}

int cmd_orbits(const TargetArgs& args, const std::string& out_path) {
  write_output(out_path, to_dot(make_space(args)));
  return 0;
}

void print_verdict(const FiniteRing& r, const AxiomVerdict& v) {
  std::cout << v.axiom << ": ";
  if (v.holds()) {
    std::cout << "holds\n";
    return;
  }
  std::cout << (v.agree() ? "fails" : "definitional/characterization disagree");
  if (v.witness) {
    std::cout << "; witness (";
    for (std::size_t i = 0; i < v.witness->elements.size(); ++i)
      std::cout << (i ? "," : "") << r.label(v.witness->elements[i]);
    std::cout << ")";
    if (v.witness->set) std::cout << " set " << v.witness->set->to_string();
    if (!v.witness->detail.empty()) std::cout << ": " << v.witness->detail;
  }
  if (!v.note.empty()) std::cout << " [" << v.note << "]";
  std::cout << "\n";
}

nlohmann::ordered_json verdict_json(const FiniteRing& r,
                                    const AxiomVerdict& v) {
  nlohmann::ordered_json j;
  j["axiom"] = v.axiom;
  j["definitional"] = v.holds_definitional;
  j["characterization"] = v.holds_characterization;
  if (v.witness) {
    nlohmann::json elems = nlohmann::json::array();
    for (elem x : v.witness->elements) elems.push_back(r.label(x));
    j["witness"] = {{"elements", elems}, {"detail", v.witness->detail}};
    if (v.witness->set) j["witness"]["set"] = v.witness->set->to_string();
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

int cmd_axioms(const TargetArgs& args, const std::string& format) {
  const TopologySpace t = make_space(args);
  const FiniteRing& r = t.ring();
  std::vector<AxiomVerdict> verdicts{t0(t), t1(t), t2(t)};
  bool regular_skipped = false;
  if (t.order() <= kOracleMaxOrder)
    verdicts.push_back(regular(t));
  else
    regular_skipped = true;

  const auto fixed_all = s_unital_fixed_points(t, false);
  const auto fixed_nz = s_unital_fixed_points(t, true);

  if (format == "json") {
    nlohmann::ordered_json j;
    j["instance"] = {{"ring", r.spec},
                     {"a", r.label(t.acting_element())},
                     {"side", to_string(t.side())}};
    j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) j["verdicts"].push_back(verdict_json(r, v));
    if (regular_skipped) j["regular"] = "skipped: order exceeds oracle cap";
    nlohmann::json f = nlohmann::json::array(), fnz = nlohmann::json::array();
    for (elem x : fixed_all) f.push_back(r.label(x));
    for (elem x : fixed_nz) fnz.push_back(r.label(x));
    j["s_unital_fixed_points"] = f;
    j["s_unital_fixed_points_nonzero"] = fnz;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  for (const auto& v : verdicts) print_verdict(r, v);
  if (regular_skipped)
    std::cout << "regular: skipped (order " << t.order()
              << " exceeds oracle cap " << kOracleMaxOrder << ")\n";
  std::cout << "s-unital fixed points: {" << label_set(r, [&] {
    SubsetMask m(t.order());
    for (elem x : fixed_all) m.set(x);
    return m;
  }()) << "}\n";
  std::cout << "s-unital fixed points excluding zero: {" << label_set(r, [&] {
    SubsetMask m(t.order());
    for (elem x : fixed_nz) m.set(x);
    return m;
  }()) << "}\n";
  return 0;
}

int cmd_pierce(const TargetArgs& args) {
  auto ring = std::make_shared<const FiniteRing>(parse_ring_spec(args.ring_spec));
  const elem e = parse_element(*ring, args.element);
  const ActionSide side = parse_side(args.side);
  const PierceSplit split = pierce_decompose(*ring, e, side);
  const TopologySpace t(ring, e, side);

  const char* fixed_name = side == ActionSide::right ? "Re" : "eR";
  const char* kernel_name = side == ActionSide::right ? "R(1-e)" : "(1-e)R";

  std::cout << "pierce split of " << ring->spec << " at e=" << ring->label(e)
            << ", " << to_string(side) << " action\n";
  std::cout << "  fixed part " << fixed_name << " (" << split.fixed_part.count()
            << "): " << label_set(*ring, split.fixed_part) << "\n";
  std::cout << "  complement part " << kernel_name << " ("
            << split.kernel_part.count()
            << "): " << label_set(*ring, split.kernel_part) << "\n";
  std::cout << "  direct sum verified: "
            << (split.direct_sum_verified ? "yes" : "NO") << "\n";

  const bool open_f = t.is_open(split.fixed_part);
  const bool dense_f = t.closure(split.fixed_part).is_full();
  const bool derived_f =
      t.derived_set(split.fixed_part) == split.fixed_part.complement();
  std::cout << "  " << fixed_name << ": open " << (open_f ? "yes" : "no")
            << "; dense " << (dense_f ? "yes" : "no")
            << "; derived set equals complement "
            << (derived_f ? "yes" : "no") << "\n";

  const bool open_k = t.is_open(split.kernel_part);
  const bool closed_k = t.is_closed(split.kernel_part);
  std::cout << "  " << kernel_name << ": open " << (open_k ? "yes" : "no")
            << "; closed " << (closed_k ? "yes" : "no") << "; derived set "
            << t.derived_set(split.kernel_part).to_string() << "\n";
  return 0;
}

int cmd_audit(std::uint32_t max_order, std::uint64_t seed,
              const std::string& format, const std::string& out_path,
              const std::string& claim, const std::string& expect_fail) {
  const AuditCorpus corpus = AuditCorpus::build_default(max_order, seed);
  std::vector<ClaimReport> reports;
  if (claim.empty())
    reports = audit_all(corpus);
  else
    reports.push_back(audit_claim(claim, corpus));

  std::string doc;
  if (format == "markdown")
    doc = report_to_markdown(reports, corpus);
  else
    doc = report_to_json(reports, corpus).dump(2) + "\n";
  write_output(out_path, doc);

  bool unexpected_counterexample = false;
  std::ostream& log = (out_path.empty() || out_path == "-") ? std::cerr
                                                            : std::cout;
  for (const ClaimReport& rep : reports) {
    log << rep.claim << ": holds " << rep.holds << ", fails " << rep.fails
        << ", n/a " << rep.not_applicable << "\n";
    if (rep.fails > 0 &&
        (',' + expect_fail + ',').find(',' + rep.claim + ',') ==
            std::string::npos)
      unexpected_counterexample = true;
  }
  return unexpected_counterexample ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "topologies induced on finite rings by one-sided multiplication: "
      "operators, separation axioms, and brute-force claim audits"};
  app.require_subcommand(1);

  TargetArgs target;
  std::string out_path, format = "text";
  std::uint32_t max_order = 16;
  std::uint64_t seed = 7;
  std::string claim, expect_fail;

  auto add_target = [&](CLI::App* sub, bool uses_e) {
    sub->add_option("--ring", target.ring_spec,
                    "ring spec: zn:<n> | prod:<s>,<s> | ut:f2|f3 | m2:f2|f3 "
                    "| file:<path>")
        ->required();
    sub->add_option(uses_e ? "--e" : "--a", target.element,
                    "element, by index or label");
    sub->add_option("--side", target.side, "right | left");
  };

  CLI::App* describe = app.add_subcommand("describe", "print a ring card");
  describe->add_option("--ring", target.ring_spec, "ring spec")->required();

  CLI::App* topology =
      app.add_subcommand("topology", "open-set census for one acting element");
  add_target(topology, false);

  CLI::App* orbits =
      app.add_subcommand("orbits", "DOT export of the successor graph");
  add_target(orbits, false);
  orbits->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* axioms = app.add_subcommand(
      "axioms", "separation axiom verdicts (definitional and characterized)");
  add_target(axioms, false);
  axioms->add_option("--format", format, "text | json");

  CLI::App* pierce = app.add_subcommand(
      "pierce", "idempotent splitting and its topological status");
  add_target(pierce, true);

  CLI::App* audit =
      app.add_subcommand("audit", "run every claim over the default corpus");
  audit->add_option("--max-order", max_order, "corpus ring order cap");
  audit->add_option("--seed", seed, "seed for randomized sampling");
  audit->add_option("--format", format, "json | markdown");
  audit->add_option("--out", out_path, "report path (default stdout)");
  audit->add_option("--claim", claim, "audit a single claim id");
  audit->add_option("--expect-fail", expect_fail,
                    "comma-separated claim ids whose counterexamples do not "
                    "flip the exit code");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (describe->parsed()) return cmd_describe(target);
    if (topology->parsed()) return cmd_topology(target);
    if (orbits->parsed()) return cmd_orbits(target, out_path);
    if (axioms->parsed())
      return cmd_axioms(target, format == "text" ? "text" : format);
    if (pierce->parsed()) return cmd_pierce(target);
    if (audit->parsed())
      return cmd_audit(max_order, seed, format == "text" ? "json" : format,
                       out_path, claim, expect_fail);
  } catch (const ringtop::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
