#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringtop/axioms.hpp"
#include "ringtop/oracle.hpp"
#include "ringtop/topology.hpp"

namespace ringtop {

struct Instance {
  std::string ring_spec;
  elem a = 0;
  ActionSide side = ActionSide::right;
};

/// Deterministic catalog of (ring, acting element, side) triples. Rings are
/// parsed once and shared; spaces and oracles are cached per instance.
/// Caches are not thread-safe; clone the corpus or prebuild before fanning
/// out.
class AuditCorpus {
 public:
  static AuditCorpus build_default(std::uint32_t max_order,
                                   std::uint64_t seed = 7);

  const std::vector<Instance>& instances() const { return instances_; }
  const std::vector<std::string>& generators() const { return generators_; }
  /// Distinct ring specs in first-appearance order.
  const std::vector<std::string>& ring_specs() const { return ring_specs_; }
  std::uint32_t max_order() const { return max_order_; }
  std::uint64_t seed() const { return seed_; }

  std::shared_ptr<const FiniteRing> ring(const std::string& spec) const;
  const TopologySpace& space(const Instance& inst) const;
  /// nullptr when the ring is beyond oracle range.
  const ExplicitTopology* oracle(const Instance& inst) const;

 private:
  void push(const std::string& spec, elem a, ActionSide side);
  void push_both_sides(const std::string& spec, elem a);

  std::uint32_t max_order_ = 16;
  std::uint64_t seed_ = 7;
  std::vector<Instance> instances_;
  std::vector<std::string> generators_;
  std::vector<std::string> ring_specs_;
  mutable std::map<std::string, std::shared_ptr<const FiniteRing>> rings_;
  mutable std::map<std::string, std::unique_ptr<TopologySpace>> spaces_;
  mutable std::map<std::string, std::unique_ptr<ExplicitTopology>> oracles_;
};

enum class Verdict { holds, fails, not_applicable };
const char* to_string(Verdict v);

struct InstanceResult {
  Instance instance;
  Verdict verdict = Verdict::not_applicable;
  nlohmann::ordered_json witness;  // set when verdict == fails
  nlohmann::ordered_json guard;    // applicability / interpretation facts
  std::string reason;              // set when verdict == not_applicable
};

struct ClaimReport {
  std::string claim;
  std::string statement;
  std::vector<InstanceResult> results;  // corpus order
  std::size_t holds = 0, fails = 0, not_applicable = 0;
};

/// Claim ids in audit order with one-line statements of what is checked.
const std::vector<std::pair<std::string, std::string>>& claim_catalog();

ClaimReport audit_claim(const std::string& claim_id, const AuditCorpus& corpus);
std::vector<ClaimReport> audit_all(const AuditCorpus& corpus);

/// Deterministic serialization; within each claim the failing instances are
/// listed first. Round-trips through the documented schema.
nlohmann::ordered_json report_to_json(const std::vector<ClaimReport>& reports,
                                      const AuditCorpus& corpus);
std::string report_to_markdown(const std::vector<ClaimReport>& reports,
                               const AuditCorpus& corpus);

}  // namespace ringtop
