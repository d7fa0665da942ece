#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringtop {

/// Dense element index into a finite ring's Cayley tables.
using elem = std::uint16_t;

/// Hard cap on ring order; keeps both Cayley tables within 32 MiB and every
/// exhaustive axiom check O(n^3) feasible.
inline constexpr std::uint32_t kMaxRingOrder = 4096;

/// Rings up to this order get the powerset oracle (2^n subset enumeration).
inline constexpr std::uint32_t kOracleMaxOrder = 16;

/// Which multiplication drives the successor map: right means x -> x*a,
/// left means x -> a*x.
enum class ActionSide : std::uint8_t { right, left };

inline const char* to_string(ActionSide s) {
  return s == ActionSide::right ? "right" : "left";
}

/// Every library failure carries a machine-readable kind plus, where it makes
/// sense, the witnessing elements (e.g. the triple violating associativity).
///
/// Kinds in use: "invalid-order", "too-large", "axiom-violation",
/// "not-idempotent", "invalid-cover", "oracle-required", "unknown-claim",
/// "parse-error", "bad-element".
class error : public std::runtime_error {
 public:
  error(std::string kind, std::string message, std::vector<elem> witness = {})
      : std::runtime_error(format(kind, message, witness)),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<elem>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::string& kind, const std::string& message,
                            const std::vector<elem>& witness) {
    std::string s = kind + ": " + message;
    if (!witness.empty()) {
      s += " (witness:";
      for (elem x : witness) s += " " + std::to_string(x);
      s += ")";
    }
    return s;
  }

  std::string kind_;
  std::vector<elem> witness_;
};

}  // namespace ringtop
