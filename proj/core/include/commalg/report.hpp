#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commalg/s2_trace.hpp"

namespace commalg {

inline constexpr int kReportSchemaVersion = 1;

enum class ClaimStatus { Pass, Fail, Implied, NotImplied, VerifiedToBound, Info };

std::string to_string(ClaimStatus s);

/// How a claim turns expected and computed values into a status.
enum class ClaimKind {
  Check,        // exact equality
  Bounded,      // equality that only holds through a degree bound
  Implication,  // computed = whether the hypotheses hold
  Info,         // reported; fails only if an expected value disagrees
};

struct Claim {
  std::string id;
  std::string anchor;
  ClaimKind kind = ClaimKind::Info;
  nlohmann::json expected;  // null when nothing is expected
  nlohmann::json computed;
  std::optional<std::uint32_t> bound;
  std::string note;
  ClaimStatus status = ClaimStatus::Info;

  void evaluate();
};

struct ExpectedEntry {
  nlohmann::json value;
  std::optional<std::string> anchor;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Claim>& claims() const { return claims_; }
  const Claim* find(const std::string& id) const;

  Claim& check(std::string id, std::string anchor, nlohmann::json expected, nlohmann::json computed);
  Claim& bounded(std::string id, std::string anchor, nlohmann::json expected, nlohmann::json computed,
                 std::uint32_t bound);
  /// Records a verdict; `Pass` and `VerifiedToBound` count as true.
  Claim& verdict(std::string id, std::string anchor, Verdict v, std::optional<std::uint32_t> bound);
  Claim& implication(std::string id, std::string anchor, bool hypotheses_hold, std::string note);
  Claim& info(std::string id, std::string anchor, nlohmann::json computed);

  /// Overrides expected values and anchors by claim id, then re-evaluates.
  /// Returns the ids that matched no claim.
  std::vector<std::string> apply_expected(const std::map<std::string, ExpectedEntry>& entries);

  void append(const VerificationReport& other, const std::string& prefix);
  void set_meta(const std::string& key, nlohmann::json value) { meta_[key] = std::move(value); }

  /// No claim failed.
  bool ok() const;
  std::size_t count(ClaimStatus s) const;

  nlohmann::json to_json() const;
  std::string to_table() const;

 private:
  Claim& add(Claim c);

  std::string subject_;
  std::vector<Claim> claims_;
  nlohmann::json meta_ = nlohmann::json::object();
};

}  // namespace commalg
