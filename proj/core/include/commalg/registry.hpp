#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commalg/field.hpp"
#include "commalg/report.hpp"

namespace commalg {

struct RunConfig {
  std::vector<std::string> ids;
  /// Overrides the field of entries that do not pin one.
  std::optional<FieldSpec> field;
  std::optional<std::uint32_t> degree_bound;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::string format = "json";
  unsigned jobs = 1;
};

struct RegistryEntry {
  std::string id;
  std::string kind;
  std::string title;
  nlohmann::json params;
  std::map<std::string, ExpectedEntry> expected;
  /// Statements recorded for reference only; never checked.
  nlohmann::json informational = nlohmann::json::array();
};

class Registry {
 public:
  static Registry load(const std::filesystem::path& path);
  static Registry parse(const nlohmann::json& j);
  /// $COMMALG_REGISTRY, then the source tree copy, then the installed copy.
  static std::filesystem::path default_path();

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  /// Throws InvalidInput for an unknown id.
  const RegistryEntry& find(const std::string& id) const;

 private:
  std::vector<RegistryEntry> entries_;
};

/// Runs the verifier for one entry and applies its expected values. An
/// expected claim the verifier did not produce is reported as a failure.
VerificationReport run_entry(const RegistryEntry& entry, const RunConfig& cfg);

}  // namespace commalg
