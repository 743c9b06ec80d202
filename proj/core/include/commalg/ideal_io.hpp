#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "commalg/monomial_ideal.hpp"

namespace commalg {

/// {"vars": [...], "gens": [[e1, ..., en], ...]}
MonomialIdeal ideal_from_json(const nlohmann::json& j);
nlohmann::json ideal_to_json(const MonomialIdeal& i);

nlohmann::json context_to_json(const VarContext& ctx);
ContextPtr context_from_json(const nlohmann::json& j);

/// Parses a whole file; malformed JSON or I/O failure throws InvalidInput.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace commalg
