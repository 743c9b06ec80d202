#include "commalg/ideal_io.hpp"

#include <fstream>

#include "commalg/errors.hpp"

namespace commalg {

ContextPtr context_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("\"vars\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : j) {
    if (!v.is_string()) throw InvalidInput("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  return VarContext::make(std::move(names));
}

nlohmann::json context_to_json(const VarContext& ctx) { return ctx.names(); }

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) {
    throw InvalidInput("an ideal needs \"vars\" and \"gens\"");
  }
  auto ctx = context_from_json(j.at("vars"));
  const auto& gens = j.at("gens");
  if (!gens.is_array()) throw InvalidInput("\"gens\" must be an array of exponent vectors");
  std::vector<Monomial> mons;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != ctx->size()) {
      throw InvalidInput("every exponent vector needs one entry per variable");
    }
    std::vector<std::uint32_t> exps;
    for (const auto& e : g) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1'000'000) {
        throw InvalidInput("exponents must be non-negative integers");
      }
      exps.push_back(static_cast<std::uint32_t>(e.get<long long>()));
    }
    mons.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ctx, std::move(mons));
}

nlohmann::json ideal_to_json(const MonomialIdeal& i) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : i.generators()) gens.push_back(g.exponents());
  return {{"vars", context_to_json(*i.context())}, {"gens", gens}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace commalg
