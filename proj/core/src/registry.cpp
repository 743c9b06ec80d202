#include "commalg/registry.hpp"

#include <cstdlib>

#include "commalg/errors.hpp"
#include "commalg/families.hpp"
#include "commalg/ideal_io.hpp"
#include "commalg/semigroup.hpp"
#include "commalg/simplicial.hpp"

namespace commalg {
namespace {

std::vector<Series> series_list(const nlohmann::json& j, const FieldSpec& f) {
  std::vector<Series> out;
  for (const auto& s : j) out.push_back(parse_series(s.get<std::string>(), f));
  return out;
}

FieldSpec entry_field(const RegistryEntry& e, const RunConfig& cfg) {
  if (e.params.contains("field")) return FieldSpec::parse(e.params.at("field").get<std::string>());
  return cfg.field.value_or(FieldSpec::rationals());
}

VerificationReport complex_report(const RegistryEntry& e) {
  const SimplicialComplex c = complex_from_json(e.params.at("complex"));
  const MonomialIdeal i = ideal_of(c);
  VerificationReport rep("complex " + c.to_string());
  rep.info("f_vector", "f-vector", c.f_vector());
  for (const auto& name : e.params.at("fields")) {
    const FieldSpec f = FieldSpec::parse(name.get<std::string>());
    const std::string tag = "[" + f.to_string() + "]";
    const int d = depth(i, f);
    rep.info("depth" + tag, "depth k[Delta]", d);
    rep.check("depth_links" + tag, "depth from links = depth from Betti numbers", d, depth_from_links(c, f));
    rep.info("homology" + tag, "reduced homology ranks H_-1..H_dim", reduced_homology(c, f).ranks);
    rep.info("cohen_macaulay" + tag, "Reisner criterion", is_cohen_macaulay(c, f));
  }
  return rep;
}

VerificationReport build(const RegistryEntry& e, const RunConfig& cfg) {
  const auto& p = e.params;
  if (e.kind == "f-family") {
    FFamilySpec spec = FFamilySpec::from_json(p);
    FFamilyOptions opts;
    opts.field = entry_field(e, cfg);
    opts.degree_bound = cfg.degree_bound;
    opts.jobs = cfg.jobs;
    if (p.contains("parameters")) opts.parameters = p.at("parameters").get<std::vector<std::vector<std::size_t>>>();
    if (p.contains("trace_powers")) opts.trace_powers = p.at("trace_powers").get<std::vector<unsigned>>();
    return f_family_report(spec, opts);
  }
  if (e.kind == "k-plus-q") return k_plus_q_report(ideal_from_json(p.at("q")), cfg.degree_bound);
  if (e.kind == "fiber-product") return fiber_product_report(ideal_from_json(p.at("q")));
  if (e.kind == "semigroup") return semigroup_report(NumericalSemigroup(p.at("gens").get<std::vector<std::uint32_t>>()));
  if (e.kind == "subalgebra") {
    const FieldSpec f = entry_field(e, cfg);
    const auto sub = TruncatedSubalgebra::closure(series_list(p.at("gens"), f), f,
                                                  p.value("precision", TruncatedSubalgebra::kDefaultPrecision),
                                                  p.value("margin", TruncatedSubalgebra::kDefaultMargin));
    return subalgebra_report(sub, p.value("queries", std::vector<std::uint32_t>{}));
  }
  if (e.kind == "cone-extension") {
    const FieldSpec f = entry_field(e, cfg);
    return cone_extension_report(series_list(p.at("gens"), f), f,
                                 p.value("precision", TruncatedSubalgebra::kDefaultPrecision),
                                 p.value("s_precision", 3u), p.value("margin", TruncatedSubalgebra::kDefaultMargin));
  }
  if (e.kind == "quadratic-extension") {
    QuadraticExtensionModel m;
    m.base = FieldSpec::parse(p.at("base").get<std::string>());
    m.c = mpq_class(p.at("c").get<std::string>());
    m.e = mpq_class(p.at("e").get<std::string>());
    m.c.canonicalize();
    m.e.canonicalize();
    m.precision = p.value("precision", 12u);
    return quadratic_extension_report(m);
  }
  if (e.kind == "complex") return complex_report(e);
  throw InvalidInput("unknown registry kind '" + e.kind + "'");
}

}  // namespace

Registry Registry::parse(const nlohmann::json& j) {
  Registry r;
  try {
    for (const auto& item : j.at("examples")) {
      RegistryEntry e;
      e.id = item.at("id").get<std::string>();
      e.kind = item.at("kind").get<std::string>();
      e.title = item.value("title", "");
      e.params = item.value("params", nlohmann::json::object());
      const nlohmann::json expected = item.value("expected", nlohmann::json::object());
      for (const auto& [claim, v] : expected.items()) {
        ExpectedEntry x;
        if (v.is_object() && (v.contains("value") || v.contains("anchor"))) {
          x.value = v.value("value", nlohmann::json());
          if (v.contains("anchor")) x.anchor = v.at("anchor").get<std::string>();
        } else {
          x.value = v;
        }
        e.expected.emplace(claim, std::move(x));
      }
      e.informational = item.value("informational", nlohmann::json::array());
      for (const auto& other : r.entries_) {
        if (other.id == e.id) throw InvalidInput("duplicate registry id '" + e.id + "'");
      }
      r.entries_.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("malformed registry: ") + ex.what());
  }
  return r;
}

Registry Registry::load(const std::filesystem::path& path) { return parse(read_json_file(path)); }

std::filesystem::path Registry::default_path() {
  if (const char* env = std::getenv("COMMALG_REGISTRY"); env && *env) return env;
  if (std::filesystem::exists(COMMALG_DEFAULT_REGISTRY)) return COMMALG_DEFAULT_REGISTRY;
  return COMMALG_INSTALLED_REGISTRY;
}

const RegistryEntry& Registry::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return e;
  }
  throw InvalidInput("unknown example id '" + id + "'");
}

VerificationReport run_entry(const RegistryEntry& entry, const RunConfig& cfg) {
  VerificationReport rep = build(entry, cfg);
  rep.set_meta("id", entry.id);
  if (!entry.title.empty()) rep.set_meta("title", entry.title);
  for (const auto& id : rep.apply_expected(entry.expected)) {
    rep.check("registry." + id, "expected claim was not produced", true, false);
  }
  for (const auto& item : entry.informational) {
    rep.info(item.at("id").get<std::string>(), item.value("statement", ""), nullptr).note = "recorded, not checked";
  }
  return rep;
}

}  // namespace commalg
