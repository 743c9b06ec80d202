#include "cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "commalg/errors.hpp"
#include "commalg/families.hpp"
#include "commalg/ideal_io.hpp"
#include "commalg/registry.hpp"
#include "commalg/semigroup.hpp"
#include "commalg/simplicial.hpp"
#include "commalg/suite.hpp"

namespace commalg {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

template <class T>
std::vector<T> split_numbers(const std::string& s, char sep = ',') {
  std::vector<T> out;
  for (const auto& tok : split(s, sep)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("expected a number, got '" + tok + "'");
    }
    if (used != tok.size() || v < 0) throw InvalidInput("expected a non-negative integer, got '" + tok + "'");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

std::vector<std::vector<std::size_t>> split_sets(const std::string& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& part : split(s, ';')) out.push_back(split_numbers<std::size_t>(part));
  return out;
}

struct Options {
  std::string field;
  std::uint32_t degree_bound = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::string format = "json";
  unsigned jobs = 1;
  std::string registry;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  if (!o.field.empty()) cfg.field = FieldSpec::parse(o.field);
  if (o.degree_bound > 0) cfg.degree_bound = o.degree_bound;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.format = o.format;
  cfg.jobs = o.jobs;
  return cfg;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int emit(const std::vector<VerificationReport>& reports, const std::string& format, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (format == "table") {
    for (const auto& r : reports) out << r.to_table() << '\n';
  } else if (format == "csv") {
    out << "subject,id,status,computed,expected\n";
    for (const auto& r : reports) {
      for (const auto& c : r.claims()) {
        out << csv_field(r.subject()) << ',' << csv_field(c.id) << ',' << to_string(c.status) << ','
            << csv_field(c.computed.dump()) << ',' << csv_field(c.expected.is_null() ? "" : c.expected.dump()) << '\n';
      }
    }
  } else {
    nlohmann::json j = {{"schema_version", kReportSchemaVersion}, {"ok", ok}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    out << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

VerificationReport ideal_depth_report(const MonomialIdeal& i, const FieldSpec& f, unsigned jobs) {
  VerificationReport rep("T/I, I = " + i.to_string());
  rep.set_meta("field", f.to_string());
  const int d = depth(i, f, jobs);
  rep.info("depth", "depth T/I", d);
  if (i.is_squarefree()) {
    rep.check("depth_links", "depth from links = depth from Betti numbers", d, depth_from_links(complex_of(i), f));
    rep.info("projective_dimension", "pd T/I", graded_betti(i, f, jobs).projective_dimension_of_quotient());
  }
  const HeightDim hd = height_and_dim(i);
  rep.info("dim", "dim T/I", hd.dim);
  rep.info("cohen_macaulay", "depth = dim", d == hd.dim);
  return rep;
}

VerificationReport complex_report(const SimplicialComplex& c, const FieldSpec& f) {
  VerificationReport rep("complex " + c.to_string());
  rep.set_meta("field", f.to_string());
  rep.info("dimension", "dim Delta", c.dimension());
  rep.info("f_vector", "f-vector", c.f_vector());
  rep.info("homology", "reduced homology ranks H_-1..H_dim", reduced_homology(c, f).ranks);
  const int d = depth_from_links(c, f);
  rep.info("depth", "depth k[Delta]", d);
  rep.check("depth_betti", "depth from Betti numbers = depth from links", d, depth(ideal_of(c), f));
  rep.info("cohen_macaulay", "Reisner criterion", is_cohen_macaulay(c, f));
  return rep;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of monomial, Stanley-Reisner, pullback and semigroup examples"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "q or fp:<p> (entries that pin a field keep it)");
  app.add_option("--degree-bound", o.degree_bound, "Degree bound for colon computations (default: max deg I + n)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for the property suites")->capture_default_str();
  app.add_option("--trials", o.trials, "Trials per property suite")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", o.format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}))->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--registry", o.registry, "Registry file (default: bundled families.json)");

  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "Run registered examples by id, or all of them");
  verify->add_option("ids", ids, "Example ids or 'all'")->required();

  app.add_subcommand("suite", "Run the seeded property suites");
  app.add_subcommand("list", "List registered example ids");

  std::string gens_text;
  auto* semigroup = app.add_subcommand("semigroup", "Invariants of a numerical semigroup");
  semigroup->add_option("--gens", gens_text, "Comma-separated generators, e.g. 3,4")->required();

  std::string series_text, queries_text;
  std::uint32_t prec = TruncatedSubalgebra::kDefaultPrecision, margin = TruncatedSubalgebra::kDefaultMargin;
  auto* subalgebra = app.add_subcommand("subalgebra", "Closure of a subalgebra of k[t]/(t^N)");
  subalgebra->add_option("--gens", series_text, "Comma-separated series, e.g. \"t^2+t^3,t^4,t^6\"")->required();
  subalgebra->add_option("--prec", prec, "Precision N")->capture_default_str();
  subalgebra->add_option("--margin", margin, "Safety margin below N")->capture_default_str();
  subalgebra->add_option("--queries", queries_text, "Exponents j to test for t^j in P");

  std::size_t n = 0;
  std::string subsets_text, params_text, powers_text;
  auto* family = app.add_subcommand("family", "Report on A = T/∩(F_i)");
  family->add_option("--n", n, "Number of variables")->required();
  family->add_option("--subsets", subsets_text, "Subsets F_i, e.g. \"1,2;3,4\"")->required();
  family->add_option("--parameters", params_text, "Linear forms as variable lists, e.g. \"1,3;2,4\"");
  family->add_option("--trace-powers", powers_text, "k for which m^k is tested, e.g. 1,2,3");

  std::string ideal_file, complex_file;
  auto* depth_cmd = app.add_subcommand("depth", "Depth of T/I or of a Stanley-Reisner ring");
  auto* depth_ideal = depth_cmd->add_option("--ideal", ideal_file, "Ideal JSON file");
  depth_cmd->add_option("--complex", complex_file, "Complex JSON file")->excludes(depth_ideal);
  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers of a squarefree ideal");
  betti->add_option("--ideal", ideal_file, "Ideal JSON file")->required();
  auto* complex_cmd = app.add_subcommand("complex", "Homology and depth of a simplicial complex");
  complex_cmd->add_option("--complex", complex_file, "Complex JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const RunConfig cfg = make_config(o);
    const FieldSpec field = cfg.field.value_or(FieldSpec::rationals());
    auto registry = [&] { return Registry::load(o.registry.empty() ? Registry::default_path() : std::filesystem::path(o.registry)); };

    if (*verify) {
      const Registry reg = registry();
      std::vector<const RegistryEntry*> chosen;
      if (ids.size() == 1 && ids[0] == "all") {
        for (const auto& e : reg.entries()) chosen.push_back(&e);
      } else {
        for (const auto& id : ids) chosen.push_back(&reg.find(id));
      }
      std::vector<VerificationReport> reports;
      for (const auto* e : chosen) reports.push_back(run_entry(*e, cfg));
      return emit(reports, o.format, out);
    }
    if (app.got_subcommand("suite")) return emit({run_suite(cfg)}, o.format, out);
    if (app.got_subcommand("list")) {
      const Registry reg = registry();
      for (const auto& e : reg.entries()) out << e.id << "  " << e.kind << "  " << e.title << '\n';
      return kExitOk;
    }
    if (*semigroup) return emit({semigroup_report(NumericalSemigroup(split_numbers<std::uint32_t>(gens_text)))}, o.format, out);
    if (*subalgebra) {
      std::vector<Series> gens;
      for (const auto& s : split(series_text, ',')) gens.push_back(parse_series(s, field));
      const auto p = TruncatedSubalgebra::closure(gens, field, prec, margin);
      return emit({subalgebra_report(p, split_numbers<std::uint32_t>(queries_text))}, o.format, out);
    }
    if (*family) {
      FFamilySpec spec{n, split_sets(subsets_text)};
      FFamilyOptions opts;
      opts.field = field;
      opts.parameters = split_sets(params_text);
      opts.trace_powers = split_numbers<unsigned>(powers_text);
      opts.degree_bound = cfg.degree_bound;
      opts.jobs = cfg.jobs;
      return emit({f_family_report(spec, opts)}, o.format, out);
    }
    if (*depth_cmd) {
      if (!ideal_file.empty()) return emit({ideal_depth_report(ideal_from_json(read_json_file(ideal_file)), field, cfg.jobs)}, o.format, out);
      if (!complex_file.empty()) return emit({complex_report(complex_from_json(read_json_file(complex_file)), field)}, o.format, out);
      throw InvalidInput("depth needs --ideal or --complex");
    }
    if (*betti) {
      const BettiTable t = graded_betti(ideal_from_json(read_json_file(ideal_file)), field, cfg.jobs);
      if (o.format == "csv") {
        out << t.to_csv();
      } else {
        out << t.to_json().dump(2) << '\n';
      }
      return kExitOk;
    }
    if (*complex_cmd) return emit({complex_report(complex_from_json(read_json_file(complex_file)), field)}, o.format, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitInput;
}

}  // namespace commalg
