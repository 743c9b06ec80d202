#include "commalg/families.hpp"

#include <algorithm>
#include <limits>

#include "commalg/errors.hpp"
#include "commalg/s2_trace.hpp"
#include "commalg/simplicial.hpp"

namespace commalg {
namespace {

nlohmann::json hilbert_json(const std::vector<std::size_t>& h) { return nlohmann::json(h); }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

}  // namespace

void FFamilySpec::validate() const {
  if (n == 0) throw InvalidInput("F-family needs at least one variable");
  if (n > 64) throw InvalidInput("F-family has too many variables");
  if (subsets.empty()) throw InvalidInput("F-family needs at least one subset");
  for (const auto& f : subsets) {
    if (f.empty()) throw InvalidInput("F-family subsets must be nonempty");
    for (auto v : f) {
      if (v < 1 || v > n) throw InvalidInput("F-family entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
  }
  const auto m = masks();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && (m[i] & ~m[j]) == 0) {
        throw InvalidInput("F-family subsets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                           " are comparable");
      }
    }
  }
}

std::vector<VarMask> FFamilySpec::masks() const {
  std::vector<VarMask> out;
  for (const auto& f : subsets) {
    VarMask m = 0;
    for (auto v : f) m |= VarMask{1} << (v - 1);
    out.push_back(m);
  }
  return out;
}

PullbackFamily FFamilySpec::family() const {
  validate();
  return PullbackFamily::intersection(context(), masks());
}

FFamilySpec FFamilySpec::from_json(const nlohmann::json& j) {
  try {
    FFamilySpec s;
    s.n = j.at("n").get<std::size_t>();
    s.subsets = j.at("subsets").get<std::vector<std::vector<std::size_t>>>();
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad F-family spec: ") + e.what());
  }
}

nlohmann::json FFamilySpec::to_json() const { return {{"n", n}, {"subsets", subsets}}; }

std::vector<MonomialIdeal> complement_intersections(const ContextPtr& ctx, const std::vector<MonomialIdeal>& ideals) {
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    MonomialIdeal j = MonomialIdeal::unit(ctx);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      if (k != i) j = intersect(j, ideals[k]);
    }
    out.push_back(std::move(j));
  }
  return out;
}

VerificationReport f_family_report(const FFamilySpec& spec, const FFamilyOptions& opts) {
  const PullbackFamily fam = spec.family();
  const ContextPtr ctx = fam.context();
  const std::size_t n = spec.n;
  const std::size_t ell = spec.subsets.size();
  const FieldSpec& f = opts.field;
  VerificationReport rep("F-family n=" + std::to_string(n) + " " + spec.to_json()["subsets"].dump());
  rep.set_meta("field", f.to_string());

  std::vector<MonomialIdeal> primes;
  for (VarMask s : fam.supports()) primes.push_back(MonomialIdeal::of_variables(ctx, s));
  const MonomialIdeal a = fam.defining_ideal();
  const auto js = complement_intersections(ctx, primes);
  MonomialIdeal i_t = MonomialIdeal::zero(ctx);
  for (const auto& j : js) i_t = i_t + j;
  const bool equidim = std::all_of(primes.begin(), primes.end(),
                                   [&](const MonomialIdeal& p) { return p.generators().size() == primes[0].generators().size(); });

  std::optional<Conductor> cond;
  try {
    cond = conductor(fam);
    rep.check("conductor.two_paths_agree", "A:B = sum of J_i", true, true);
  } catch (const MethodDisagreement& e) {
    rep.check("conductor.two_paths_agree", "A:B = sum of J_i", true, false).note = e.what();
  }
  if (cond) {
    rep.check("conductor.equals_sum_of_complements", "A:B = sum of J_i", true, cond->ideal + a == i_t + a);
  }
  rep.info("I", "I = sum of J_i", i_t.to_string());
  rep.info("I_equals_m", "I = m", i_t == MonomialIdeal::maximal(ctx));

  if (ell == 1) {
    rep.info("degenerate", "A = B", true);
    return rep;
  }

  const int ht_i = height_in_quotient(i_t, a);
  rep.info("ht_I", "ht_A I", ht_i);
  int pairwise = std::numeric_limits<int>::max();
  for (std::size_t p = 0; p < ell; ++p) {
    for (std::size_t q = p + 1; q < ell; ++q) pairwise = std::min(pairwise, height_in_quotient(primes[p] + primes[q], a));
  }
  rep.check("ht_I.pairwise_formula", "ht_A I = min ht_A(p_i + p_j)", ht_i, pairwise);
  if (equidim) {
    int diff = std::numeric_limits<int>::max();
    const auto m = fam.supports();
    for (std::size_t p = 0; p < ell; ++p) {
      for (std::size_t q = 0; q < ell; ++q) {
        if (p != q) diff = std::min(diff, popcount(m[p] & ~m[q]));
      }
    }
    rep.check("ht_I.set_difference_formula", "ht_A I = min |F_i \\ F_j|", ht_i, diff);
  }

  const HeightDim hd = height_and_dim(a);
  rep.info("dim_A", "dim A = n - |F_1|", hd.dim);
  rep.info("unmixed", "|F_i| constant", equidim);

  const int depth_a = depth(a, f, opts.jobs);
  rep.info("depth_A", "depth A", depth_a);
  rep.check("depth_A.links", "depth A from links", depth_a, depth_from_links(complex_of(a), f));
  rep.info("depth_strictly_between", "0 < depth A < dim A", depth_a > 0 && depth_a < hd.dim);
  int depth_b = std::numeric_limits<int>::max();
  for (const auto& p : primes) depth_b = std::min(depth_b, static_cast<int>(n - p.generators().size()));
  rep.info("depth_B", "depth_A B", depth_b);

  if (!i_t.is_unit()) {
    rep.info("depth_A_over_I", "depth A/I", depth(i_t, f, opts.jobs));
    std::vector<MonomialIdeal> sums;
    for (std::size_t p = 0; p < ell; ++p) {
      sums.push_back(i_t + primes[p]);
      rep.info("depth_A_over_I_plus_p" + std::to_string(p + 1), "depth A/(I + p_i)", depth(sums.back(), f, opts.jobs));
    }
    rep.info("depth_B_over_I", "depth_A B/I", depth_of_sum(sums, f, opts.jobs));
  }

  const bool s2_is_b = cond && equidim && height_in_quotient(cond->ideal + a, a) >= 2;
  rep.info("s2ification_is_B", "B = S2-ification of A", s2_is_b);

  auto trace_claims = [&](const std::string& suffix, const MonomialIdeal& ideal) {
    try {
      const TraceVerdict v = trace_ideal_check(fam, ideal, opts.degree_bound);
      rep.verdict("trace_" + suffix, suffix + " is a trace ideal", v.is_trace, v.bound);
      rep.verdict("endo_ring_" + suffix + "_is_B", "B = " + suffix + ":" + suffix, v.endo_ring_is_B, v.bound);
    } catch (const InvalidInput& e) {
      rep.info("trace_" + suffix, suffix + " is a trace ideal", nullptr).note = e.what();
    }
  };
  trace_claims("I", i_t);
  for (unsigned k : opts.trace_powers) {
    trace_claims("m^" + std::to_string(k), power(MonomialIdeal::maximal(ctx), k));
  }

  if (cond) {
    rep.check("conductor_kills_cokernel", "(A:B)(B/A) = 0", true, kills_cokernel(fam, *cond, cond->generators(fam)));
    if (radical(cond->ideal + a) == MonomialIdeal::maximal(ctx)) {
      const CokernelProfile prof = cokernel_profile(fam);
      rep.info("cokernel_length", "length B/A", prof.length);
      rep.info("cokernel_socle_dim", "dim soc(B/A)", prof.socle_dim);
      rep.info("cokernel_hilbert", "Hilbert function of B/A", hilbert_json(prof.hilbert));
      rep.info("max_ideal_kills_cokernel", "m(B/A) = 0", kills_cokernel(fam, *cond, fam.max_ideal_generators()));
    }
    if (!opts.parameters.empty()) {
      std::vector<Polynomial> forms;
      for (const auto& vars : opts.parameters) {
        std::vector<std::size_t> zero_based;
        for (auto v : vars) {
          if (v < 1 || v > n) throw InvalidInput("parameter variable out of range");
          zero_based.push_back(v - 1);
        }
        forms.push_back(Polynomial::linear_form(n, zero_based));
      }
      rep.info("conductor_generated_by_parameters", "A:B = QB", verify_generation(fam, *cond, forms));
      const std::uint32_t bound = opts.degree_bound.value_or(static_cast<std::uint32_t>(n));
      rep.bounded("parameters_regular_on_B", "parameters form a B-regular sequence", nullptr,
                  regular_on_B(fam, forms, bound), bound);
    }
  }
  return rep;
}

ArtinianType socle_and_type(const MonomialIdeal& q) {
  if (!q.is_artinian()) throw InvalidInput("quotient by " + q.to_string() + " is not Artinian");
  const auto std_monos = standard_monomials(q);
  ArtinianType out{std_monos.size(), 0};
  const std::size_t n = q.num_vars();
  for (const auto& m : std_monos) {
    bool socle = true;
    for (std::size_t v = 0; v < n && socle; ++v) socle = q.contains(m * Monomial::variable(n, v));
    if (socle) ++out.socle_dim;
  }
  return out;
}

bool is_monomial_parameter_ideal(const MonomialIdeal& q) {
  if (q.generators().size() != q.num_vars()) return false;
  VarMask seen = 0;
  for (const auto& g : q.generators()) {
    const auto v = g.pure_power_variable();
    if (!v) return false;
    seen |= VarMask{1} << *v;
  }
  return seen == full_mask(q.num_vars());
}

VerificationReport k_plus_q_report(const MonomialIdeal& q, std::optional<std::uint32_t> degree_bound) {
  if (!is_monomial_parameter_ideal(q)) throw InvalidInput(q.to_string() + " is not a monomial parameter ideal");
  VerificationReport rep("k + q, q = " + q.to_string());
  const ArtinianType t = socle_and_type(q);
  rep.info("length_S_over_q", "length S/q", t.length);
  rep.info("socle_type", "r(S/q)", t.socle_dim);
  const bool hyp = t.length == 2;
  rep.info("hypothesis_holds", "length S/q = 2", hyp);

  const PullbackFamily fam = PullbackFamily::constants_plus_ideal(q);
  const CokernelProfile prof = cokernel_profile(fam);
  rep.check("length_S_over_A", "length_A S/A = length S/q - 1", t.length - 1, prof.length);
  const Conductor cond = conductor(fam);
  const MonomialIdeal maximal = MonomialIdeal::maximal(q.context());
  rep.check("conductor_is_q", "A:S = q", (q == maximal ? MonomialIdeal::unit(q.context()) : q).to_string(),
            cond.ideal.to_string());
  const ColonResult endo = colon_in_B(fam, GradedSubmodule::extended_ideal(fam, q), q, degree_bound);
  rep.bounded("S_equals_m_colon_m", "S = m:m", true, endo.is_all_of_B(), endo.bound);
  rep.implication("rees_gorenstein", "R(Q^d) Gorenstein", hyp, "implied by the hypotheses, not recomputed");
  return rep;
}

VerificationReport fiber_product_report(const MonomialIdeal& q) {
  if (!q.is_artinian()) throw InvalidInput("quotient by " + q.to_string() + " is not Artinian");
  VerificationReport rep("S x_T S, q = " + q.to_string());
  const ArtinianType t = socle_and_type(q);
  const PullbackFamily fam = PullbackFamily::congruence(q);
  const Conductor cond = conductor(fam);
  rep.check("conductor_equals_qB", "A:B = QB", true, cond.ideal == q && cond.shape == ConductorShape::IdealTimesB);
  const CokernelProfile prof = cokernel_profile(fam);
  rep.check("cokernel_length", "length B/A = length T", t.length, prof.length);
  rep.info("socle_type_T", "r(T)", t.socle_dim);
  rep.check("type_B_over_A", "r_A(B/A) = r(T)", t.socle_dim, prof.socle_dim);
  std::vector<Polynomial> alphas;
  for (const auto& g : q.generators()) alphas.push_back(Polynomial::from_monomial(g));
  rep.info("qB_generated_by_alphas", "QB = sum of alpha_i B", verify_generation(fam, cond, alphas));
  const bool hyp = t.socle_dim == 1;
  rep.info("hypothesis_r_equals_1", "r(T) = 1", hyp);
  rep.implication("rees_gorenstein", "R(Q^d) Gorenstein", hyp && is_monomial_parameter_ideal(q),
                  "implied by the hypotheses, not recomputed");
  return rep;
}

IdentityTrial complement_sum_identity(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.size() < 2) throw InvalidInput("the identity needs at least two ideals");
  const ContextPtr& ctx = ideals[0].context();
  for (const auto& i : ideals) require_same_context(ideals[0], i);
  const auto js = complement_intersections(ctx, ideals);
  MonomialIdeal lhs = MonomialIdeal::unit(ctx);
  MonomialIdeal rhs = MonomialIdeal::zero(ctx);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    lhs = intersect(lhs, ideals[i] + js[i]);
    rhs = rhs + js[i];
  }
  return {ideals, lhs, rhs};
}

MonomialIdeal random_monomial_ideal(const ContextPtr& ctx, std::mt19937_64& rng, std::size_t max_gens,
                                    std::uint32_t max_degree) {
  const std::size_t n = ctx->size();
  const std::size_t count = 1 + below(rng, max_gens);
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < count; ++g) {
    const auto deg = static_cast<std::uint32_t>(1 + below(rng, max_degree));
    Monomial m = Monomial::one(n);
    for (std::uint32_t d = 0; d < deg; ++d) m = m * Monomial::variable(n, below(rng, n));
    gens.push_back(m);
  }
  return MonomialIdeal(ctx, gens);
}

VerificationReport complement_sum_identity_suite(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  VerificationReport rep("complement-sum identity, seed " + std::to_string(seed));
  std::size_t passed = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + below(rng, 5);
    const std::size_t ell = 2 + below(rng, 3);
    const ContextPtr ctx = VarContext::indexed(n);
    std::vector<MonomialIdeal> ideals;
    for (std::size_t i = 0; i < ell; ++i) ideals.push_back(random_monomial_ideal(ctx, rng, 4, 3));
    const IdentityTrial trial = complement_sum_identity(ideals);
    if (trial.holds()) {
      ++passed;
    } else {
      nlohmann::json fail = {{"trial", t}, {"lhs", trial.lhs.to_string()}, {"rhs", trial.rhs.to_string()}};
      failures.push_back(std::move(fail));
    }
  }
  rep.check("trials_passed", "intersection of (I_i + J_i) = sum of J_i", trials, passed);
  if (!failures.empty()) rep.set_meta("failures", failures);
  return rep;
}

}  // namespace commalg
