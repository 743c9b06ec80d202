#include "commalg/suite.hpp"

#include <algorithm>
#include <random>

#include "commalg/families.hpp"
#include "commalg/oracles/oracles.hpp"
#include "commalg/parallel.hpp"
#include "commalg/pullback.hpp"
#include "commalg/s2_trace.hpp"
#include "commalg/simplicial.hpp"

namespace commalg {
namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

struct Outcome {
  bool ok = true;
  std::string detail;
};

template <class Instance, class Check>
void record(VerificationReport& rep, const std::string& name, const std::string& anchor,
            const std::vector<Instance>& instances, unsigned jobs, Check check) {
  std::vector<Outcome> out(instances.size());
  parallel_for(instances.size(), jobs, [&](std::size_t i) {
    try {
      out[i] = check(instances[i]);
    } catch (const std::exception& e) {
      out[i] = {false, e.what()};
    }
  });
  std::size_t passed = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].ok) {
      ++passed;
    } else {
      failures.push_back({{"trial", i}, {"detail", out[i].detail}});
    }
  }
  Claim& c = rep.check(name + ".passed", anchor, instances.size(), passed);
  if (!failures.empty()) c.note = failures.dump();
}

// ell is clipped to the largest antichain (Sperner) so the rejection loop terminates.
std::vector<VarMask> random_antichain(std::mt19937_64& rng, std::size_t n, std::size_t ell) {
  std::size_t width = 1;
  for (std::size_t k = 1; k <= n / 2; ++k) width = width * (n - k + 1) / k;
  ell = std::min(ell, width);
  while (true) {
    std::vector<VarMask> s;
    for (std::size_t i = 0; i < ell; ++i) s.push_back(1 + below(rng, (VarMask{1} << n) - 1));
    bool ok = true;
    for (std::size_t i = 0; i < ell && ok; ++i) {
      for (std::size_t j = 0; j < ell && ok; ++j) ok = i == j || (s[i] & ~s[j]) != 0;
    }
    if (ok) return s;
  }
}

MonomialIdeal random_squarefree(std::mt19937_64& rng, const ContextPtr& ctx) {
  const std::size_t n = ctx->size();
  std::vector<Monomial> gens;
  const std::size_t count = 1 + below(rng, 5);
  for (std::size_t g = 0; g < count; ++g) gens.push_back(Monomial::from_mask(n, 1 + below(rng, (VarMask{1} << n) - 1)));
  return MonomialIdeal(ctx, gens);
}

oracles::Exps exps(const Monomial& m) {
  oracles::Exps e(m.size());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = m[v];
  return e;
}

}  // namespace

VerificationReport run_suite(const RunConfig& cfg) {
  const FieldSpec field = cfg.field.value_or(FieldSpec::rationals());
  VerificationReport rep("property suites");
  rep.set_meta("seed", cfg.seed);
  rep.set_meta("trials", cfg.trials);
  rep.set_meta("field", field.to_string());
  // Each suite draws from its own stream so that adding one leaves the others unchanged.
  auto stream = [&](std::uint64_t k) { return std::mt19937_64(cfg.seed * 0x9E3779B97F4A7C15ull + k); };

  {
    auto rng = stream(1);
    std::vector<std::vector<MonomialIdeal>> inst;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const ContextPtr ctx = VarContext::indexed(1 + below(rng, 5));
      const std::size_t ell = 2 + below(rng, 3);
      std::vector<MonomialIdeal> ideals;
      for (std::size_t i = 0; i < ell; ++i) ideals.push_back(random_monomial_ideal(ctx, rng, 4, 3));
      inst.push_back(std::move(ideals));
    }
    record(rep, "complement_sum_identity", "intersection of (I_i + J_i) = sum of J_i", inst, cfg.jobs,
           [](const std::vector<MonomialIdeal>& ideals) {
             const IdentityTrial t = complement_sum_identity(ideals);
             if (!t.holds()) return Outcome{false, "lhs " + t.lhs.to_string() + " rhs " + t.rhs.to_string()};
             if (!oracles::complement_sum_identity_on_box(ideals, 3)) return Outcome{false, "oracle disagrees"};
             if (!oracles::same_on_box(t.lhs, t.rhs, 3)) return Outcome{false, "sides differ on the box"};
             return Outcome{};
           });
  }

  {
    auto rng = stream(2);
    std::vector<std::vector<VarMask>> inst;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::size_t n = 2 + below(rng, 5);
      inst.push_back(random_antichain(rng, n, 2 + below(rng, 3)));
      inst.back().insert(inst.back().begin(), n);  // first entry carries n
    }
    record(rep, "conductor_two_paths", "A:B = sum of J_i", inst, cfg.jobs, [](const std::vector<VarMask>& data) {
      const std::size_t n = data[0];
      const std::vector<VarMask> supports(data.begin() + 1, data.end());
      const ContextPtr ctx = VarContext::indexed(n);
      const PullbackFamily fam = PullbackFamily::intersection(ctx, supports);
      const Conductor cond = conductor(fam);
      std::vector<MonomialIdeal> primes;
      for (VarMask s : supports) primes.push_back(MonomialIdeal::of_variables(ctx, s));
      MonomialIdeal sum = MonomialIdeal::zero(ctx);
      for (const auto& j : complement_intersections(ctx, primes)) sum = sum + j;
      const MonomialIdeal a = fam.defining_ideal();
      if (!(cond.ideal + a == sum + a)) return Outcome{false, "conductor " + cond.ideal.to_string() + " vs " + sum.to_string()};
      const std::vector<std::uint64_t> sup(supports.begin(), supports.end());
      const MonomialIdeal lifted = cond.ideal + a;
      for (const auto& u : oracles::box(n, 1)) {
        Monomial m = Monomial::one(n);
        for (std::size_t v = 0; v < n; ++v) {
          if (u[v]) m = m * Monomial::variable(n, v);
        }
        if (lifted.contains(m) != oracles::in_f_family_conductor(sup, u)) {
          return Outcome{false, "oracle disagrees at " + m.to_string(*ctx)};
        }
      }
      return Outcome{};
    });
  }

  {
    auto rng = stream(3);
    std::vector<MonomialIdeal> inst;
    for (std::size_t t = 0; t < cfg.trials; ++t) inst.push_back(random_squarefree(rng, VarContext::indexed(2 + below(rng, 5))));
    record(rep, "auslander_buchsbaum", "depth + pd = n", inst, cfg.jobs, [&](const MonomialIdeal& i) {
      const auto n = static_cast<int>(i.num_vars());
      const int pd = graded_betti(i, field).projective_dimension_of_quotient();
      const int d = depth_from_links(complex_of(i), field);
      if (d + pd != n) return Outcome{false, i.to_string() + ": depth " + std::to_string(d) + " pd " + std::to_string(pd)};
      return Outcome{};
    });
  }

  {
    auto rng = stream(4);
    struct S2Instance {
      MonomialIdeal a;
      Monomial m;
      Monomial d;
    };
    std::vector<S2Instance> inst;
    while (inst.size() < cfg.trials) {
      const std::size_t n = 2 + below(rng, 3);
      const ContextPtr ctx = VarContext::indexed(n);
      MonomialIdeal a = random_monomial_ideal(ctx, rng, 3, 2);
      const Monomial m = random_monomial_ideal(ctx, rng, 1, 2).generators()[0];
      const Monomial d = random_monomial_ideal(ctx, rng, 1, 2).generators()[0];
      if (a.is_unit() || !QuotientRing(a).is_nonzerodivisor(d)) continue;
      inst.push_back({std::move(a), m, d});
    }
    record(rep, "s2_membership_oracle", "m/a in the S2-ification iff m in U(aA)", inst, cfg.jobs,
           [](const S2Instance& s) {
             const bool lib = s2_membership(QuotientRing(s.a), s.m, s.d);
             const bool ref = oracles::s2_fraction_member(s.a, exps(s.m), exps(s.d));
             if (lib != ref) {
               return Outcome{false, s.a.to_string() + " m=" + s.m.to_string(*s.a.context()) +
                                         " d=" + s.d.to_string(*s.a.context())};
             }
             return Outcome{};
           });
  }
  return rep;
}

}  // namespace commalg
