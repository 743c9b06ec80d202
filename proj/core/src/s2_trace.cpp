#include "commalg/s2_trace.hpp"

#include <algorithm>

#include "commalg/errors.hpp"

namespace commalg {
namespace {

std::vector<MonomialPrime> compute_associated(const MonomialIdeal& i) {
  if (i.is_zero()) return {MonomialPrime(i.context(), 0)};
  std::vector<MonomialPrime> out;
  for (const auto& pc : primary_decomposition(i)) out.push_back(pc.prime);
  return out;
}

void require_nonzerodivisor(const QuotientRing& r, const Monomial& a) {
  if (!r.is_nonzerodivisor(a)) {
    throw InvalidInput(a.to_string(*r.context()) + " is a zerodivisor on the quotient ring");
  }
}

}  // namespace

QuotientRing::QuotientRing(MonomialIdeal defining) : ideal_(std::move(defining)) {
  if (ideal_.is_unit()) throw InvalidInput("quotient by the unit ideal");
  assoc_ = compute_associated(ideal_);
}

bool QuotientRing::is_nonzerodivisor(const Monomial& m) const {
  if (m.size() != ideal_.num_vars()) throw ContextMismatch("monomial length does not match the ring");
  return colon(ideal_, m) == ideal_;
}

bool QuotientRing::is_nonzerodivisor(const Polynomial& f) const {
  for (const auto& p : assoc_) {
    bool inside = true;
    for (const auto& [m, c] : f.terms()) {
      if (!p.contains(m)) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::VerifiedToBound:
      return "verified-to-bound";
  }
  return "?";
}

MonomialIdeal unmixed_component_principal(const QuotientRing& r, const Monomial& a) {
  require_nonzerodivisor(r, a);
  const MonomialIdeal principal = MonomialIdeal(r.context(), {a}) + r.ideal();
  return unmixed_part(principal);
}

bool s2_membership(const QuotientRing& r, const Polynomial& m, const Monomial& a) {
  return unmixed_component_principal(r, a).contains(m);
}

bool s2_membership(const QuotientRing& r, const Monomial& m, const Monomial& a) {
  return unmixed_component_principal(r, a).contains(m);
}

bool s2_equals_B_test(const PullbackFamily& fam, const Monomial& a) {
  if (fam.mode() != PullbackMode::Intersection) {
    throw InvalidInput("the monomial (S2) test needs a family in Intersection mode");
  }
  const QuotientRing r(fam.defining_ideal());
  require_nonzerodivisor(r, a);
  const Conductor cond = conductor(fam);
  const BElement da = fam.diagonal(a);
  if (!cond.contains(fam, da)) {
    throw InvalidInput(a.to_string(*fam.context()) + " does not lie in the conductor " + cond.ideal.to_string());
  }
  // Lift each a·e_i to T; together with the defining ideal they generate aB.
  std::vector<Monomial> lifts;
  for (std::size_t i = 0; i < fam.num_components(); ++i) {
    const auto m = image_membership(fam, fam.multiply(da, fam.unit(i)));
    if (!m.member) throw MethodDisagreement("a·e_i left A although a lies in the conductor");
    for (const auto& [u, c] : m.witness->terms()) lifts.push_back(u);
  }
  const MonomialIdeal aB = MonomialIdeal(fam.context(), lifts) + r.ideal();
  return aB == unmixed_component_principal(r, a);
}

bool s2_equals_B_test(const PullbackFamily& fam, const std::vector<Polynomial>& system) {
  return verify_generation(fam, conductor(fam), system);
}

TraceVerdict trace_ideal_check(const PullbackFamily& fam, const MonomialIdeal& i,
                               std::optional<std::uint32_t> colon_bound) {
  if (fam.mode() != PullbackMode::Intersection) throw InvalidInput("trace check needs a family in Intersection mode");
  if (!same_context(fam.context(), i.context())) throw ContextMismatch("ideal lives in another context");
  TraceVerdict out;
  if (i.is_unit()) {
    out.is_trace = Verdict::Pass;
    out.endo_ring_is_B = fam.num_components() == 1 ? Verdict::Pass : Verdict::Fail;
    return out;
  }
  const MonomialIdeal a = fam.defining_ideal();
  for (VarMask s : fam.supports()) {
    const MonomialPrime p(fam.context(), s);
    const bool inside = std::all_of(i.generators().begin(), i.generators().end(),
                                    [&](const Monomial& g) { return p.contains(g); });
    if (inside) throw InvalidInput("the ideal contains no non-zerodivisor of A");
  }
  if (height_in_quotient(i, a) < 2) throw InvalidInput("trace check requires ht_A I >= 2");

  const Conductor cond = conductor(fam);
  auto& cert = out.certificate;
  cert.height_of_conductor = cond.ideal.is_unit() ? static_cast<int>(fam.num_vars()) + 1
                                                  : height_in_quotient(cond.ideal, a);
  cert.equidimensional = std::all_of(fam.supports().begin(), fam.supports().end(),
                                     [&](VarMask s) { return popcount(s) == popcount(fam.supports().front()); });
  SubmoduleSpans ideal_spans(fam, GradedSubmodule::ideal_of_A(fam, i));
  cert.ideal_inside_conductor = true;
  cert.stable_under_B = true;
  for (const auto& g : i.generators()) {
    for (std::size_t j = 0; j < fam.num_components(); ++j) {
      const BElement ge = fam.basis_vector(j, g);
      if (!fam.in_A(ge)) cert.ideal_inside_conductor = false;
      if (!ideal_spans.contains(ge)) cert.stable_under_B = false;
    }
  }

  if (cert.holds()) {
    out.is_trace = Verdict::Pass;
    out.endo_ring_is_B = Verdict::Pass;
  } else if (!(cert.height_of_conductor >= 2 && cert.equidimensional)) {
    throw InvalidInput("B is not known to be the (S2)-ification of A; colons in B would not decide the trace property");
  } else if (!colon_bound) {
    colon_bound = i.max_degree() + static_cast<std::uint32_t>(fam.num_vars());
  }
  if (colon_bound) {
    out.bound = colon_bound;
    const auto ring = colon_in_B(fam, GradedSubmodule::ring_A(fam), i, colon_bound);
    const auto endo = colon_in_B(fam, GradedSubmodule::ideal_of_A(fam, i), i, colon_bound);
    const bool same = ring.same_as(endo);
    const bool endo_B = endo.is_all_of_B();
    if (cert.holds()) {
      if (!same || !endo_B) throw MethodDisagreement("certified trace ideal but the bounded colons disagree");
    } else {
      out.is_trace = same ? Verdict::VerifiedToBound : Verdict::Fail;
      out.endo_ring_is_B = endo_B ? Verdict::VerifiedToBound : Verdict::Fail;
    }
  }
  return out;
}

QuotientTraceResult trace_ideal_check(const QuotientRing& r, const MonomialIdeal& i) {
  if (!same_context(r.context(), i.context())) throw ContextMismatch("ideal lives in another context");
  QuotientTraceResult out{false, Monomial::one(i.num_vars()), MonomialIdeal::unit(r.context()),
                          MonomialIdeal::unit(r.context())};
  if (i.is_unit()) {
    out.is_trace = true;
    return out;
  }
  auto it = std::find_if(i.generators().begin(), i.generators().end(),
                         [&](const Monomial& g) { return r.is_nonzerodivisor(g); });
  if (it == i.generators().end()) throw InvalidInput("the ideal contains no monomial non-zerodivisor");
  out.nonzerodivisor = *it;
  const MonomialIdeal principal = MonomialIdeal(r.context(), {*it}) + r.ideal();
  out.ring_colon = colon(principal, i);
  out.endo_colon = colon(multiply(i, *it) + r.ideal(), i);
  out.is_trace = out.ring_colon == out.endo_colon;
  return out;
}

}  // namespace commalg
