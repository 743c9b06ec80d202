#include "commalg/pullback.hpp"

#include <algorithm>

#include "commalg/errors.hpp"

namespace commalg {
namespace {

const Rationals kQ;

Monomial quotient(const Monomial& w, const Monomial& m) {
  Monomial r = w;
  for (std::size_t v = 0; v < r.size(); ++v) r[v] -= m[v];
  return r;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim of the degree-e piece of a polynomial ring in r variables
long long poly_hilbert(std::size_t r, std::uint32_t e) {
  if (r == 0) return e == 0 ? 1 : 0;
  return binomial(static_cast<long long>(e + r - 1), static_cast<long long>(r - 1));
}

std::size_t span_rank(const std::vector<BElement>& vs) {
  BSpan s(kQ);
  for (const auto& v : vs) s.insert(v);
  return s.rank();
}

}  // namespace

PullbackFamily PullbackFamily::intersection(ContextPtr ctx, std::vector<VarMask> supports) {
  if (!ctx) throw InvalidInput("pullback family without a variable context");
  if (supports.empty()) throw InvalidInput("a pullback family needs at least one component");
  const VarMask all = full_mask(ctx->size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (supports[i] == 0) throw InvalidInput("component primes must be nonzero");
    if (supports[i] & ~all) throw InvalidInput("component prime uses a variable outside the context");
    for (std::size_t j = 0; j < supports.size(); ++j) {
      if (i != j && (supports[i] & supports[j]) == supports[i]) {
        throw InvalidInput("component primes must form an antichain");
      }
    }
  }
  PullbackFamily fam;
  fam.mode_ = PullbackMode::Intersection;
  fam.ctx_ = ctx;
  fam.supports_ = supports;
  for (VarMask s : supports) {
    fam.kernels_.push_back(MonomialIdeal::of_variables(ctx, s));
    fam.parts_.push_back(MonomialIdeal::zero(ctx));
  }
  return fam;
}

PullbackFamily PullbackFamily::congruence(const MonomialIdeal& q) {
  PullbackFamily fam;
  fam.mode_ = PullbackMode::Congruence;
  fam.ctx_ = q.context();
  fam.q_ = q;
  fam.kernels_ = {MonomialIdeal::zero(fam.ctx_), MonomialIdeal::zero(fam.ctx_)};
  fam.parts_ = {MonomialIdeal::zero(fam.ctx_), q};
  return fam;
}

PullbackFamily PullbackFamily::constants_plus_ideal(const MonomialIdeal& q) {
  PullbackFamily fam;
  if (!q.is_artinian()) throw InvalidInput("k + q needs S/q of finite length, got q = " + q.to_string());
  fam.mode_ = PullbackMode::ConstantsPlusIdeal;
  fam.ctx_ = q.context();
  fam.q_ = q;
  fam.kernels_ = {MonomialIdeal::zero(fam.ctx_)};
  fam.parts_ = {q};
  return fam;
}

MonomialIdeal PullbackFamily::defining_ideal() const {
  if (mode_ != PullbackMode::Intersection) throw InvalidInput("defining ideal requested outside Intersection mode");
  return intersect_all(kernels_);
}

const MonomialIdeal& PullbackFamily::q() const {
  if (!q_) throw InvalidInput("this pullback family has no ideal q");
  return *q_;
}

std::vector<std::size_t> PullbackFamily::live_components(const Monomial& u) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kernels_.size(); ++i) {
    if (survives(u, i)) out.push_back(i);
  }
  return out;
}

std::vector<BKey> PullbackFamily::b_basis(const Monomial& u) const {
  std::vector<BKey> out;
  for (std::size_t i : live_components(u)) out.push_back({u, i});
  return out;
}

std::vector<BElement> PullbackFamily::a_basis(const Monomial& u) const {
  std::vector<BElement> out;
  bool has_free = false;
  for (std::size_t i : live_components(u)) {
    if (parts_[i].contains(u)) {
      out.push_back(basis_vector(i, u));
    } else {
      has_free = true;
    }
  }
  if (has_free && (has_full_diagonal() || u.is_one())) out.push_back(diagonal(u));
  return out;
}

std::vector<BElement> PullbackFamily::a_basis_of_degree(std::uint32_t d) const {
  std::vector<BElement> out;
  for (const auto& u : monomials_of_degree(num_vars(), d)) {
    for (auto& v : a_basis(u)) out.push_back(std::move(v));
  }
  return out;
}

BElement PullbackFamily::diagonal(const Polynomial& f) const {
  BElement out;
  for (const auto& [u, c] : f.terms()) {
    if (u.size() != num_vars()) throw ContextMismatch("polynomial length does not match the family");
    for (std::size_t i : live_components(u)) out.emplace(BKey{u, i}, c);
  }
  return out;
}

BElement PullbackFamily::diagonal(const Monomial& u) const { return diagonal(Polynomial::from_monomial(u)); }

BElement PullbackFamily::unit(std::size_t comp) const { return basis_vector(comp, Monomial::one(num_vars())); }

BElement PullbackFamily::basis_vector(std::size_t comp, const Monomial& u) const {
  if (comp >= num_components()) throw InvalidInput("component index out of range");
  if (!survives(u, comp)) return {};
  return {{BKey{u, comp}, mpq_class(1)}};
}

BElement PullbackFamily::multiply(const BElement& b, const BElement& c) const {
  BElement out;
  for (const auto& [kb, vb] : b) {
    for (const auto& [kc, vc] : c) {
      if (kb.comp != kc.comp) continue;
      Monomial u = kb.mono * kc.mono;
      if (!survives(u, kb.comp)) continue;
      BElement term{{BKey{std::move(u), kb.comp}, vb * vc}};
      axpy(kQ, out, mpq_class(1), term);
    }
  }
  return out;
}

BElement PullbackFamily::multiply(const BElement& b, const Monomial& m) const {
  BElement out;
  for (const auto& [k, v] : b) {
    Monomial u = k.mono * m;
    if (survives(u, k.comp)) out.emplace(BKey{std::move(u), k.comp}, v);
  }
  return out;
}

BElement PullbackFamily::multiply(const BElement& b, const Polynomial& f) const {
  BElement out;
  for (const auto& [m, c] : f.terms()) axpy(kQ, out, c, multiply(b, m));
  return out;
}

BElement PullbackFamily::normal_form(const BElement& b) const {
  BElement out;
  for (auto& [u, piece] : by_multidegree(b)) {
    const bool diag_ok = has_full_diagonal() || u.is_one();
    std::optional<mpq_class> shift;
    for (std::size_t i : live_components(u)) {
      if (parts_[i].contains(u)) continue;
      auto it = piece.find(BKey{u, i});
      mpq_class c = it == piece.end() ? mpq_class(0) : it->second;
      if (diag_ok && !shift) shift = c;
      if (shift) c -= *shift;
      if (sgn(c) != 0) out.emplace(BKey{u, i}, c);
    }
  }
  return out;
}

std::vector<BElement> PullbackFamily::max_ideal_generators() const {
  const auto n = num_vars();
  std::vector<BElement> out;
  auto add_variables = [&] {
    for (std::size_t v = 0; v < n; ++v) {
      auto d = diagonal(Monomial::variable(n, v));
      if (!d.empty()) out.push_back(std::move(d));
    }
  };
  switch (mode_) {
    case PullbackMode::Intersection:
      add_variables();
      break;
    case PullbackMode::Congruence:
      add_variables();
      for (const auto& g : q_->generators()) {
        if (!g.is_one()) out.push_back(basis_vector(1, g));
      }
      break;
    case PullbackMode::ConstantsPlusIdeal:
      if (q_->contains(MonomialIdeal::maximal(ctx_))) {
        add_variables();
      } else {
        for (const auto& g : q_->generators()) out.push_back(basis_vector(0, g));
      }
      break;
  }
  return out;
}

std::vector<std::uint32_t> PullbackFamily::exponent_caps() const {
  std::vector<std::uint32_t> caps(num_vars(), 0);
  auto absorb = [&](const MonomialIdeal& i) {
    for (const auto& g : i.generators()) {
      for (std::size_t v = 0; v < caps.size(); ++v) caps[v] = std::max(caps[v], g[v]);
    }
  };
  for (const auto& k : kernels_) absorb(k);
  for (const auto& p : parts_) absorb(p);
  return caps;
}

void PullbackFamily::validate(const BElement& b) const {
  for (const auto& [k, v] : b) {
    if (k.comp >= num_components()) throw InvalidInput("element has a coordinate in a missing component");
    if (k.mono.size() != num_vars()) throw ContextMismatch("element monomial length does not match the family");
    if (!survives(k.mono, k.comp)) {
      throw InvalidInput("element coordinate " + k.mono.to_string(*ctx_) + " is zero in component " +
                         std::to_string(k.comp + 1));
    }
  }
}

std::map<Monomial, BElement> by_multidegree(const BElement& b) {
  std::map<Monomial, BElement> out;
  for (const auto& [k, v] : b) out[k.mono].emplace(k, v);
  return out;
}

bool is_multihomogeneous(const BElement& b) {
  return b.empty() || b.begin()->first.mono == b.rbegin()->first.mono;
}

Membership image_membership(const PullbackFamily& fam, const BElement& b) {
  fam.validate(b);
  Membership out;
  if (!fam.normal_form(b).empty()) return out;
  out.member = true;
  Polynomial w;
  for (const auto& [u, piece] : by_multidegree(b)) {
    for (std::size_t i : fam.live_components(u)) {
      if (fam.module_part(i).contains(u)) continue;
      auto it = piece.find(BKey{u, i});
      if (it != piece.end()) w.add_term(u, it->second);
      break;
    }
  }
  out.witness = w;
  return out;
}

std::vector<BElement> Conductor::generators(const PullbackFamily& fam) const {
  std::vector<BElement> out;
  for (const auto& g : ideal.generators()) {
    if (shape == ConductorShape::LiftToT) {
      auto d = fam.diagonal(g);
      if (!d.empty()) out.push_back(std::move(d));
    } else {
      for (std::size_t i : fam.live_components(g)) out.push_back(fam.basis_vector(i, g));
    }
  }
  return out;
}

BSpan Conductor::piece(const PullbackFamily& fam, const Monomial& u) const {
  BSpan s(kQ);
  if (!ideal.contains(u)) return s;
  if (shape == ConductorShape::LiftToT) {
    s.insert(fam.diagonal(u));
  } else {
    for (std::size_t i : fam.live_components(u)) s.insert(fam.basis_vector(i, u));
  }
  return s;
}

bool Conductor::contains(const PullbackFamily& fam, const BElement& b) const {
  for (const auto& [u, part] : by_multidegree(b)) {
    if (!piece(fam, u).contains(part)) return false;
  }
  return true;
}

Conductor conductor_closed_form(const PullbackFamily& fam) {
  const auto& ctx = fam.context();
  switch (fam.mode()) {
    case PullbackMode::Intersection: {
      const auto l = fam.num_components();
      if (l == 1) return {MonomialIdeal::unit(ctx), ConductorShape::LiftToT};
      MonomialIdeal sum = MonomialIdeal::zero(ctx);
      for (std::size_t i = 0; i < l; ++i) {
        std::vector<MonomialIdeal> others;
        for (std::size_t j = 0; j < l; ++j) {
          if (j != i) others.push_back(fam.component_kernel(j));
        }
        sum = sum + intersect_all(others);
      }
      return {sum, ConductorShape::LiftToT};
    }
    case PullbackMode::Congruence:
      return {fam.q(), ConductorShape::IdealTimesB};
    case PullbackMode::ConstantsPlusIdeal:
      if (fam.q().contains(MonomialIdeal::maximal(ctx))) return {MonomialIdeal::unit(ctx), ConductorShape::LiftToT};
      return {fam.q(), ConductorShape::LiftToT};
  }
  throw Error("unreachable pullback mode");
}

BSpan conductor_direct_piece(const PullbackFamily& fam, const Monomial& u) {
  using Key = std::pair<std::size_t, BKey>;
  const auto basis = fam.a_basis(u);
  // Generators of B as an A-module: the e_i, or for k + q the monomials outside q.
  std::vector<BElement> module_gens;
  if (fam.has_full_diagonal()) {
    for (std::size_t i = 0; i < fam.num_components(); ++i) module_gens.push_back(fam.unit(i));
  } else {
    module_gens.push_back(fam.unit(0));
    for (const auto& w : standard_monomials(fam.q())) {
      if (!w.is_one()) module_gens.push_back(fam.basis_vector(0, w));
    }
  }
  std::vector<SparseVec<Rationals, Key>> images;
  for (const auto& a : basis) {
    SparseVec<Rationals, Key> img;
    for (std::size_t i = 0; i < module_gens.size(); ++i) {
      for (const auto& [k, v] : fam.normal_form(fam.multiply(a, module_gens[i]))) img.emplace(Key{i, k}, v);
    }
    images.push_back(std::move(img));
  }
  BSpan s(kQ);
  for (const auto& combo : kernel_basis(kQ, images)) {
    BElement v;
    for (const auto& [idx, c] : combo) axpy(kQ, v, c, basis[idx]);
    s.insert(v);
  }
  return s;
}

Conductor conductor(const PullbackFamily& fam) {
  Conductor closed = conductor_closed_form(fam);
  auto caps = fam.exponent_caps();
  for (const auto& g : closed.ideal.generators()) {
    for (std::size_t v = 0; v < caps.size(); ++v) caps[v] = std::max(caps[v], g[v]);
  }
  for (const auto& u : monomials_in_box(caps)) {
    if (!closed.piece(fam, u).same_span(conductor_direct_piece(fam, u))) {
      throw MethodDisagreement("conductor closed form and direct computation differ in multidegree " +
                               u.to_string(*fam.context()));
    }
  }
  std::uint32_t top = 0;
  for (auto c : caps) top += c;
  closed.checked_through = top;
  return closed;
}

namespace {

std::size_t cokernel_dim(const PullbackFamily& fam, const Monomial& u) {
  return fam.live_components(u).size() - span_rank(fam.a_basis(u));
}

std::size_t socle_dim_at(const PullbackFamily& fam, const Monomial& u, const std::vector<BElement>& gens) {
  using Key = std::pair<std::size_t, BKey>;
  const auto keys = fam.b_basis(u);
  std::vector<SparseVec<Rationals, Key>> images;
  for (const auto& key : keys) {
    const BElement b{{key, mpq_class(1)}};
    SparseVec<Rationals, Key> img;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      for (const auto& [k, v] : fam.normal_form(fam.multiply(b, gens[j]))) img.emplace(Key{j, k}, v);
    }
    images.push_back(std::move(img));
  }
  return kernel_basis(kQ, images).size() - span_rank(fam.a_basis(u));
}

}  // namespace

bool kills_cokernel(const PullbackFamily& fam, const Conductor& cond, const std::vector<BElement>& gens) {
  if (cond.ideal.is_unit()) return true;
  // Membership of g·b depends only on exponents truncated at the caps, so the
  // box is a complete test set when B/A has infinite length.
  const auto degrees = cond.ideal.is_artinian() ? standard_monomials(cond.ideal) : monomials_in_box(fam.exponent_caps());
  for (const auto& u : degrees) {
    for (const auto& key : fam.b_basis(u)) {
      const BElement b{{key, mpq_class(1)}};
      for (const auto& g : gens) {
        if (!fam.in_A(fam.multiply(g, b))) return false;
      }
    }
  }
  return true;
}

CokernelProfile cokernel_profile(const PullbackFamily& fam) {
  const Conductor cond = conductor(fam);
  CokernelProfile out;
  if (cond.ideal.is_unit()) {
    out.hilbert = {0};
    out.conductor_annihilates = true;
    return out;
  }
  // B vanishes in multidegrees inside every K_i, so only monomials outside
  // conductor + ∩K_i can carry B/A.
  MonomialIdeal support = cond.ideal;
  {
    std::vector<MonomialIdeal> kernels;
    for (std::size_t i = 0; i < fam.num_components(); ++i) kernels.push_back(fam.component_kernel(i));
    support = support + intersect_all(kernels);
  }
  if (!support.is_artinian()) {
    throw InvalidInput("B/A has infinite length: the conductor " + cond.ideal.to_string() +
                       " is not primary to the maximal ideal");
  }
  const auto standard = standard_monomials(support);
  for (const auto& u : standard) out.top_degree = std::max(out.top_degree, u.degree());
  out.hilbert.assign(out.top_degree + 2, 0);
  const auto gens = fam.max_ideal_generators();
  for (const auto& u : standard) {
    const auto d = cokernel_dim(fam, u);
    out.hilbert[u.degree()] += d;
    out.length += d;
    if (d) out.socle_dim += socle_dim_at(fam, u, gens);
  }
  for (const auto& u : monomials_of_degree(fam.num_vars(), out.top_degree + 1)) {
    if (cokernel_dim(fam, u) != 0) {
      throw MethodDisagreement("B/A does not vanish above the conductor's socle degree");
    }
  }
  if (fam.has_full_diagonal()) {
    bool vanished = false;
    for (std::size_t d = 1; d < out.hilbert.size(); ++d) {
      if (vanished && out.hilbert[d] != 0) {
        throw MethodDisagreement("B/A vanished in one degree and reappeared in a higher one");
      }
      vanished = vanished || out.hilbert[d] == 0;
    }
  }
  out.conductor_annihilates = kills_cokernel(fam, cond, cond.generators(fam));
  return out;
}

GradedSubmodule GradedSubmodule::ring_A(const PullbackFamily& fam) {
  return {Over::A, {fam.diagonal(Monomial::one(fam.num_vars()))}};
}

GradedSubmodule GradedSubmodule::ideal_of_A(const PullbackFamily& fam, const MonomialIdeal& i) {
  GradedSubmodule x{Over::A, {}};
  for (const auto& g : i.generators()) {
    auto d = fam.diagonal(g);
    if (!d.empty()) x.gens.push_back(std::move(d));
  }
  return x;
}

GradedSubmodule GradedSubmodule::extended_ideal(const PullbackFamily& fam, const MonomialIdeal& i) {
  GradedSubmodule x = ideal_of_A(fam, i);
  x.over = Over::B;
  return x;
}

SubmoduleSpans::SubmoduleSpans(const PullbackFamily& fam, GradedSubmodule x) : fam_(fam), x_(std::move(x)) {
  std::vector<BElement> kept;
  for (auto& g : x_.gens) {
    fam_.validate(g);
    if (g.empty()) continue;
    if (!is_multihomogeneous(g)) throw InvalidInput("submodule generators must be multihomogeneous");
    degrees_.push_back(g.begin()->first.mono);
    kept.push_back(std::move(g));
  }
  x_.gens = std::move(kept);
}

const BSpan& SubmoduleSpans::piece(const Monomial& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  BSpan s(kQ);
  for (std::size_t j = 0; j < x_.gens.size(); ++j) {
    if (!degrees_[j].divides(w)) continue;
    const Monomial rest = quotient(w, degrees_[j]);
    if (x_.over == GradedSubmodule::Over::A) {
      for (const auto& r : fam_.a_basis(rest)) s.insert(fam_.multiply(r, x_.gens[j]));
    } else {
      for (const auto& key : fam_.b_basis(rest)) {
        s.insert(fam_.multiply(BElement{{key, mpq_class(1)}}, x_.gens[j]));
      }
    }
  }
  return cache_.emplace(w, std::move(s)).first->second;
}

bool SubmoduleSpans::contains(const BElement& b) {
  for (const auto& [u, part] : by_multidegree(b)) {
    if (!piece(u).contains(part)) return false;
  }
  return true;
}

bool ColonResult::same_as(const ColonResult& other) const {
  if (bound != other.bound || dims != other.dims) return false;
  for (const auto& [u, span] : pieces) {
    auto it = other.pieces.find(u);
    if (it == other.pieces.end()) {
      if (span.rank() != 0) return false;
    } else if (!span.same_span(it->second)) {
      return false;
    }
  }
  return true;
}

ColonResult colon_in_B(const PullbackFamily& fam, const GradedSubmodule& x, const MonomialIdeal& i,
                       std::optional<std::uint32_t> bound) {
  if (!same_context(i.context(), fam.context())) throw ContextMismatch("colon ideal lives in another context");
  using Key = std::pair<std::size_t, BKey>;
  ColonResult out;
  out.bound = bound ? *bound : i.max_degree() + static_cast<std::uint32_t>(fam.num_vars());
  out.dims.assign(out.bound + 1, 0);
  out.b_dims.assign(out.bound + 1, 0);
  SubmoduleSpans spans(fam, x);
  const auto& gens = i.generators();
  for (std::uint32_t d = 0; d <= out.bound; ++d) {
    for (const auto& u : monomials_of_degree(fam.num_vars(), d)) {
      const auto keys = fam.b_basis(u);
      if (keys.empty()) continue;
      std::vector<SparseVec<Rationals, Key>> images;
      for (const auto& key : keys) {
        const BElement b{{key, mpq_class(1)}};
        SparseVec<Rationals, Key> img;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Monomial w = u * gens[j];
          for (const auto& [k, v] : spans.piece(w).reduce(fam.multiply(b, gens[j]))) img.emplace(Key{j, k}, v);
        }
        images.push_back(std::move(img));
      }
      BSpan s(kQ);
      for (const auto& combo : kernel_basis(kQ, images)) {
        BElement v;
        for (const auto& [idx, c] : combo) v.emplace(keys[idx], c);
        s.insert(v);
      }
      out.dims[d] += s.rank();
      out.b_dims[d] += keys.size();
      out.pieces.emplace(u, std::move(s));
    }
  }
  return out;
}

namespace {

void require_homogeneous(const std::vector<Polynomial>& elements) {
  for (const auto& f : elements) {
    if (f.is_zero() || !f.is_homogeneous()) throw InvalidInput("elements must be nonzero homogeneous forms");
  }
}

}  // namespace

bool verify_generation(const PullbackFamily& fam, const Conductor& cond, const std::vector<Polynomial>& elements) {
  require_homogeneous(elements);
  for (const auto& a : elements) {
    const BElement da = fam.diagonal(a);
    for (std::size_t j = 0; j < fam.num_components(); ++j) {
      if (!cond.contains(fam, fam.multiply(da, fam.unit(j)))) return false;
    }
  }
  std::map<std::uint32_t, BSpan> spans;
  for (const auto& c : cond.generators(fam)) {
    const std::uint32_t delta = c.begin()->first.mono.degree();
    auto it = spans.find(delta);
    if (it == spans.end()) {
      BSpan s(kQ);
      for (const auto& a : elements) {
        if (a.degree() > delta) continue;
        const BElement da = fam.diagonal(a);
        for (const auto& w : monomials_of_degree(fam.num_vars(), delta - a.degree())) {
          for (const auto& key : fam.b_basis(w)) s.insert(fam.multiply(da, BElement{{key, mpq_class(1)}}));
        }
      }
      it = spans.emplace(delta, std::move(s)).first;
    }
    if (!it->second.contains(c)) return false;
  }
  return true;
}

bool regular_on_B(const PullbackFamily& fam, const std::vector<Polynomial>& elements, std::uint32_t bound) {
  require_homogeneous(elements);
  const auto n = fam.num_vars();
  for (std::size_t comp = 0; comp < fam.num_components(); ++comp) {
    const auto& k = fam.component_kernel(comp);
    VarMask killed = 0;
    for (const auto& g : k.generators()) {
      if (g.degree() != 1) throw InvalidInput("regularity test needs components that are polynomial rings");
      killed |= g.support();
    }
    const VarMask allowed = full_mask(n) & ~killed;
    const auto r = static_cast<std::size_t>(popcount(allowed));
    // expected Hilbert function HF(T/K)·Π(1 - t^deg)
    std::vector<long long> expected(bound + 1);
    for (std::uint32_t e = 0; e <= bound; ++e) expected[e] = poly_hilbert(r, e);
    std::vector<Polynomial> restricted;
    for (const auto& a : elements) {
      Polynomial f;
      for (const auto& [m, c] : a.terms()) {
        if ((m.support() & killed) == 0) f.add_term(m, c);
      }
      restricted.push_back(f);
      const auto deg = a.degree();
      for (std::uint32_t e = bound + 1; e-- > 0;) {
        if (e >= deg) expected[e] -= expected[e - deg];
      }
    }
    for (std::uint32_t e = 0; e <= bound; ++e) {
      Echelon<Rationals, Monomial> s(kQ);
      for (const auto& f : restricted) {
        if (f.is_zero() || f.degree() > e) continue;
        for (const auto& w : monomials_of_degree(n, e - f.degree(), allowed)) {
          SparseVec<Rationals, Monomial> v;
          for (const auto& [m, c] : f.terms()) v.emplace(m * w, c);
          s.insert(v);
        }
      }
      const long long quotient_dim = poly_hilbert(r, e) - static_cast<long long>(s.rank());
      if (quotient_dim != expected[e]) return false;
    }
  }
  return true;
}

std::vector<Monomial> monomials_in_box(const std::vector<std::uint32_t>& caps) {
  std::vector<Monomial> out;
  Monomial cur(caps.size());
  while (true) {
    out.push_back(cur);
    std::size_t v = 0;
    while (v < caps.size()) {
      if (cur[v] < caps[v]) {
        ++cur[v];
        break;
      }
      cur[v] = 0;
      ++v;
    }
    if (v == caps.size()) break;
  }
  return out;
}

}  // namespace commalg
