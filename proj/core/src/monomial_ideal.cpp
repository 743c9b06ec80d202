#include "commalg/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "commalg/errors.hpp"

namespace commalg {
namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end(), degrevlex_less);
  return kept;
}

// Minimal transversals of a hypergraph given by vertex masks.
std::vector<VarMask> minimal_covers(const std::vector<VarMask>& edges) {
  std::vector<VarMask> covers{0};
  for (VarMask e : edges) {
    std::set<VarMask> next;
    for (VarMask c : covers) {
      if (c & e) {
        next.insert(c);
        continue;
      }
      for (VarMask rest = e; rest; rest &= rest - 1) next.insert(c | (rest & -rest));
    }
    covers.clear();
    for (VarMask c : next) {
      bool has_subset = std::any_of(next.begin(), next.end(),
                                    [&](VarMask o) { return o != c && (o & c) == o; });
      if (!has_subset) covers.push_back(c);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

void split(const ContextPtr& ctx, const std::vector<Monomial>& gens, std::set<std::vector<Monomial>>& out) {
  for (const auto& g : gens) {
    if (g.pure_power_variable() || g.is_one()) continue;
    const VarMask supp = g.support();
    std::size_t var = 0;
    while (!(supp >> var & 1)) ++var;
    Monomial pure = Monomial::variable(g.size(), var, g[var]);
    Monomial rest = g;
    rest[var] = 0;
    auto left = gens;
    left.push_back(pure);
    auto right = gens;
    right.push_back(rest);
    split(ctx, minimalize(std::move(left)), out);
    split(ctx, minimalize(std::move(right)), out);
    return;
  }
  out.insert(gens);
}

}  // namespace

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_context(a.context(), b.context())) {
    throw ContextMismatch("monomial ideals live in different variable contexts");
  }
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidInput("monomial ideal without a variable context");
  for (const auto& g : gens) {
    if (g.size() != ctx_->size()) throw ContextMismatch("generator length does not match the context");
  }
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(ContextPtr ctx) {
  const auto n = ctx->size();
  return MonomialIdeal(std::move(ctx), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::of_variables(ContextPtr ctx, VarMask mask) {
  const auto n = ctx->size();
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) gens.push_back(Monomial::variable(n, i));
  }
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal(ContextPtr ctx) {
  const auto n = ctx->size();
  return of_variables(std::move(ctx), full_mask(n));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_artinian() const {
  VarMask covered = 0;
  for (const auto& g : gens_) {
    if (g.is_one()) return true;
    if (auto v = g.pure_power_variable()) covered |= VarMask{1} << *v;
  }
  return covered == full_mask(num_vars());
}

std::uint32_t MonomialIdeal::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
  for (const auto& [m, c] : f.terms()) {
    if (!contains(m)) return false;
  }
  return true;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_context(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].to_string(*ctx_);
  }
  if (gens_.empty()) out << '0';
  out << ')';
  return out.str();
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return same_context(a.ctx_, b.ctx_) && a.gens_ == b.gens_;
}

MonomialPrime::MonomialPrime(ContextPtr ctx, VarMask support) : ctx_(std::move(ctx)), support_(support) {
  if (support_ & ~full_mask(ctx_->size())) throw InvalidInput("prime support outside the context");
}

std::string MonomialPrime::to_string() const { return ideal().to_string(); }

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, unsigned k) {
  MonomialIdeal r = MonomialIdeal::unit(a.context());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
  }
  return MonomialIdeal(a.context(), std::move(gens));
}

MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw InvalidInput("intersection of an empty family of ideals");
  MonomialIdeal r = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) r = intersect(r, ideals[i]);
  return r;
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m) {
  if (m.size() != i.num_vars()) throw ContextMismatch("monomial length does not match the context");
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal(i.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  require_same_context(i, j);
  MonomialIdeal r = MonomialIdeal::unit(i.context());
  for (const auto& g : j.generators()) r = intersect(r, colon(i, g));
  return r;
}

MonomialIdeal radical(const MonomialIdeal& i) {
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) gens.push_back(Monomial::from_mask(i.num_vars(), g.support()));
  return MonomialIdeal(i.context(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& i, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) gens.push_back(g * m);
  return MonomialIdeal(i.context(), std::move(gens));
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& i) {
  if (i.is_unit()) throw InvalidInput("the unit ideal has no minimal primes");
  std::vector<VarMask> edges;
  const MonomialIdeal rad = radical(i);
  for (const auto& g : rad.generators()) edges.push_back(g.support());
  std::vector<MonomialPrime> out;
  for (VarMask c : minimal_covers(edges)) out.emplace_back(i.context(), c);
  return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i) {
  if (i.is_unit()) throw InvalidInput("the unit ideal has no irreducible decomposition");
  if (i.is_zero()) throw InvalidInput("the zero ideal has no monomial irreducible decomposition");
  std::vector<MonomialIdeal> comps;
  if (i.is_squarefree()) {
    for (const auto& p : minimal_primes(i)) comps.push_back(p.ideal());
    return comps;
  }
  std::set<std::vector<Monomial>> raw;
  split(i.context(), i.generators(), raw);
  for (const auto& gens : raw) comps.emplace_back(i.context(), gens);
  std::vector<MonomialIdeal> out;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < comps.size() && !redundant; ++b) {
      if (a == b) continue;
      if (comps[a].contains(comps[b]) && (!(comps[a] == comps[b]) || b < a)) redundant = true;
    }
    if (!redundant) out.push_back(comps[a]);
  }
  std::sort(out.begin(), out.end(), [](const MonomialIdeal& x, const MonomialIdeal& y) {
    return x.generators() < y.generators();
  });
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& i) {
  std::map<VarMask, MonomialIdeal> grouped;
  for (const auto& q : irreducible_decomposition(i)) {
    VarMask supp = 0;
    for (const auto& g : q.generators()) supp |= g.support();
    auto it = grouped.find(supp);
    if (it == grouped.end()) {
      grouped.emplace(supp, q);
    } else {
      it->second = intersect(it->second, q);
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [supp, comp] : grouped) out.push_back({MonomialPrime(i.context(), supp), comp});
  return out;
}

HeightDim height_and_dim(const MonomialIdeal& i) {
  if (i.is_unit()) throw InvalidInput("height of the unit ideal is undefined");
  int h = std::numeric_limits<int>::max();
  for (const auto& p : minimal_primes(i)) h = std::min(h, p.height());
  return {h, static_cast<int>(i.num_vars()) - h};
}

int height_in_quotient(const MonomialIdeal& j, const MonomialIdeal& a) {
  const MonomialIdeal sum = j + a;
  if (sum.is_unit()) throw InvalidInput("height of the unit ideal is undefined");
  const auto base = minimal_primes(a);
  int best = std::numeric_limits<int>::max();
  for (const auto& p : minimal_primes(sum)) {
    int smallest = std::numeric_limits<int>::max();
    for (const auto& q : base) {
      if ((q.support() & p.support()) == q.support()) smallest = std::min(smallest, q.height());
    }
    best = std::min(best, p.height() - smallest);
  }
  return best;
}

MonomialIdeal unmixed_part(const MonomialIdeal& i) {
  if (i.is_unit()) return i;
  if (i.is_zero()) throw InvalidInput("unmixed part of the zero ideal is not defined here");
  const auto mins = minimal_primes(i);
  std::vector<MonomialIdeal> keep;
  for (const auto& pc : primary_decomposition(i)) {
    if (std::find(mins.begin(), mins.end(), pc.prime) != mins.end()) keep.push_back(pc.component);
  }
  return intersect_all(keep);
}

Polarization polarize(const MonomialIdeal& i) {
  const auto n = i.num_vars();
  std::vector<std::uint32_t> max_exp(n, 0);
  for (const auto& g : i.generators()) {
    for (std::size_t v = 0; v < n; ++v) max_exp[v] = std::max(max_exp[v], g[v]);
  }
  std::vector<std::string> names = i.context()->names();
  std::set<std::string> taken(names.begin(), names.end());
  // first_copy[v] = index of the variable carrying x_v's second copy.
  std::vector<std::size_t> first_copy(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    first_copy[v] = names.size();
    for (std::uint32_t k = 1; k < max_exp[v]; ++k) {
      std::string name = i.context()->name(v) + "_" + std::to_string(k);
      while (taken.count(name)) name += "'";
      taken.insert(name);
      names.push_back(name);
    }
  }
  const std::size_t added = names.size() - n;
  if (added == 0) return {i, 0};
  auto ctx = VarContext::make(names);
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    Monomial p(names.size());
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v] == 0) continue;
      p[v] = 1;
      for (std::uint32_t k = 1; k < g[v]; ++k) p[first_copy[v] + k - 1] = 1;
    }
    gens.push_back(p);
  }
  return {MonomialIdeal(ctx, std::move(gens)), added};
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& i) {
  if (!i.is_artinian()) throw InvalidInput("standard monomials requested for a non-Artinian quotient");
  const auto n = i.num_vars();
  std::vector<Monomial> out;
  if (i.is_unit()) return out;
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& g : i.generators()) {
    if (auto v = g.pure_power_variable()) bound[*v] = g[*v];
  }
  Monomial cur(n);
  while (true) {
    if (!i.contains(cur)) out.push_back(cur);
    std::size_t v = 0;
    while (v < n) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(), degrevlex_less);
  return out;
}

}  // namespace commalg
