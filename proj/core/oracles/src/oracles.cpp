#include "commalg/oracles/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace commalg::oracles {

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

bool in_ideal(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

std::vector<Exps> exponents(const MonomialIdeal& i) {
  std::vector<Exps> out;
  for (const auto& g : i.generators()) {
    Exps e(i.num_vars());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = g[v];
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Exps> box(std::size_t n, std::uint32_t cap) {
  std::vector<Exps> out;
  Exps e(n, 0);
  while (true) {
    out.push_back(e);
    std::size_t v = 0;
    while (v < n && e[v] == cap) e[v++] = 0;
    if (v == n) break;
    ++e[v];
  }
  return out;
}

bool same_on_box(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t cap) {
  const auto ga = exponents(a), gb = exponents(b);
  for (const auto& m : box(a.num_vars(), cap)) {
    if (in_ideal(ga, m) != in_ideal(gb, m)) return false;
  }
  return true;
}

bool complement_sum_identity_on_box(const std::vector<MonomialIdeal>& ideals, std::uint32_t cap) {
  std::vector<std::vector<Exps>> gens;
  for (const auto& i : ideals) gens.push_back(exponents(i));
  const std::size_t ell = ideals.size();
  for (const auto& m : box(ideals[0].num_vars(), cap)) {
    std::vector<bool> in(ell);
    for (std::size_t i = 0; i < ell; ++i) in[i] = in_ideal(gens[i], m);
    auto in_j = [&](std::size_t i) {
      for (std::size_t k = 0; k < ell; ++k) {
        if (k != i && !in[k]) return false;
      }
      return true;
    };
    bool lhs = true, rhs = false;
    for (std::size_t i = 0; i < ell; ++i) {
      lhs = lhs && (in[i] || in_j(i));
      rhs = rhs || in_j(i);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

/// The prime with support s contains every monomial in gens.
bool prime_contains(std::uint64_t s, const std::vector<Exps>& gens) {
  for (const auto& g : gens) {
    bool hit = false;
    for (std::size_t v = 0; v < g.size() && !hit; ++v) hit = g[v] > 0 && ((s >> v) & 1);
    if (!hit) return false;
  }
  return true;
}

int height_of_generated(const std::vector<Exps>& j, const std::vector<Exps>& a, std::size_t n) {
  int best = static_cast<int>(n) + 1;
  std::vector<Exps> ja = j;
  ja.insert(ja.end(), a.begin(), a.end());
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
    if (!prime_contains(p, ja)) continue;
    int low = static_cast<int>(n) + 1;
    for (std::uint64_t q = p;; q = (q - 1) & p) {
      if (prime_contains(q, a)) low = std::min(low, std::popcount(q));
      if (q == 0) break;
    }
    best = std::min(best, std::popcount(p) - low);
  }
  return best;
}

}  // namespace

int height_in_quotient(const MonomialIdeal& j, const MonomialIdeal& a) {
  return height_of_generated(exponents(j), exponents(a), j.num_vars());
}

bool s2_fraction_member(const MonomialIdeal& a, const Exps& m, const Exps& d, std::uint32_t max_degree) {
  const std::size_t n = a.num_vars();
  std::vector<Exps> target = exponents(a);
  target.push_back(d);
  std::vector<Exps> j;
  for (const auto& u : box(n, max_degree)) {
    std::uint32_t deg = 0;
    for (auto e : u) deg += e;
    if (deg > max_degree) continue;
    Exps um(n);
    for (std::size_t v = 0; v < n; ++v) um[v] = u[v] + m[v];
    if (in_ideal(target, um)) j.push_back(u);
  }
  return height_of_generated(j, exponents(a), n) >= 2;
}

bool in_f_family_conductor(const std::vector<std::uint64_t>& supports, const Exps& u) {
  auto in_prime = [&](std::uint64_t s) {
    for (std::size_t v = 0; v < u.size(); ++v) {
      if (u[v] > 0 && ((s >> v) & 1)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (in_prime(supports[i])) continue;
    for (std::size_t k = 0; k < supports.size(); ++k) {
      if (k != i && !in_prime(supports[k])) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> semigroup_gaps(const std::vector<std::uint32_t>& gens, std::uint32_t limit) {
  std::set<std::uint32_t> reached{0};
  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto s : frontier) {
      for (auto g : gens) {
        const std::uint32_t t = s + g;
        if (t < limit && reached.insert(t).second) next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> gaps;
  for (std::uint32_t s = 0; s < limit; ++s) {
    if (!reached.count(s)) gaps.push_back(s);
  }
  return gaps;
}

}  // namespace commalg::oracles
