#include "commalg/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

#include "commalg/errors.hpp"

namespace commalg {
namespace {

/// reach[s] = s is a sum of gens, for s < limit.
std::vector<bool> sieve(const std::vector<std::uint32_t>& gens, std::size_t limit) {
  std::vector<bool> reach(limit, false);
  if (limit > 0) reach[0] = true;
  for (std::size_t s = 1; s < limit; ++s) {
    for (auto g : gens) {
      if (g <= s && reach[s - g]) {
        reach[s] = true;
        break;
      }
    }
  }
  return reach;
}

bool is_rational_square(const mpq_class& v) {
  if (sgn(v) < 0) return false;
  return mpz_perfect_square_p(v.get_num_mpz_t()) != 0 && mpz_perfect_square_p(v.get_den_mpz_t()) != 0;
}

mpq_class parse_rational(const std::string& s) {
  try {
    mpq_class q(s);
    q.canonicalize();
    if (sgn(q.get_den()) == 0) throw InvalidInput("zero denominator in '" + s + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("bad coefficient '" + s + "'");
  }
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint32_t> gens) {
  if (gens.empty()) throw InvalidInput("a numerical semigroup needs generators");
  std::uint32_t g = 0;
  for (auto a : gens) {
    if (a == 0) throw InvalidInput("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw InvalidInput("semigroup generators have gcd " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Frobenius < a_min · a_max, so sieving that far finds every gap.
  const std::size_t limit = static_cast<std::size_t>(gens.front()) * gens.back() + gens.front() + 1;
  for (auto a : gens) {
    if (!sieve(gens_, a + 1)[a]) gens_.push_back(a);
  }
  const auto reach = sieve(gens_, limit);
  for (std::size_t s = 0; s < limit; ++s) {
    if (!reach[s]) gaps_.push_back(static_cast<std::uint32_t>(s));
  }
  const std::size_t run_start = gaps_.empty() ? 0 : gaps_.back() + 1;
  if (run_start + gens_.front() > limit) throw Error("semigroup sieve bound too small");
}

bool NumericalSemigroup::contains(std::uint64_t s) const {
  return !std::binary_search(gaps_.begin(), gaps_.end(), s);
}

std::vector<std::uint32_t> NumericalSemigroup::apery(std::uint32_t m) const {
  if (m == 0 || !contains(m)) throw InvalidInput("Apery set needs a positive element of the semigroup");
  std::vector<std::uint32_t> out(m, 0);
  std::vector<bool> found(m, false);
  std::size_t remaining = m;
  for (std::uint32_t s = 0; remaining > 0; ++s) {
    if (contains(s) && !found[s % m]) {
      found[s % m] = true;
      out[s % m] = s;
      --remaining;
    }
  }
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  return static_cast<std::int64_t>(gaps_.size()) * 2 == frobenius() + 1;
}

bool NumericalSemigroup::is_symmetric_direct() const {
  const std::int64_t f = frobenius();
  for (std::int64_t s = 0; s <= f; ++s) {
    if (contains(static_cast<std::uint64_t>(s)) == contains(static_cast<std::uint64_t>(f - s))) return false;
  }
  return true;
}

nlohmann::json NumericalSemigroup::to_json() const {
  return {{"generators", gens_},
          {"gaps", gaps_},
          {"frobenius", frobenius()},
          {"conductor", conductor()},
          {"multiplicity", multiplicity()},
          {"apery", apery(multiplicity())},
          {"symmetric", is_symmetric()}};
}

Series parse_series(const std::string& text, const FieldSpec& f) {
  const ScalarField k(f);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidInput("empty series");
  Series out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    const std::size_t end = s.find_first_of("+-", pos);
    const std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw InvalidInput("bad series '" + text + "'");
    const std::size_t t = term.find('t');
    mpq_class coeff = 1;
    std::uint32_t exp = 0;
    if (t == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string c = term.substr(0, t);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (!c.empty()) coeff = parse_rational(c);
      const std::string rest = term.substr(t + 1);
      if (rest.empty()) {
        exp = 1;
      } else if (rest[0] == '^' && rest.size() > 1 &&
                 std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        exp = static_cast<std::uint32_t>(std::stoul(rest.substr(1)));
      } else {
        throw InvalidInput("bad term '" + term + "'");
      }
    }
    Series term_series;
    const auto value = k.from_rational(sign * coeff);
    if (!k.is_zero(value)) term_series.emplace(exp, value);
    axpy(k, out, k.one(), term_series);
  }
  return out;
}

std::string series_to_string(const Series& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : s) {
    std::string coeff = c.get_str();
    const bool neg = coeff[0] == '-';
    if (neg) coeff = coeff.substr(1);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    out += e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return out;
}

Series truncated_product(const ScalarField& k, const Series& a, const Series& b, std::uint32_t precision) {
  Series out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      if (ea + eb >= precision) break;
      Series term{{ea + eb, k.mul(ca, cb)}};
      axpy(k, out, k.one(), term);
    }
  }
  return out;
}

TruncatedSubalgebra TruncatedSubalgebra::closure(const std::vector<Series>& gens, const FieldSpec& f,
                                                 std::uint32_t precision, std::uint32_t margin) {
  if (gens.empty()) throw InvalidInput("subalgebra needs generators");
  std::uint32_t maxval = 0;
  TruncatedSubalgebra p(f, precision, margin);
  const ScalarField k(f);
  for (Series g : gens) {
    g.erase(0);
    for (auto it = g.lower_bound(precision); it != g.end();) it = g.erase(it);
    if (g.empty()) throw InvalidInput("generator vanishes modulo t^" + std::to_string(precision) + " after removing its constant term");
    maxval = std::max(maxval, g.begin()->first);
    p.gens_.push_back(std::move(g));
  }
  if (precision < 2 * maxval + margin) {
    throw InvalidInput("precision " + std::to_string(precision) + " below 2*" + std::to_string(maxval) + " + margin " +
                       std::to_string(margin));
  }
  std::deque<Series> queue{Series{{0, k.one()}}};
  p.basis_.insert(queue.front());
  while (!queue.empty()) {
    const Series row = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : p.gens_) {
      Series prod = p.basis_.reduce(truncated_product(k, row, g, precision));
      if (prod.empty()) continue;
      p.basis_.insert(prod);
      queue.push_back(std::move(prod));
    }
  }
  return p;
}

std::set<std::uint32_t> TruncatedSubalgebra::valuations() const {
  std::set<std::uint32_t> out;
  for (const auto& [pivot, row] : basis_.rows()) out.insert(pivot);
  return out;
}

std::vector<std::uint32_t> TruncatedSubalgebra::value_window() const {
  std::vector<std::uint32_t> out;
  for (auto v : valuations()) {
    if (v < window()) out.push_back(v);
  }
  return out;
}

bool TruncatedSubalgebra::contains(const Series& s) const {
  Series t;
  for (const auto& [e, c] : s) {
    if (e < precision_) t.emplace(e, ScalarField(field_).from_rational(c));
  }
  for (auto it = t.begin(); it != t.end();) it = ScalarField(field_).is_zero(it->second) ? t.erase(it) : std::next(it);
  return basis_.contains(t);
}

bool TruncatedSubalgebra::contains_power(std::uint32_t j) const {
  if (j >= precision_) throw PrecisionExhausted("t^" + std::to_string(j) + " lies beyond the precision");
  return basis_.contains(Series{{j, mpq_class(1)}});
}

std::uint32_t TruncatedSubalgebra::conductor_exponent() const {
  const auto vals = valuations();
  auto it = vals.upper_bound(0);
  if (it == vals.end()) throw PrecisionExhausted("no positive value below t^" + std::to_string(precision_));
  const std::uint32_t m = *it;
  for (std::uint32_t c = 0; c + m <= window(); ++c) {
    bool run = true;
    for (std::uint32_t j = c; j < c + m && run; ++j) run = vals.count(j) > 0;
    if (!run) continue;
    for (std::uint32_t j = c; j < window(); ++j) {
      if (!contains_power(j)) throw MethodDisagreement("value run found but t^" + std::to_string(j) + " is not in P");
    }
    return c;
  }
  throw PrecisionExhausted("values have not stabilized below t^" + std::to_string(window()));
}

NumericalSemigroup TruncatedSubalgebra::value_semigroup() const {
  const std::uint32_t c = conductor_exponent();
  std::vector<std::uint32_t> gens;
  for (auto v : value_window()) {
    if (v > 0 && v < c + valuations().upper_bound(0).operator*()) gens.push_back(v);
  }
  if (gens.empty()) gens.push_back(1);
  const NumericalSemigroup h(gens);
  for (std::uint32_t s = 0; s < window(); ++s) {
    if (h.contains(s) != (valuations().count(s) > 0)) throw MethodDisagreement("value window is not a semigroup");
  }
  return h;
}

std::size_t TruncatedSubalgebra::socle_dim_of_cokernel() const {
  const std::uint32_t c = conductor_exponent();
  const ScalarField k(field_);
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::vector<SparseVec<ScalarField, Key>> images;
  for (std::uint32_t j = 0; j < c; ++j) {
    SparseVec<ScalarField, Key> img;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const Series r = basis_.reduce(truncated_product(k, Series{{j, k.one()}}, gens_[i], precision_));
      for (const auto& [e, v] : r) img.emplace(Key{i, e}, v);
    }
    images.push_back(std::move(img));
  }
  const std::size_t ker = kernel_basis(k, images).size();
  const auto vals = valuations();
  const auto below_c = static_cast<std::size_t>(std::distance(vals.begin(), vals.lower_bound(c)));
  return ker - below_c;
}

VerificationReport semigroup_report(const NumericalSemigroup& h) {
  VerificationReport rep("numerical semigroup " + nlohmann::json(h.generators()).dump());
  rep.info("generators", "minimal generators of H", h.generators());
  rep.info("gaps", "N \\ H", h.gaps());
  rep.info("frobenius", "F(H) = max gap", h.frobenius());
  rep.info("conductor", "c(H) = F(H) + 1", h.conductor());
  rep.info("multiplicity", "least positive element", h.multiplicity());
  rep.info("apery", "Ap(H, m)", h.apery(h.multiplicity()));
  rep.info("symmetric", "H symmetric", h.is_symmetric());
  rep.check("symmetric.direct", "s in H iff F - s not in H", h.is_symmetric(), h.is_symmetric_direct());
  return rep;
}

VerificationReport subalgebra_report(const TruncatedSubalgebra& p, const std::vector<std::uint32_t>& membership_queries) {
  std::string gens;
  for (const auto& g : p.generators()) gens += (gens.empty() ? "" : ", ") + series_to_string(g);
  VerificationReport rep("P = k[[" + gens + "]] over " + p.field().to_string());
  rep.set_meta("precision", p.precision());
  rep.set_meta("window", p.window());
  rep.info("value_window", "v(P) below the window", p.value_window());
  const NumericalSemigroup h = p.value_semigroup();
  rep.info("value_semigroup", "v(P)", h.generators());
  rep.info("value_gaps", "gaps of v(P)", h.gaps());
  const std::uint32_t c = p.conductor_exponent();
  rep.info("conductor_exponent", "P:V = t^c V", c);
  rep.check("conductor_exponent.semigroup", "c = c(v(P))", h.conductor(), c);
  rep.info("socle_dim_V_over_P", "r_P(V/P)", p.socle_dim_of_cokernel());
  const auto vals = p.valuations();
  for (auto j : membership_queries) {
    rep.info("has_value_" + std::to_string(j), "j in v(P)", vals.count(j) > 0);
    rep.info("contains_t^" + std::to_string(j), "t^j in P", p.contains_power(j));
  }
  return rep;
}

VerificationReport cone_extension_report(const std::vector<Series>& gens, const FieldSpec& f, std::uint32_t precision,
                                         std::uint32_t s_precision, std::uint32_t margin) {
  if (s_precision < 2) throw InvalidInput("the s-truncation must keep s");
  const TruncatedSubalgebra p = TruncatedSubalgebra::closure(gens, f, precision, margin);
  const ScalarField k(f);
  const std::uint32_t n = precision;
  const std::uint32_t c = p.conductor_exponent();
  // B has basis t^j s^i; A = P in s-degree 0 and everything in s-degree ≥ 1.
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (s-degree, t-exponent)
  using BVec = SparseVec<ScalarField, Key>;
  auto multiply = [&](const BVec& a, const BVec& b) {
    BVec out;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        const Key key{ka.first + kb.first, ka.second + kb.second};
        if (key.first >= s_precision || key.second >= n) continue;
        BVec term{{key, k.mul(ca, cb)}};
        axpy(k, out, k.one(), term);
      }
    }
    return out;
  };
  // Residue modulo A: the s-degree 0 part reduced modulo P.
  auto residue = [&](const BVec& b) {
    Series s0;
    for (const auto& [key, v] : b) {
      if (key.first == 0) s0.emplace(key.second, v);
    }
    return p.basis().reduce(s0);
  };
  auto mono = [&](std::uint32_t i, std::uint32_t j) { return BVec{{Key{i, j}, k.one()}}; };

  // Conductor {b : b·t^j ∈ A for all j}, one s-degree at a time.
  bool conductor_matches = true;
  for (std::uint32_t i = 0; i < s_precision; ++i) {
    std::vector<SparseVec<ScalarField, std::pair<std::uint32_t, std::uint32_t>>> images;
    for (std::uint32_t j = 0; j < p.window(); ++j) {
      SparseVec<ScalarField, std::pair<std::uint32_t, std::uint32_t>> img;
      for (std::uint32_t m = 0; m < p.window(); ++m) {
        for (const auto& [e, v] : residue(multiply(mono(i, j), mono(0, m)))) img.emplace(std::pair{m, e}, v);
      }
      images.push_back(std::move(img));
    }
    const auto ker = kernel_basis(k, images);
    // Expected: t^j for j ≥ c in s-degree 0; everything above.
    Echelon<ScalarField, std::size_t> got(k), want(k);
    for (const auto& v : ker) got.insert(v);
    for (std::uint32_t j = i == 0 ? c : 0; j < p.window(); ++j) want.insert({{j, k.one()}});
    conductor_matches = conductor_matches && got.same_span(want);
  }

  // Socle of B/A over A: unknowns in s-degree 0 below t^c, killed into A by
  // the generators of the maximal ideal (the g_i and s·t^j).
  std::vector<BVec> max_gens;
  for (const auto& g : p.generators()) {
    BVec v;
    for (const auto& [e, x] : g) v.emplace(Key{0, e}, x);
    max_gens.push_back(std::move(v));
  }
  for (std::uint32_t j = 0; j < p.window(); ++j) max_gens.push_back(mono(1, j));
  std::vector<SparseVec<ScalarField, std::pair<std::size_t, std::uint32_t>>> images;
  for (std::uint32_t j = 0; j < c; ++j) {
    SparseVec<ScalarField, std::pair<std::size_t, std::uint32_t>> img;
    for (std::size_t g = 0; g < max_gens.size(); ++g) {
      for (const auto& [e, v] : residue(multiply(mono(0, j), max_gens[g]))) img.emplace(std::pair{g, e}, v);
    }
    images.push_back(std::move(img));
  }
  const auto vals = p.valuations();
  const std::size_t type_a = kernel_basis(k, images).size() -
                             static_cast<std::size_t>(std::distance(vals.begin(), vals.lower_bound(c)));

  VerificationReport rep("A = P + sB over " + f.to_string());
  rep.set_meta("precision", precision);
  rep.set_meta("s_precision", s_precision);
  rep.set_meta("window", p.window());
  rep.info("conductor_exponent", "P:V = t^c V", c);
  rep.check("conductor_equals_c_plus_sB", "A:B = c + sB", true, conductor_matches);
  const std::size_t type_p = p.socle_dim_of_cokernel();
  rep.info("type_V_over_P", "r_P(V/P)", type_p);
  rep.check("type_B_over_A", "r_A(B/A) = r_P(V/P)", type_p, type_a);
  return rep;
}

void QuadraticExtensionModel::validate() const {
  const ScalarField k(base);
  if (base.is_rational()) {
    if (is_rational_square(c * c + 4 * e)) throw InvalidInput("alpha lies in the base field: x^2 - cx - e has a rational root");
    return;
  }
  const auto cc = k.from_rational(c), ee = k.from_rational(e);
  for (std::uint32_t x = 0; x < base.p; ++x) {
    const auto xv = k.from_int(x);
    if (k.is_zero(k.sub(k.sub(k.mul(xv, xv), k.mul(cc, xv)), ee))) {
      throw InvalidInput("alpha lies in the base field: x^2 - cx - e has root " + std::to_string(x));
    }
  }
}

VerificationReport quadratic_extension_report(const QuadraticExtensionModel& m) {
  m.validate();
  const ScalarField k(m.base);
  const auto cc = k.from_rational(m.c), ee = k.from_rational(m.e);
  const std::uint32_t n = m.precision;
  if (n < 3) throw InvalidInput("precision too small");
  // V over k0 has basis (j, 0) = t^j and (j, 1) = αt^j.
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using VVec = SparseVec<ScalarField, Key>;
  auto multiply = [&](const VVec& a, const VVec& b) {
    VVec out;
    for (const auto& [ka, ca] : a) {
      for (const auto& [kb, cb] : b) {
        const std::uint32_t j = ka.first + kb.first;
        if (j >= n) continue;
        const auto v = k.mul(ca, cb);
        VVec term;
        if (ka.second + kb.second < 2) {
          term.emplace(Key{j, ka.second + kb.second}, v);
        } else {
          if (!k.is_zero(k.mul(v, ee))) term.emplace(Key{j, 0}, k.mul(v, ee));
          if (!k.is_zero(k.mul(v, cc))) term.emplace(Key{j, 1}, k.mul(v, cc));
        }
        axpy(k, out, k.one(), term);
      }
    }
    return out;
  };
  const VVec one{{Key{0, 0}, k.one()}}, alpha{{Key{0, 1}, k.one()}};
  const std::vector<VVec> gens{VVec{{Key{1, 0}, k.one()}}, VVec{{Key{1, 1}, k.one()}}};
  Echelon<ScalarField, Key> p(k);
  std::deque<VVec> queue{one};
  p.insert(one);
  while (!queue.empty()) {
    const VVec row = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      VVec prod = p.reduce(multiply(row, g));
      if (prod.empty()) continue;
      p.insert(prod);
      queue.push_back(std::move(prod));
    }
  }
  Echelon<ScalarField, Key> p_plus_alpha_p = p;
  for (const auto& [pivot, row] : p.rows()) p_plus_alpha_p.insert(multiply(alpha, row));
  const bool v_is_sum = p_plus_alpha_p.rank() == 2 * n;
  bool tv_in_p = true;
  for (std::uint32_t j = 1; j < n; ++j) {
    for (std::uint32_t part = 0; part < 2; ++part) tv_in_p = tv_in_p && p.contains({{Key{j, part}, k.one()}});
  }
  const bool alpha_in_p = p.contains(alpha);
  const std::size_t codim = 2 * n - p.rank();
  // Socle of V/P: unknowns in t-degree 0, killed into P by t and αt.
  std::vector<SparseVec<ScalarField, std::pair<std::size_t, Key>>> images;
  for (std::uint32_t part = 0; part < 2; ++part) {
    SparseVec<ScalarField, std::pair<std::size_t, Key>> img;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (const auto& [key, v] : p.reduce(multiply(VVec{{Key{0, part}, k.one()}}, gens[g]))) img.emplace(std::pair{g, key}, v);
    }
    images.push_back(std::move(img));
  }
  std::size_t p_in_degree_0 = 0;
  for (const auto& [pivot, row] : p.rows()) p_in_degree_0 += pivot.first == 0 ? 1 : 0;
  const std::size_t type = kernel_basis(k, images).size() - p_in_degree_0;
  std::uint32_t cond = n;
  for (std::uint32_t c = 0; c < n; ++c) {
    bool all = true;
    for (std::uint32_t j = c; j < n && all; ++j) {
      for (std::uint32_t part = 0; part < 2; ++part) all = all && p.contains({{Key{j, part}, k.one()}});
    }
    if (all) {
      cond = c;
      break;
    }
  }

  VerificationReport rep("P = k0[[t, alpha t]], alpha^2 = " + m.c.get_str() + " alpha + " + m.e.get_str() + " over " +
                         m.base.to_string());
  rep.set_meta("precision", n);
  rep.check("V_equals_P_plus_alphaP", "V = P + alpha P", true, v_is_sum);
  rep.check("nV_in_P", "nV in P", true, tv_in_p);
  rep.check("alpha_not_in_P", "alpha not in P", true, !alpha_in_p);
  rep.check("dim_V_over_P", "dim_k0 V/P = 1", 1, codim);
  rep.check("type_V_over_P", "r_P(V/P) = 1", 1, type);
  rep.check("conductor_exponent", "P:V = n", 1, cond);
  return rep;
}

}  // namespace commalg
