#include "commalg/monomial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "commalg/errors.hpp"

namespace commalg {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidInput("a variable context needs at least one variable");
  if (names_.size() > 64) throw InvalidInput("at most 64 variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("variable names must be non-empty");
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
}

std::shared_ptr<const VarContext> VarContext::make(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

std::shared_ptr<const VarContext> VarContext::indexed(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial Monomial::variable(std::size_t n, std::size_t i, std::uint32_t power) {
  Monomial m(n);
  m.exps_.at(i) = power;
  return m;
}

Monomial Monomial::from_mask(std::size_t n, VarMask mask) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1) m.exps_[i] = 1;
  }
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

VarMask Monomial::support() const {
  VarMask m = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i]) m |= VarMask{1} << i;
  }
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::colon(const Monomial& other) const {
  Monomial r(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : 0;
  }
  return r;
}

std::string Monomial::to_string(const VarContext& ctx) const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!first) out << '*';
    first = false;
    out << ctx.name(i);
    if (exps_[i] > 1) out << '^' << exps_[i];
  }
  return out.str();
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill_degree(std::size_t n, std::uint32_t remaining, std::size_t var, VarMask allowed,
                 Monomial& cur, std::vector<Monomial>& out) {
  while (var < n && !(allowed >> var & 1)) ++var;
  if (var == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    fill_degree(n, remaining - e, var + 1, allowed, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d, VarMask allowed) {
  std::vector<Monomial> out;
  Monomial cur(n);
  fill_degree(n, d, 0, allowed & full_mask(n), cur, out);
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t d) {
  return monomials_of_degree(n, d, full_mask(n));
}

VarMask full_mask(std::size_t n) { return n >= 64 ? ~VarMask{0} : (VarMask{1} << n) - 1; }

int popcount(VarMask m) { return std::popcount(m); }

}  // namespace commalg
