#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commalg/field.hpp"
#include "commalg/linalg.hpp"
#include "commalg/report.hpp"

namespace commalg {

class NumericalSemigroup {
 public:
  /// Positive generators with gcd 1; the minimal generating set is kept.
  explicit NumericalSemigroup(std::vector<std::uint32_t> gens);

  const std::vector<std::uint32_t>& generators() const { return gens_; }
  bool contains(std::uint64_t s) const;
  const std::vector<std::uint32_t>& gaps() const { return gaps_; }
  /// Largest gap; -1 for ℕ.
  std::int64_t frobenius() const { return gaps_.empty() ? -1 : static_cast<std::int64_t>(gaps_.back()); }
  std::uint32_t conductor() const { return static_cast<std::uint32_t>(frobenius() + 1); }
  std::uint32_t multiplicity() const { return gens_.front(); }
  /// Least element of each residue class mod m, for m ∈ H positive.
  std::vector<std::uint32_t> apery(std::uint32_t m) const;
  /// #gaps == (F + 1) / 2.
  bool is_symmetric() const;
  /// s ∈ H iff F - s ∉ H for 0 ≤ s ≤ F.
  bool is_symmetric_direct() const;

  nlohmann::json to_json() const;

 private:
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> gaps_;
};

/// Power series in t truncated at some precision, keyed by exponent.
using Series = SparseVec<ScalarField, std::uint32_t>;

/// Parses "t^2+t^3", "2*t - 1/3t^4", "1" into a series over f.
Series parse_series(const std::string& text, const FieldSpec& f);
std::string series_to_string(const Series& s);

Series truncated_product(const ScalarField& k, const Series& a, const Series& b, std::uint32_t precision);

/// The unital k-subalgebra of k[t]/(t^N) generated by a list of series, kept
/// in echelon form with pivots at valuations.
class TruncatedSubalgebra {
 public:
  static constexpr std::uint32_t kDefaultPrecision = 40;
  static constexpr std::uint32_t kDefaultMargin = 10;

  /// Requires N ≥ 2·(max generator valuation) + margin. Constant terms of the
  /// generators are dropped.
  static TruncatedSubalgebra closure(const std::vector<Series>& gens, const FieldSpec& f,
                                     std::uint32_t precision = kDefaultPrecision,
                                     std::uint32_t margin = kDefaultMargin);

  const FieldSpec& field() const { return field_; }
  std::uint32_t precision() const { return precision_; }
  std::uint32_t margin() const { return margin_; }
  /// Values below window() are reported.
  std::uint32_t window() const { return precision_ - margin_; }
  const std::vector<Series>& generators() const { return gens_; }
  const Echelon<ScalarField, std::uint32_t>& basis() const { return basis_; }

  /// v(P) ∩ [0, precision).
  std::set<std::uint32_t> valuations() const;
  std::vector<std::uint32_t> value_window() const;
  bool contains(const Series& s) const;
  bool contains_power(std::uint32_t j) const;

  /// Least c with t^c V ⊆ P, certified by a run of m consecutive values
  /// (m the least positive value) inside the window. Also checks t^j ∈ P
  /// for c ≤ j < window(). Throws PrecisionExhausted otherwise.
  std::uint32_t conductor_exponent() const;

  /// The value semigroup read from the certified window.
  NumericalSemigroup value_semigroup() const;

  /// dim soc_P(V/P).
  std::size_t socle_dim_of_cokernel() const;

 private:
  TruncatedSubalgebra(FieldSpec f, std::uint32_t n, std::uint32_t margin)
      : field_(f), precision_(n), margin_(margin), basis_(ScalarField(f)) {}

  FieldSpec field_;
  std::uint32_t precision_;
  std::uint32_t margin_;
  std::vector<Series> gens_;
  Echelon<ScalarField, std::uint32_t> basis_;
};

VerificationReport semigroup_report(const NumericalSemigroup& h);

VerificationReport subalgebra_report(const TruncatedSubalgebra& p, const std::vector<std::uint32_t>& membership_queries = {});

/// A = P + sB inside B = V[s]/(s^M), V = k[t]/(t^N).
VerificationReport cone_extension_report(const std::vector<Series>& gens, const FieldSpec& f,
                                         std::uint32_t precision = TruncatedSubalgebra::kDefaultPrecision,
                                         std::uint32_t s_precision = 3,
                                         std::uint32_t margin = TruncatedSubalgebra::kDefaultMargin);

/// k = k0[α]/(α² - cα - e), V = k[t]/(t^N), P = k0[t, αt].
struct QuadraticExtensionModel {
  FieldSpec base;
  mpq_class c;
  mpq_class e;
  std::uint32_t precision = 12;

  /// Throws InvalidInput when the polynomial has a root in k0.
  void validate() const;
};

VerificationReport quadratic_extension_report(const QuadraticExtensionModel& m);

}  // namespace commalg
