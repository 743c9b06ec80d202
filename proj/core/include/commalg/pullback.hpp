#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "commalg/linalg.hpp"
#include "commalg/monomial_ideal.hpp"
#include "commalg/polynomial.hpp"

namespace commalg {

/// How A sits inside B = ⊕ T/K_i. In every mode
///   A = {diag(f) : f ∈ D} + Σ b_i e_i
/// with D = T, or D = k (constants) for ConstantsPlusIdeal.
///  - Intersection: K_i = P_i monomial primes, b_i = 0, so A = T/∩P_i.
///  - Congruence: two copies of S = T, K_i = 0, b_2 = q, so A = {(x,y) : x ≡ y mod q}.
///  - ConstantsPlusIdeal: one copy of S, K = 0, b_1 = q, so A = k + q.
enum class PullbackMode { Intersection, Congruence, ConstantsPlusIdeal };

/// Basis label of B: the monomial u in component comp.
struct BKey {
  Monomial mono;
  std::size_t comp = 0;

  friend auto operator<=>(const BKey&, const BKey&) = default;
  friend bool operator==(const BKey&, const BKey&) = default;
};

using BElement = SparseVec<Rationals, BKey>;
using BSpan = Echelon<Rationals, BKey>;

class PullbackFamily {
 public:
  /// ℓ ≥ 1 nonempty supports forming an antichain. ℓ = 1 is the degenerate A = B.
  static PullbackFamily intersection(ContextPtr ctx, std::vector<VarMask> supports);
  /// S ×_{S/q} S. q may be the unit ideal (then A = B).
  static PullbackFamily congruence(const MonomialIdeal& q);
  /// k + q inside S.
  static PullbackFamily constants_plus_ideal(const MonomialIdeal& q);

  PullbackMode mode() const { return mode_; }
  const ContextPtr& context() const { return ctx_; }
  std::size_t num_vars() const { return ctx_->size(); }
  std::size_t num_components() const { return kernels_.size(); }
  const MonomialIdeal& component_kernel(std::size_t i) const { return kernels_.at(i); }
  const MonomialIdeal& module_part(std::size_t i) const { return parts_.at(i); }
  bool has_full_diagonal() const { return mode_ != PullbackMode::ConstantsPlusIdeal; }
  /// Supports of the primes (Intersection mode).
  const std::vector<VarMask>& supports() const { return supports_; }
  /// ∩ P_i (Intersection mode only).
  MonomialIdeal defining_ideal() const;
  /// The ideal q (Congruence and ConstantsPlusIdeal modes).
  const MonomialIdeal& q() const;

  bool survives(const Monomial& u, std::size_t comp) const { return !kernels_[comp].contains(u); }
  std::vector<std::size_t> live_components(const Monomial& u) const;
  /// Basis (i, u) of B in multidegree u.
  std::vector<BKey> b_basis(const Monomial& u) const;
  /// Basis of A in multidegree u.
  std::vector<BElement> a_basis(const Monomial& u) const;
  std::vector<BElement> a_basis_of_degree(std::uint32_t d) const;

  BElement diagonal(const Polynomial& f) const;
  BElement diagonal(const Monomial& u) const;
  BElement unit(std::size_t comp) const;
  BElement basis_vector(std::size_t comp, const Monomial& u) const;
  BElement multiply(const BElement& b, const BElement& c) const;
  BElement multiply(const BElement& b, const Monomial& m) const;
  BElement multiply(const BElement& b, const Polynomial& f) const;

  /// Reduction modulo A; zero iff b ∈ A.
  BElement normal_form(const BElement& b) const;
  bool in_A(const BElement& b) const { return normal_form(b).empty(); }

  /// Generators of the homogeneous maximal ideal of A as elements of B.
  std::vector<BElement> max_ideal_generators() const;

  /// Per-variable exponent caps: membership of u in every ideal defining the
  /// family depends only on min(u_v, cap_v).
  std::vector<std::uint32_t> exponent_caps() const;

  /// Throws InvalidInput when b has a bad component or a coordinate that is
  /// not reduced modulo its K_i.
  void validate(const BElement& b) const;

 private:
  PullbackFamily() = default;

  PullbackMode mode_ = PullbackMode::Intersection;
  ContextPtr ctx_;
  std::vector<MonomialIdeal> kernels_;
  std::vector<MonomialIdeal> parts_;
  std::vector<VarMask> supports_;
  std::optional<MonomialIdeal> q_;
};

/// Splits b into its multihomogeneous pieces.
std::map<Monomial, BElement> by_multidegree(const BElement& b);
bool is_multihomogeneous(const BElement& b);

struct Membership {
  bool member = false;
  /// f ∈ T with b - diag(f) ∈ Σ b_i e_i (for Intersection mode, b = diag(f)).
  std::optional<Polynomial> witness;
};

Membership image_membership(const PullbackFamily& fam, const BElement& b);

enum class ConductorShape {
  LiftToT,      // the image in A of a T-ideal
  IdealTimesB,  // the B-ideal generated by a T-ideal
};

struct Conductor {
  MonomialIdeal ideal;
  ConductorShape shape;
  /// Degree of the exponent box on which the two computations were compared.
  /// Every monomial is equivalent to one in the box, so agreement there is
  /// agreement everywhere.
  std::uint32_t checked_through = 0;

  /// Generators as an ideal of A, written in B.
  std::vector<BElement> generators(const PullbackFamily& fam) const;
  /// The conductor in multidegree u.
  BSpan piece(const PullbackFamily& fam, const Monomial& u) const;
  bool contains(const PullbackFamily& fam, const BElement& b) const;
};

/// Closed form: Σ_i ∩_{j≠i} P_j, or qB, or q (k + q; the unit ideal when q
/// contains every variable).
Conductor conductor_closed_form(const PullbackFamily& fam);
/// {a ∈ A_u : a e_i ∈ A for every i} in multidegree u.
BSpan conductor_direct_piece(const PullbackFamily& fam, const Monomial& u);
/// Closed form, checked against the direct computation on the exponent box.
/// Disagreement throws MethodDisagreement.
Conductor conductor(const PullbackFamily& fam);

struct CokernelProfile {
  std::size_t length = 0;
  /// dim (B/A)_d for d = 0 .. top_degree + 1 (last entry always 0).
  std::vector<std::size_t> hilbert;
  std::size_t socle_dim = 0;
  bool conductor_annihilates = false;
  std::uint32_t top_degree = 0;
};

/// Requires the conductor to be primary to the homogeneous maximal ideal.
CokernelProfile cokernel_profile(const PullbackFamily& fam);

/// True iff every element of `gens` (elements of A) kills B/A.
bool kills_cokernel(const PullbackFamily& fam, const Conductor& cond, const std::vector<BElement>& gens);

/// Graded submodule of B generated by multihomogeneous elements over A or B.
struct GradedSubmodule {
  enum class Over { A, B };

  Over over = Over::A;
  std::vector<BElement> gens;

  static GradedSubmodule ring_A(const PullbackFamily& fam);
  /// The ideal of A generated by the images of the monomial generators of i.
  static GradedSubmodule ideal_of_A(const PullbackFamily& fam, const MonomialIdeal& i);
  /// iB.
  static GradedSubmodule extended_ideal(const PullbackFamily& fam, const MonomialIdeal& i);
};

/// Per-multidegree spans of a submodule, computed on demand.
class SubmoduleSpans {
 public:
  SubmoduleSpans(const PullbackFamily& fam, GradedSubmodule x);
  const BSpan& piece(const Monomial& w);
  bool contains(const BElement& b);

 private:
  const PullbackFamily& fam_;
  GradedSubmodule x_;
  std::vector<Monomial> degrees_;
  std::map<Monomial, BSpan> cache_;
};

struct ColonResult {
  std::uint32_t bound = 0;
  std::map<Monomial, BSpan> pieces;
  /// dims[d] = dim of the colon in degree d; b_dims[d] = dim B_d.
  std::vector<std::size_t> dims;
  std::vector<std::size_t> b_dims;

  bool is_all_of_B() const { return dims == b_dims; }
  bool same_as(const ColonResult& other) const;
};

/// {b ∈ B : b·I ⊆ X} through degree `bound` (default max deg I + n).
ColonResult colon_in_B(const PullbackFamily& fam, const GradedSubmodule& x, const MonomialIdeal& i,
                       std::optional<std::uint32_t> bound = std::nullopt);

/// Σ a_i B == conductor, for homogeneous a_i (images of polynomials of T).
bool verify_generation(const PullbackFamily& fam, const Conductor& cond, const std::vector<Polynomial>& elements);

/// Degree-wise regular-sequence test on each component of B: the Hilbert
/// function of B/(a)B must equal HF(B)·Π(1 - t^deg a_i) through `bound`.
bool regular_on_B(const PullbackFamily& fam, const std::vector<Polynomial>& elements, std::uint32_t bound);

/// All monomials u with u_v ≤ caps[v].
std::vector<Monomial> monomials_in_box(const std::vector<std::uint32_t>& caps);

}  // namespace commalg
