#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "commalg/field.hpp"
#include "commalg/monomial_ideal.hpp"

namespace commalg {

/// Largest vertex count accepted by the homology and Betti routines.
inline constexpr std::size_t kMaxSimplicialVertices = 16;

/// Simplicial complex on the variables of a context, stored by its facets.
/// No facets at all is the void complex; the single empty facet is the
/// irrelevant complex {∅}.
class SimplicialComplex {
 public:
  /// Keeps only the inclusion-maximal sets of `faces`.
  SimplicialComplex(ContextPtr vertices, std::vector<VarMask> faces);

  static SimplicialComplex void_complex(ContextPtr vertices) { return {std::move(vertices), {}}; }
  static SimplicialComplex irrelevant(ContextPtr vertices) { return {std::move(vertices), {0}}; }
  static SimplicialComplex simplex(ContextPtr vertices);

  const ContextPtr& context() const { return ctx_; }
  std::size_t num_vertices() const { return ctx_->size(); }
  const std::vector<VarMask>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; undefined (-2) for the void complex.
  int dimension() const;
  bool is_pure() const;

  bool contains_face(VarMask face) const;
  /// Faces grouped by dimension: entry k holds the faces of dimension k - 1.
  std::vector<std::vector<VarMask>> faces_by_dimension() const;
  /// f-vector (f_{-1}, f_0, ...).
  std::vector<std::size_t> f_vector() const;

  /// Induced subcomplex on the vertex set `mask`.
  SimplicialComplex restriction(VarMask mask) const;
  /// lk(face) = {G : G ∩ face = ∅, G ∪ face ∈ Δ}.
  SimplicialComplex link(VarMask face) const;
  /// Cone over a new apex vertex named `apex`.
  SimplicialComplex cone(const std::string& apex) const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_ && same_context(a.ctx_, b.ctx_);
  }

 private:
  ContextPtr ctx_;
  std::vector<VarMask> facets_;
};

/// Reduced homology ranks H̃_i for i = -1 .. dim.
struct HomologyRanks {
  std::vector<std::size_t> ranks;  // ranks[i + 1] = dim H̃_i

  std::size_t at(int i) const;
  bool all_zero() const;
  int euler_characteristic() const;
};

/// Stanley–Reisner complex: faces are the supports of monomials outside I.
SimplicialComplex complex_of(const MonomialIdeal& i);
/// Stanley–Reisner ideal generated by the minimal non-faces.
MonomialIdeal ideal_of(const SimplicialComplex& c);

HomologyRanks reduced_homology(const SimplicialComplex& c, const FieldSpec& f);

/// Multigraded Betti numbers of the ideal I (not of T/I):
/// beta_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ|σ), σ ≠ ∅. A generator of I sits at
/// i = 0, so pd(T/I) = max i + 1 whenever I ≠ 0.
class BettiTable {
 public:
  using Entries = std::map<std::pair<int, VarMask>, std::size_t>;

  BettiTable(ContextPtr ctx, Entries entries) : ctx_(std::move(ctx)), entries_(std::move(entries)) {}

  const ContextPtr& context() const { return ctx_; }
  const Entries& entries() const { return entries_; }
  std::size_t at(int i, VarMask sigma) const;
  /// Total Betti number beta_i = sum over σ.
  std::size_t total(int i) const;
  /// Projective dimension of T/I.
  int projective_dimension_of_quotient() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  ContextPtr ctx_;
  Entries entries_;
};

BettiTable graded_betti(const MonomialIdeal& i, const FieldSpec& f, unsigned jobs = 1);

/// depth T/I by Auslander–Buchsbaum on the Hochster Betti table. Non-squarefree
/// input is polarized first and the added variables subtracted.
int depth(const MonomialIdeal& i, const FieldSpec& f, unsigned jobs = 1);
/// depth of a finite direct sum of quotients: the minimum.
int depth_of_sum(const std::vector<MonomialIdeal>& ideals, const FieldSpec& f, unsigned jobs = 1);

/// depth k[Δ] read off local cohomology: the least i with
/// H̃_{i-|F|-1}(lk F) ≠ 0 for some face F. Independent of the Betti route.
int depth_from_links(const SimplicialComplex& c, const FieldSpec& f);

/// Reisner's criterion: H̃_i(lk σ) = 0 for i < dim lk σ, every face σ.
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& f);

nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

}  // namespace commalg
