#pragma once

#include <string>
#include <vector>

#include "commalg/monomial.hpp"
#include "commalg/polynomial.hpp"

namespace commalg {

/// Monomial ideal of k[x_1..x_n], stored by its unique minimal generating
/// set in degrevlex order. The zero ideal has no generators; the unit ideal
/// is generated by 1.
class MonomialIdeal {
 public:
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> gens);

  static MonomialIdeal zero(ContextPtr ctx) { return MonomialIdeal(std::move(ctx), {}); }
  static MonomialIdeal unit(ContextPtr ctx);
  /// The prime generated by the variables in `mask`.
  static MonomialIdeal of_variables(ContextPtr ctx, VarMask mask);
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  std::size_t num_vars() const { return ctx_->size(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  /// Every variable has a pure power among the generators (dim T/I = 0).
  bool is_artinian() const;
  std::uint32_t max_degree() const;

  bool contains(const Monomial& m) const;
  /// A polynomial lies in a monomial ideal iff each of its terms does.
  bool contains(const Polynomial& f) const;
  bool contains(const MonomialIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

/// Prime generated by a subset of the variables.
class MonomialPrime {
 public:
  MonomialPrime(ContextPtr ctx, VarMask support);

  const ContextPtr& context() const { return ctx_; }
  VarMask support() const { return support_; }
  int height() const { return popcount(support_); }
  bool contains(const Monomial& m) const { return (m.support() & support_) != 0; }
  MonomialIdeal ideal() const { return MonomialIdeal::of_variables(ctx_, support_); }
  std::string to_string() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support_ == b.support_ && same_context(a.ctx_, b.ctx_);
  }

 private:
  ContextPtr ctx_;
  VarMask support_;
};

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, unsigned k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(const std::vector<MonomialIdeal>& ideals);
/// I : (m).
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m);
/// I : J = intersection over generators g of J of I : g.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);
MonomialIdeal radical(const MonomialIdeal& i);
/// Product of the ideal with a single monomial.
MonomialIdeal multiply(const MonomialIdeal& i, const Monomial& m);

/// Minimal primes, sorted by support (as an integer bitmask).
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& i);

/// Irredundant decomposition into ideals generated by pure powers.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i);

struct PrimaryComponent {
  MonomialPrime prime;
  MonomialIdeal component;
};

/// Irreducible components grouped and intersected by radical.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& i);

struct HeightDim {
  int height;
  int dim;
};

/// Height of I in T and Krull dimension of T/I.
HeightDim height_and_dim(const MonomialIdeal& i);

/// Height of (J + a)/a in A = T/a: the minimum over minimal primes P of J + a
/// of |P| - min{|Q| : Q a minimal prime of a contained in P}.
int height_in_quotient(const MonomialIdeal& j, const MonomialIdeal& a);

/// Intersection of the primary components belonging to minimal primes.
/// Returns the unit ideal unchanged.
MonomialIdeal unmixed_part(const MonomialIdeal& i);

struct Polarization {
  MonomialIdeal ideal;
  std::size_t added_variables;
};

/// Squarefree polarization x_i^a -> x_i x_i_1 ... x_i_{a-1} in an enlarged context.
Polarization polarize(const MonomialIdeal& i);

/// Standard monomials of an Artinian monomial quotient T/I.
std::vector<Monomial> standard_monomials(const MonomialIdeal& i);

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace commalg
