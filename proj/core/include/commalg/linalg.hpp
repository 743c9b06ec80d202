#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "commalg/field.hpp"

namespace commalg {

/// Sparse vector keyed by an ordered basis label. Zero entries are never stored.
template <class Field, class Key>
using SparseVec = std::map<Key, typename Field::Elem>;

/// v += c * w, dropping entries that cancel.
template <class Field, class Key>
void axpy(const Field& k, SparseVec<Field, Key>& v, const typename Field::Elem& c,
          const SparseVec<Field, Key>& w) {
  if (k.is_zero(c)) return;
  for (const auto& [key, val] : w) {
    auto it = v.find(key);
    if (it == v.end()) {
      v.emplace(key, k.mul(c, val));
    } else {
      it->second = k.add(it->second, k.mul(c, val));
      if (k.is_zero(it->second)) v.erase(it);
    }
  }
}

template <class Field, class Key>
SparseVec<Field, Key> scaled(const Field& k, const SparseVec<Field, Key>& v,
                             const typename Field::Elem& c) {
  SparseVec<Field, Key> out;
  if (k.is_zero(c)) return out;
  for (const auto& [key, val] : v) out.emplace(key, k.mul(c, val));
  return out;
}

/// Incremental row-echelon form over an exact field. Each stored row has a
/// distinct pivot (its smallest key) with coefficient one; `reduce` returns
/// the unique normal form of a vector modulo the span, which has no entry on
/// any pivot key.
template <class Field, class Key>
class Echelon {
 public:
  using Elem = typename Field::Elem;
  using Vec = SparseVec<Field, Key>;

  explicit Echelon(Field field = Field{}) : field_(std::move(field)) {}

  const Field& field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<Key, Vec>& rows() const { return rows_; }

  Vec reduce(Vec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Elem c = field_.neg(it->second);
      axpy(field_, v, c, row->second);
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    if (r.empty()) return false;
    const Key pivot = r.begin()->first;
    const Elem inv = field_.div(field_.one(), r.begin()->second);
    rows_.emplace(pivot, scaled(field_, r, inv));
    return true;
  }

  /// True iff every row of `other` lies in this span.
  bool contains_span(const Echelon& other) const {
    for (const auto& [pivot, row] : other.rows_) {
      if (!contains(row)) return false;
    }
    return true;
  }

  bool same_span(const Echelon& other) const {
    return rank() == other.rank() && contains_span(other);
  }

 private:
  Field field_;
  std::map<Key, Vec> rows_;
};

/// Basis of the kernel of the linear map sending the i-th standard basis
/// vector to images[i]. Kernel vectors are returned in coordinates of that
/// standard basis.
template <class Field, class Key>
std::vector<SparseVec<Field, std::size_t>> kernel_basis(
    const Field& k, const std::vector<SparseVec<Field, Key>>& images) {
  using Elem = typename Field::Elem;
  struct Row {
    SparseVec<Field, Key> image;
    SparseVec<Field, std::size_t> combo;
  };
  std::map<Key, Row> rows;
  std::vector<SparseVec<Field, std::size_t>> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec<Field, Key> v = images[i];
    SparseVec<Field, std::size_t> combo;
    combo.emplace(i, k.one());
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows.find(it->first);
      if (row == rows.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Elem c = k.neg(it->second);
      axpy(k, v, c, row->second.image);
      axpy(k, combo, c, row->second.combo);
      it = v.upper_bound(key);
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      const Key pivot = v.begin()->first;
      const Elem inv = k.div(k.one(), v.begin()->second);
      rows.emplace(pivot, Row{scaled(k, v, inv), scaled(k, combo, inv)});
    }
  }
  return kernel;
}

/// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit arithmetic and restarts with GMP integers on overflow.
std::size_t rank_over_rationals(const IntMatrix& m);

/// Rank over F_p.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Rank over the field described by `spec`.
std::size_t rank_over(const IntMatrix& m, const FieldSpec& spec);

}  // namespace commalg
