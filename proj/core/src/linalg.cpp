#include "commalg/linalg.hpp"

#include <optional>

namespace commalg {
namespace {

// Bareiss elimination; returns nullopt if any intermediate overflows int64.
std::optional<std::size_t> bareiss_rank_int64(IntMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::int64_t f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        std::int64_t x, y, d;
        if (__builtin_mul_overflow(a[r][c], p, &x)) return std::nullopt;
        if (__builtin_mul_overflow(a[rank][c], f, &y)) return std::nullopt;
        if (__builtin_sub_overflow(x, y, &d)) return std::nullopt;
        a[r][c] = d / prev;
      }
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t bareiss_rank_mpz(const IntMatrix& in) {
  const std::size_t rows = in.size();
  if (rows == 0) return 0;
  const std::size_t cols = in[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = static_cast<long>(in[r][c]);
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const mpz_class p = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class f = a[r][col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        mpz_class t = a[r][c] * p - a[rank][c] * f;
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_over_rationals(const IntMatrix& m) {
  if (auto r = bareiss_rank_int64(m)) return *r;
  return bareiss_rank_mpz(m);
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  PrimeField k(p);
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = k.from_int(static_cast<long>(m[r][c]));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = k.inverse(a[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t f = k.mul(a[r][col], inv);
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = k.sub(a[r][c], k.mul(f, a[rank][c]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_over(const IntMatrix& m, const FieldSpec& spec) {
  return spec.is_rational() ? rank_over_rationals(m) : rank_mod_p(m, spec.p);
}

}  // namespace commalg
