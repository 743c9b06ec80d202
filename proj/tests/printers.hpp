#pragma once

#include <ostream>

#include "commalg/monomial_ideal.hpp"

namespace commalg {

// Readable gtest failure messages.
inline void PrintTo(const MonomialIdeal& i, std::ostream* os) { *os << i.to_string(); }
inline void PrintTo(const Monomial& m, std::ostream* os) {
  *os << "x^[";
  for (std::size_t v = 0; v < m.size(); ++v) *os << (v ? "," : "") << m[v];
  *os << "]";
}

}  // namespace commalg
