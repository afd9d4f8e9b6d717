#pragma once

// Reference linear algebra over the fraction field of the Laurent ring.
// Dense textbook elimination: cross-multiply (r' = piv*r - coef*row) and take
// the exact quotient by the previous pivot, so every intermediate entry is a
// minor of the input matrix.  The sweep recomputes whole rows in place and
// shares no structure with the incremental production echelon.

#include <cstddef>
#include <utility>
#include <vector>

#include "closure/laurent.hpp"

namespace closure::oracle {

inline std::size_t fraction_rank(PolyMatrix m, std::size_t ncols) {
  std::size_t rank = 0;
  LaurentPoly prev;  // divisor after the first round; minors make it exact
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const LaurentPoly coef = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) {
        if (c == col) continue;
        LaurentPoly t = m[rank][col] * m[r][c] - coef * m[rank][c];
        m[r][c] = prev.is_zero() ? std::move(t) : t.divide_exact(prev);
      }
      m[r][col] = LaurentPoly{};
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// target in span(vectors)?  Ranks with and without the target row agree.
inline bool fraction_in_span(const std::vector<PolyVec>& vectors, const PolyVec& target) {
  PolyMatrix rows = vectors;
  std::size_t base = fraction_rank(rows, target.size());
  rows.push_back(target);
  return fraction_rank(rows, target.size()) == base;
}

}  // namespace closure::oracle
