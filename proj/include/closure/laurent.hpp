#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "closure/errors.hpp"

namespace closure {

// Laurent polynomial in u, v, w over F_p: finitely many integer exponent
// triples mapped to nonzero residues.  Terms are kept sorted by exponent
// (lexicographic), coefficients in [1, p).
class LaurentPoly {
 public:
  using Exponents = std::array<int, 3>;
  using Term = std::pair<Exponents, std::uint32_t>;

  LaurentPoly() = default;  // characteristic-agnostic zero

  static LaurentPoly zero(long p);
  static LaurentPoly constant(long p, long c);
  static LaurentPoly monomial(long p, long c, Exponents e);
  static LaurentPoly variable(long p, int index, int power = 1);  // 0=u,1=v,2=w

  long characteristic() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned long long n) const;

  // Inverse of a single-term element (all monomials are units).
  LaurentPoly monomial_inverse() const;

  // Exact quotient *this / d.  Throws InternalError when the division does
  // not terminate exactly (callers only divide when exactness is guaranteed).
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;  // arbitrary total order

  // Residues above p/2 print balanced (e.g. "-3*u^2*v*w^-3" mod 7).
  std::string to_string() const;

 private:
  long resolve_char(const LaurentPoly& o) const;
  static LaurentPoly from_map(long p, const std::vector<Term>& sorted_terms);

  long p_ = 0;
  std::vector<Term> terms_;
};

// Unreduced fraction of Laurent polynomials; equality by cross-multiplication.
struct LaurentFraction {
  LaurentPoly num;
  LaurentPoly den;  // nonzero

  static LaurentFraction of(LaurentPoly n);
  static LaurentFraction of(LaurentPoly n, LaurentPoly d);

  bool is_zero() const { return num.is_zero(); }
  LaurentFraction operator+(const LaurentFraction& o) const;
  LaurentFraction operator-(const LaurentFraction& o) const;
  LaurentFraction operator*(const LaurentFraction& o) const;
  LaurentFraction operator/(const LaurentFraction& o) const;
  bool operator==(const LaurentFraction& o) const;
  bool operator!=(const LaurentFraction& o) const { return !(*this == o); }
};

using PolyVec = std::vector<LaurentPoly>;
using PolyMatrix = std::vector<PolyVec>;

// Incremental fraction-free (Bareiss) row echelon over the fraction field of
// the Laurent ring.  Rows are reduced in insertion order; every division is by
// the previous pivot and stays exact.  Pivots are the first nonzero entry of
// the reduced row, so processing rows in order realizes row-major pivoting.
class Echelon {
 public:
  struct Row {
    PolyVec v;
    size_t pivot_col;
    std::vector<size_t> support;  // ascending indices of the nonzero entries
  };

  Echelon(long p, size_t dim) : p_(p), dim_(dim) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }
  const std::vector<Row>& rows() const { return rows_; }
  const LaurentPoly& pivot(size_t i) const { return rows_[i].v[rows_[i].pivot_col]; }

  // Uniform Bareiss reduction of v against all pivot rows.  The result is the
  // projection away from the row span, scaled by the last pivot (one common
  // nonzero factor for every input, which keeps reductions linear in v).
  PolyVec reduce(const PolyVec& v) const;

  bool contains(const PolyVec& v) const;

  // Reduce and append when independent; returns true when the rank grew.
  bool insert(const PolyVec& v);

 private:
  long p_;
  size_t dim_;
  std::vector<Row> rows_;
};

size_t rank(const PolyMatrix& rows, size_t ncols, long p);

struct SpanSolveResult {
  bool in_span = false;
  // Coefficients x_i with sum x_i * vectors[i] = target; filled only when
  // requested and solvable.
  std::vector<LaurentFraction> certificate;
};

// Does target lie in the span of the given vectors over the fraction field?
// Decided by fraction-free elimination of the stacked coordinate rows.
SpanSolveResult solve_in_span(const std::vector<PolyVec>& vectors, const PolyVec& target,
                              long p, bool want_certificate = false);

// Basis of { v : rows * v = 0 } over the fraction field, denominators cleared
// (entries are polynomials; each vector is normalized by its monomial content).
PolyMatrix solution_space(const PolyMatrix& rows, size_t ncols, long p);

}  // namespace closure
