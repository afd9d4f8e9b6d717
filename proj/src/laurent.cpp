#include "closure/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace closure {

namespace {

std::uint32_t mod_reduce(long p, long long c) {
  long long r = c % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(long p, std::uint32_t c) {
  // p is prime, c nonzero: c^(p-2).
  std::uint64_t base = c % static_cast<std::uint64_t>(p), acc = 1;
  long e = p - 2;
  while (e > 0) {
    if (e & 1) acc = acc * base % static_cast<std::uint64_t>(p);
    base = base * base % static_cast<std::uint64_t>(p);
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

LaurentPoly LaurentPoly::zero(long p) {
  LaurentPoly out;
  out.p_ = p;
  return out;
}

LaurentPoly LaurentPoly::constant(long p, long c) { return monomial(p, c, {0, 0, 0}); }

LaurentPoly LaurentPoly::monomial(long p, long c, Exponents e) {
  LaurentPoly out;
  out.p_ = p;
  const std::uint32_t r = mod_reduce(p, c);
  if (r != 0) out.terms_.push_back({e, r});
  return out;
}

LaurentPoly LaurentPoly::variable(long p, int index, int power) {
  Exponents e{0, 0, 0};
  e[static_cast<size_t>(index)] = power;
  return monomial(p, 1, e);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].second == 1 &&
         terms_[0].first == Exponents{0, 0, 0};
}

long LaurentPoly::resolve_char(const LaurentPoly& o) const {
  if (p_ == 0) return o.p_;
  if (o.p_ == 0 || o.p_ == p_) return p_;
  throw CharacteristicMismatch();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_)
    t.second = static_cast<std::uint32_t>(p_ - t.second);
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  const long p = resolve_char(o);
  LaurentPoly out;
  out.p_ = p;
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      const std::uint32_t c = (a->second + b->second) % static_cast<std::uint32_t>(p);
      if (c != 0) out.terms_.push_back({a->first, c});
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  const long p = resolve_char(o);
  if (is_zero() || o.is_zero()) return zero(p);
  if (is_one()) return o;
  if (o.is_one()) return *this;
  std::map<Exponents, std::uint64_t> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      const Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      acc[e] += static_cast<std::uint64_t>(ca) * cb;
    }
  }
  LaurentPoly out;
  out.p_ = p;
  for (const auto& [e, c] : acc) {
    const auto r = static_cast<std::uint32_t>(c % static_cast<std::uint64_t>(p));
    if (r != 0) out.terms_.push_back({e, r});
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned long long n) const {
  LaurentPoly base = *this, acc = constant(p_ == 0 ? 2 : p_, 1);
  acc.p_ = p_;
  if (n == 0) return acc;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw Error("monomial_inverse: not a monomial");
  const auto& [e, c] = terms_[0];
  return monomial(p_, mod_inverse(p_, c), {-e[0], -e[1], -e[2]});
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  const long p = resolve_char(d);
  if (d.is_zero()) throw InternalError("division by zero polynomial");
  if (is_zero()) return zero(p);
  if (d.is_one()) return *this;
  if (d.is_monomial()) return *this * d.monomial_inverse();

  // Cancel leading terms (lex-max); exact quotients terminate in
  // term_count(quotient) steps.
  LaurentPoly r = *this, q = zero(p);
  const auto& [de, dc] = d.terms_.back();
  const std::uint32_t dinv = mod_inverse(p, dc);
  for (long guard = 0; !r.is_zero(); ++guard) {
    if (guard > 200000) throw InternalError("inexact polynomial division");
    const auto& [re, rc] = r.terms_.back();
    const LaurentPoly t = monomial(
        p, static_cast<long>(static_cast<std::uint64_t>(rc) * dinv % static_cast<std::uint64_t>(p)),
        {re[0] - de[0], re[1] - de[1], re[2] - de[2]});
    q += t;
    r -= t * d;
  }
  return q;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  if (p_ != o.p_) return false;
  return terms_ == o.terms_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  return terms_ < o.terms_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  static const char* names[3] = {"u", "v", "w"};
  std::ostringstream out;
  bool first = true;
  // Leading (lex-max) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    long balanced = static_cast<long>(c);
    if (2 * balanced > p_) balanced -= p_;
    if (first) {
      if (balanced < 0) out << "-";
      first = false;
    } else {
      out << (balanced < 0 ? " - " : " + ");
    }
    const long mag = balanced < 0 ? -balanced : balanced;
    std::vector<std::string> parts;
    if (mag != 1 || (e[0] == 0 && e[1] == 0 && e[2] == 0))
      parts.push_back(std::to_string(mag));
    for (int i = 0; i < 3; ++i) {
      if (e[static_cast<size_t>(i)] == 0) continue;
      std::string part = names[i];
      if (e[static_cast<size_t>(i)] != 1)
        part += "^" + std::to_string(e[static_cast<size_t>(i)]);
      parts.push_back(part);
    }
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out << "*";
      out << parts[i];
    }
  }
  return out.str();
}

LaurentFraction LaurentFraction::of(LaurentPoly n) {
  LaurentFraction f;
  f.den = LaurentPoly::constant(n.characteristic() == 0 ? 2 : n.characteristic(), 1);
  f.num = std::move(n);
  return f;
}

LaurentFraction LaurentFraction::of(LaurentPoly n, LaurentPoly d) {
  if (d.is_zero()) throw InternalError("fraction with zero denominator");
  LaurentFraction f;
  f.num = std::move(n);
  f.den = std::move(d);
  return f;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
  return of(num * o.den + o.num * den, den * o.den);
}
LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const {
  return of(num * o.den - o.num * den, den * o.den);
}
LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
  return of(num * o.num, den * o.den);
}
LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
  if (o.num.is_zero()) throw InternalError("fraction division by zero");
  return of(num * o.den, den * o.num);
}
bool LaurentFraction::operator==(const LaurentFraction& o) const {
  return num * o.den == o.num * den;
}

PolyVec Echelon::reduce(const PolyVec& v) const {
  if (v.size() != dim_) throw DimensionMismatch();
  PolyVec r = v;
  std::vector<size_t> support;
  for (size_t j = 0; j < dim_; ++j)
    if (!r[j].is_zero()) support.push_back(j);
  LaurentPoly prev = LaurentPoly::constant(p_, 1);
  for (const auto& row : rows_) {
    const LaurentPoly& piv = row.v[row.pivot_col];
    const LaurentPoly coef = r[row.pivot_col];
    const bool piv_one = piv.is_one(), prev_one = prev.is_one();
    if (coef.is_zero()) {
      // The round only rescales; entries off the support are zero and stay so.
      if (!piv_one || !prev_one)
        for (size_t j : support) {
          LaurentPoly t = piv_one ? r[j] : r[j] * piv;
          r[j] = prev_one ? std::move(t) : t.divide_exact(prev);
        }
      prev = piv;
      continue;
    }
    std::vector<size_t> merged;
    merged.reserve(support.size() + row.support.size());
    std::set_union(support.begin(), support.end(), row.support.begin(), row.support.end(),
                   std::back_inserter(merged));
    for (size_t j : merged) {
      LaurentPoly t = piv_one ? r[j] : r[j] * piv;
      if (!row.v[j].is_zero()) t -= row.v[j] * coef;
      r[j] = prev_one ? std::move(t) : t.divide_exact(prev);
    }
    support.clear();
    for (size_t j : merged)
      if (!r[j].is_zero()) support.push_back(j);
    prev = piv;
  }
  return r;
}

bool Echelon::contains(const PolyVec& v) const {
  const PolyVec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const LaurentPoly& x) { return x.is_zero(); });
}

bool Echelon::insert(const PolyVec& v) {
  PolyVec r = reduce(v);
  size_t piv = dim_;
  std::vector<size_t> support;
  for (size_t j = 0; j < dim_; ++j) {
    if (!r[j].is_zero()) {
      if (piv == dim_) piv = j;
      support.push_back(j);
    }
  }
  if (piv == dim_) return false;
  rows_.push_back({std::move(r), piv, std::move(support)});
  return true;
}

size_t rank(const PolyMatrix& rows, size_t ncols, long p) {
  Echelon e(p, ncols);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.full()) break;
  }
  return e.rank();
}

SpanSolveResult solve_in_span(const std::vector<PolyVec>& vectors, const PolyVec& target,
                              long p, bool want_certificate) {
  const size_t dim = target.size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw DimensionMismatch();
  for (const auto& v : vectors)
    for (const auto& x : v)
      if (x.characteristic() != 0 && x.characteristic() != p)
        throw CharacteristicMismatch();

  const size_t n = vectors.size();
  // Coordinate rows of [A | target], A's columns being the given vectors.
  Echelon ech(p, n + 1);
  for (size_t r = 0; r < dim; ++r) {
    PolyVec row(n + 1);
    for (size_t c = 0; c < n; ++c) row[c] = vectors[c][r];
    row[n] = target[r];
    ech.insert(row);
    if (ech.full()) break;
  }

  SpanSolveResult result;
  result.in_span = true;
  for (const auto& row : ech.rows())
    if (row.pivot_col == n) result.in_span = false;

  if (result.in_span && want_certificate) {
    std::vector<LaurentFraction> x(n, LaurentFraction::of(LaurentPoly::zero(p)));
    const auto& rows = ech.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      const size_t c = it->pivot_col;
      LaurentFraction rhs = LaurentFraction::of(it->v[n]);
      for (size_t j = 0; j < n; ++j) {
        if (j == c || it->v[j].is_zero() || x[j].is_zero()) continue;
        rhs = rhs - LaurentFraction::of(it->v[j]) * x[j];
      }
      x[c] = rhs / LaurentFraction::of(it->v[c]);
    }
    result.certificate = std::move(x);
  }
  return result;
}

namespace {

// Divide out the monomial content (componentwise-min exponents) and scale the
// lex-max term of the first nonzero entry to coefficient 1.
void normalize_vector(PolyVec& v, long p) {
  bool any = false;
  LaurentPoly::Exponents mn{0, 0, 0};
  for (const auto& x : v) {
    for (const auto& [e, c] : x.terms()) {
      (void)c;
      if (!any) {
        mn = e;
        any = true;
      } else {
        for (int i = 0; i < 3; ++i)
          mn[static_cast<size_t>(i)] = std::min(mn[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
      }
    }
  }
  if (!any) return;
  LaurentPoly scale = LaurentPoly::monomial(p, 1, {-mn[0], -mn[1], -mn[2]});
  for (auto& x : v) x = x * scale;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    const std::uint32_t lead = x.terms().back().second;
    if (lead != 1) {
      const LaurentPoly fix = LaurentPoly::constant(p, mod_inverse(p, lead));
      for (auto& y : v) y = y * fix;
    }
    break;
  }
}

}  // namespace

PolyMatrix solution_space(const PolyMatrix& rows, size_t ncols, long p) {
  Echelon ech(p, ncols);
  for (const auto& r : rows) {
    ech.insert(r);
    if (ech.full()) break;
  }

  const auto& er = ech.rows();
  const size_t k = er.size();
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : er) is_pivot[row.pivot_col] = true;
  // Pivot i of the echelon is the i-by-i minor of the pivot block, so the
  // last one is its determinant.
  const LaurentPoly det = k ? ech.pivot(k - 1) : LaurentPoly::constant(p, 1);

  PolyMatrix kernel;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    // Solve E * w = 0 with w[f] = det, other free coordinates 0.  Cramer makes
    // every pivot coordinate a bordered minor, so each back-substitution step
    //   w[c_i] = -( E_i[f] * det + sum_{j>i} E_i[c_j] * w[c_j] ) / pivot_i
    // divides exactly and the coordinates never outgrow minor size.
    PolyVec w(ncols, LaurentPoly::zero(p));
    w[f] = det;
    for (size_t i = k; i-- > 0;) {
      LaurentPoly acc = er[i].v[f] * det;
      for (size_t j = i + 1; j < k; ++j) {
        const LaurentPoly& wj = w[er[j].pivot_col];
        if (!er[i].v[er[j].pivot_col].is_zero() && !wj.is_zero())
          acc += er[i].v[er[j].pivot_col] * wj;
      }
      if (!acc.is_zero()) w[er[i].pivot_col] = (-acc).divide_exact(ech.pivot(i));
    }
    normalize_vector(w, p);
    kernel.push_back(std::move(w));
  }
  return kernel;
}

}  // namespace closure
