#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "closure/laurent.hpp"

namespace closure {

enum class Var : int { x = 0, y = 1, z = 2 };

// F_p(u,v,w)[[x,y,z]] / (u x^p + v y^p + w z^p), graded by total degree in
// x, y, z.  Normal forms rewrite the chosen variable's p-th powers into the
// other two, so coefficients stay in the Laurent subring F_p[u^-,v^-,w^-].
struct HyperRing {
  long p = 3;
  Var eliminated = Var::x;
  bool operator==(const HyperRing&) const = default;
};

struct Mon3 {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z
  int degree() const { return a + b + c; }
  auto operator<=>(const Mon3&) const = default;  // lex
};

// Finite sum of Laurent coefficients times monomials, kept in normal form:
// the eliminated variable's exponent is below p in every term.
class HyperElement {
 public:
  using Term = std::pair<Mon3, LaurentPoly>;

  static HyperElement zero(HyperRing r);
  static HyperElement monomial(HyperRing r, Mon3 m);  // coefficient 1
  static HyperElement monomial(HyperRing r, const LaurentPoly& coeff, Mon3 m);
  static HyperElement from_terms(HyperRing r, const std::vector<Term>& raw);

  const HyperRing& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_homogeneous() const;
  int degree() const;  // -1 for the zero element

  HyperElement operator+(const HyperElement& o) const;
  HyperElement operator-() const;
  HyperElement operator-(const HyperElement& o) const;
  HyperElement operator*(const HyperElement& o) const;
  HyperElement scale(const LaurentPoly& c) const;
  HyperElement pow(unsigned long long n) const;

  bool operator==(const HyperElement& o) const;
  bool operator!=(const HyperElement& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  HyperRing ring_;
  std::vector<Term> terms_;  // sorted by monomial
};

// Normal form of (eliminated variable)^(k*p): the k-th power of the rewrite
// rule, e.g. with z eliminated
//   z^(3p) = -(u^3/w^3) x^(3p) - 3(u^2 v/w^3) x^(2p) y^p - ... .
HyperElement normal_form_power(HyperRing r, long k);

// Monomials of total degree d in normal form (eliminated exponent < p), lex.
std::vector<Mon3> component_basis(const HyperRing& r, int d);

PolyVec coords(const HyperElement& e, const std::vector<Mon3>& basis);
HyperElement element_from_coords(HyperRing r, const std::vector<Mon3>& basis,
                                 const PolyVec& v);

// All monomials of degree l, normal-formed: generators of m^l.
std::vector<HyperElement> m_power_gens(HyperRing r, int l);

// Spanning vectors (coordinates in component_basis(d)) of the degree-d piece
// of the ideal generated by gens.
PolyMatrix ideal_component(const std::vector<HyperElement>& gens, int d);

// Same span, echelonized; generation stops once the component is full.
Echelon component_echelon(const std::vector<HyperElement>& gens, int d);

// Homogeneous ideal membership, decided inside one graded component.
bool is_member(const HyperElement& e, const std::vector<HyperElement>& gens);

// Basis (coordinate vectors) of { v in R_d : v*g in (gensI) for all g in gensJ }.
PolyMatrix colon_component(const std::vector<HyperElement>& gensI,
                           const std::vector<HyperElement>& gensJ, int d);

// Componentwise span equality for all degrees d <= max_degree.
bool ideals_equal_up_to(const std::vector<HyperElement>& a,
                        const std::vector<HyperElement>& b, int max_degree);

// Does the degree-d component of (gensI : gensJ) equal that of (rhs)?
bool colon_equals_ideal_at(const std::vector<HyperElement>& gensI,
                           const std::vector<HyperElement>& gensJ,
                           const std::vector<HyperElement>& rhs, int d);

std::vector<HyperElement> frobenius_power_gens(const std::vector<HyperElement>& gens,
                                               long q);

// Smallest q = p^j with j <= e_max such that e^q lies in the ideal generated
// by the q-th powers of gens; nullopt when no such j exists.
std::optional<long> frobenius_closure_member(const HyperElement& e,
                                             const std::vector<HyperElement>& gens,
                                             int e_max);

// Is x^k y^r z^s in the tight closure of (y^t, z^t)?  Uses the p-th power
// expansion criterion over the regular subring in y, z; checks it against the
// closed form (k >= 2t-r-s-1) or (r >= t) or (s >= t).  Requires 0 <= k < p.
bool star_ytzt_member(long p, long k, long r, long s, long t);

// Exponentwise divisibility membership for monomial ideals of a regular
// two-variable power series ring (used for reduction endpoints).
bool monomial_member_2var(std::array<long, 2> target,
                          const std::vector<std::array<long, 2>>& gens);

struct SubCheck {
  std::string name;
  nlohmann::ordered_json parameters;
  bool verdict = false;
  nlohmann::ordered_json witness;  // null unless the check has data to show
};

struct VerifyReport {
  std::string suite;
  long p = 0;
  std::vector<long> t_values;
  long degree_bound = 0;
  std::vector<SubCheck> checks;
  bool all_passed() const;
};

nlohmann::ordered_json to_json(const VerifyReport& r);

// Degreewise verification that for each t in t_values the tight closure of
// (y^t, z^t) matches (y^t, z^t) + m^(2t-1) and (y^t, z^t) : m^(p-1), and that
// the colon chain (y^t, z^t) : m^l = (y^t, z^t) + m^(2t+p-2-l) holds for
// l = 1..2t-1, all inside degrees <= degree_bound.
VerifyReport verify_star_colon_identities(long p, const std::vector<long>& t_values,
                                          long degree_bound);

// The witness element r ( xy^2 for p >= 5, xy^3 for p = 3 ) multiplies the
// (p-1)-st power of the maximal ideal into m^(p-1) * I, yet fails the
// regular-ring endpoint of the tight-closure reduction.
VerifyReport verify_counterexample(long p);

// Frobenius-closure memberships after adjoining a degree-one element to
// (x^2, y^2, z), plus the degree-one non-membership checks.
VerifyReport verify_frobenius_closure_cases(long p);

}  // namespace closure
