#pragma once

#include <functional>
#include <vector>

#include "closure/semigroup.hpp"

namespace closure {

// Monomial ideal of the semigroup ring k[[t^S]], identified with its exponent
// set: a subset E of S with E + S contained in E.  Any nonzero such set is
// eventually full, so we keep a bitmap over [0, threshold) plus the promise
// that every exponent >= threshold is a member.
//
// Invariant for nonzero ideals: threshold >= min_element + conductor_exponent,
// and every b in [min_element + conductor_exponent, threshold) is a member.
class SemigroupIdeal {
 public:
  // Empty generator list gives the zero ideal; exponent 0 gives the unit ideal.
  static SemigroupIdeal from_generators(SemigroupPtr ring, const std::vector<Elt>& gens);
  static SemigroupIdeal zero(SemigroupPtr ring);
  static SemigroupIdeal unit(SemigroupPtr ring);

  const SemigroupPtr& ring() const { return ring_; }
  bool is_zero() const { return zero_; }
  bool is_unit() const { return !zero_ && min_element_ == 0; }
  // Nonzero proper ideals are exactly the m-primary ones in dimension one.
  bool is_m_primary() const { return !zero_ && min_element_ > 0; }

  Elt min_element() const;            // throws ZeroIdeal
  Elt threshold() const { return threshold_; }
  bool contains(Elt b) const;

  // Unique minimal generating set (the <=_S antichain of the member set).
  std::vector<Elt> minimal_generators() const;  // throws ZeroIdeal

  bool operator==(const SemigroupIdeal& o) const;
  bool operator!=(const SemigroupIdeal& o) const { return !(*this == o); }

  // Build an ideal from a membership predicate (total on [0, inf)).  The
  // bitmap is laid out over [0, max(stated_threshold, min + conductor)).
  static SemigroupIdeal from_predicate(SemigroupPtr ring, Elt stated_threshold,
                                       const std::function<bool(Elt)>& pred);

 private:
  SemigroupIdeal() = default;

  SemigroupPtr ring_;
  std::vector<bool> member_;  // over [0, threshold_)
  Elt threshold_ = 0;
  Elt min_element_ = 0;
  bool zero_ = true;
};

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal intersect(const SemigroupIdeal& a, const SemigroupIdeal& b);

// (a : b) = { r in S : r + b in a }.  Computed against the minimal generators
// of b; threshold max(conductor, threshold(a) - min_element(b)).
SemigroupIdeal colon(const SemigroupIdeal& a, const SemigroupIdeal& b);

// Ideal generated by q*g over the minimal generators g (bracket power I^[q]).
SemigroupIdeal frobenius_power(const SemigroupIdeal& a, Elt q);

// In dimension one both closures agree with the valuation cut
// { b in S : b >= min_element }.  The unit ideal is returned unchanged.
SemigroupIdeal integral_closure(const SemigroupIdeal& a);
SemigroupIdeal tight_closure(const SemigroupIdeal& a);

// Conductor ideal { b in S : b >= conductor_exponent }: the test ideal of k[[t^S]].
SemigroupIdeal test_ideal(const SemigroupPtr& ring);

// Maximal ideal (all positive elements of S).
SemigroupIdeal maximal_ideal(const SemigroupPtr& ring);

// (T*I : T).  The closure operation I -> (TI : T) for a fixed nonzero T.
SemigroupIdeal t_basically_full_closure(const SemigroupIdeal& i, const SemigroupIdeal& t);

// (mI : m) == I ?
bool is_basically_full(const SemigroupIdeal& i);            // throws NotMPrimary
// (TI : T) == I^* ?
bool is_star_t_basically_full(const SemigroupIdeal& i, const SemigroupIdeal& t);
// (mI : m) == I^* ?
bool is_star_basically_full(const SemigroupIdeal& i);

}  // namespace closure
