#include "closure/ideal.hpp"

#include <algorithm>

namespace closure {

namespace {

void check_same_ring(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.ring() == b.ring()) return;
  if (a.ring() && b.ring() && *a.ring() == *b.ring()) return;
  throw RingMismatch();
}

}  // namespace

SemigroupIdeal SemigroupIdeal::from_predicate(SemigroupPtr ring, Elt stated_threshold,
                                              const std::function<bool(Elt)>& pred) {
  const Elt cond = ring->conductor_exponent();
  // The predicate describes a nonzero ideal, so a member exists at or below
  // any sound threshold; scan far enough to find the first one.
  Elt min = -1;
  for (Elt b = 0; b < stated_threshold + cond + 1; ++b) {
    if (pred(b)) {
      min = b;
      break;
    }
  }
  if (min < 0) throw InternalError("predicate ideal has no member in window");

  SemigroupIdeal out;
  out.ring_ = std::move(ring);
  out.zero_ = false;
  out.min_element_ = min;
  out.threshold_ = std::max(stated_threshold, min + cond);
  out.member_.assign(static_cast<size_t>(out.threshold_), false);
  for (Elt b = min; b < out.threshold_; ++b)
    out.member_[static_cast<size_t>(b)] = pred(b);
  return out;
}

SemigroupIdeal SemigroupIdeal::from_generators(SemigroupPtr ring,
                                               const std::vector<Elt>& gens) {
  if (gens.empty()) return zero(std::move(ring));
  for (Elt g : gens)
    if (!ring->contains(g)) throw GeneratorNotInRing(g);
  const Elt min = *std::min_element(gens.begin(), gens.end());
  const auto& s = *ring;
  auto pred = [&gens, &s](Elt b) {
    for (Elt g : gens)
      if (b >= g && s.contains(b - g)) return true;
    return false;
  };
  return from_predicate(std::move(ring), min + s.conductor_exponent(), pred);
}

SemigroupIdeal SemigroupIdeal::zero(SemigroupPtr ring) {
  SemigroupIdeal out;
  out.ring_ = std::move(ring);
  return out;
}

SemigroupIdeal SemigroupIdeal::unit(SemigroupPtr ring) {
  return from_generators(std::move(ring), {0});
}

Elt SemigroupIdeal::min_element() const {
  if (zero_) throw ZeroIdeal("min_element");
  return min_element_;
}

bool SemigroupIdeal::contains(Elt b) const {
  if (zero_ || b < 0) return false;
  if (b >= threshold_) return true;
  return member_[static_cast<size_t>(b)];
}

std::vector<Elt> SemigroupIdeal::minimal_generators() const {
  if (zero_) throw ZeroIdeal("minimal_generators");
  // Any member >= min + conductor is min + (element of S), so all minimal
  // generators live in [min, min + conductor).  When the conductor exponent
  // is 0 (the full semigroup) the ideal is the principal cut at min.
  const Elt hi = min_element_ + std::max<Elt>(ring_->conductor_exponent(), 1);
  std::vector<Elt> gens;
  for (Elt b = min_element_; b < hi; ++b) {
    if (!contains(b)) continue;
    bool redundant = false;
    for (Elt a = min_element_; a < b && !redundant; ++a)
      if (contains(a) && ring_->contains(b - a)) redundant = true;
    if (!redundant) gens.push_back(b);
  }
  return gens;
}

bool SemigroupIdeal::operator==(const SemigroupIdeal& o) const {
  check_same_ring(*this, o);
  if (zero_ || o.zero_) return zero_ == o.zero_;
  if (min_element_ != o.min_element_) return false;
  const Elt hi = std::max(threshold_, o.threshold_);
  for (Elt b = min_element_; b < hi; ++b)
    if (contains(b) != o.contains(b)) return false;
  return true;
}

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  check_same_ring(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return SemigroupIdeal::from_predicate(
      a.ring(), std::max(a.threshold(), b.threshold()),
      [&](Elt x) { return a.contains(x) || b.contains(x); });
}

SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return SemigroupIdeal::zero(a.ring());
  // Minkowski sum of the member sets = ideal generated by pairwise sums of
  // minimal generators.
  std::vector<Elt> gens;
  for (Elt x : a.minimal_generators())
    for (Elt y : b.minimal_generators()) gens.push_back(x + y);
  return SemigroupIdeal::from_generators(a.ring(), gens);
}

SemigroupIdeal intersect(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  check_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return SemigroupIdeal::zero(a.ring());
  return SemigroupIdeal::from_predicate(
      a.ring(), std::max(a.threshold(), b.threshold()),
      [&](Elt x) { return a.contains(x) && b.contains(x); });
}

SemigroupIdeal colon(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw ColonByZero();
  if (a.is_zero()) return SemigroupIdeal::zero(a.ring());
  const auto gens_b = b.minimal_generators();
  const auto& s = *a.ring();
  const Elt stated =
      std::max(s.conductor_exponent(), a.threshold() - b.min_element());
  return SemigroupIdeal::from_predicate(a.ring(), stated, [&](Elt x) {
    if (!s.contains(x)) return false;
    for (Elt g : gens_b)
      if (!a.contains(x + g)) return false;
    return true;
  });
}

SemigroupIdeal frobenius_power(const SemigroupIdeal& a, Elt q) {
  if (a.is_zero()) throw ZeroIdeal("frobenius_power");
  if (q < 1) throw Error("frobenius_power: q must be positive");
  std::vector<Elt> gens;
  for (Elt g : a.minimal_generators()) gens.push_back(q * g);
  return SemigroupIdeal::from_generators(a.ring(), gens);
}

SemigroupIdeal integral_closure(const SemigroupIdeal& a) {
  if (a.is_zero()) throw ZeroIdeal("integral_closure");
  if (a.is_unit()) return a;
  const auto& s = *a.ring();
  const Elt min = a.min_element();
  return SemigroupIdeal::from_predicate(
      a.ring(), min + s.conductor_exponent(),
      [&s, min](Elt x) { return x >= min && s.contains(x); });
}

SemigroupIdeal tight_closure(const SemigroupIdeal& a) {
  // One-dimensional ring: tight closure = integral closure (valuation cut).
  return integral_closure(a);
}

SemigroupIdeal test_ideal(const SemigroupPtr& ring) {
  const Elt cond = ring->conductor_exponent();
  if (cond == 0) return SemigroupIdeal::unit(ring);
  return SemigroupIdeal::from_predicate(ring, 2 * cond,
                                        [cond](Elt x) { return x >= cond; });
}

SemigroupIdeal maximal_ideal(const SemigroupPtr& ring) {
  const auto& s = *ring;
  return SemigroupIdeal::from_predicate(
      ring, s.multiplicity() + s.conductor_exponent(),
      [&s](Elt x) { return x > 0 && s.contains(x); });
}

SemigroupIdeal t_basically_full_closure(const SemigroupIdeal& i,
                                        const SemigroupIdeal& t) {
  if (t.is_zero()) throw ColonByZero();
  if (i.is_zero()) return i;
  return colon(product(t, i), t);
}

bool is_basically_full(const SemigroupIdeal& i) {
  if (!i.is_m_primary()) throw NotMPrimary();
  return t_basically_full_closure(i, maximal_ideal(i.ring())) == i;
}

bool is_star_t_basically_full(const SemigroupIdeal& i, const SemigroupIdeal& t) {
  if (!i.is_m_primary()) throw NotMPrimary();
  return t_basically_full_closure(i, t) == tight_closure(i);
}

bool is_star_basically_full(const SemigroupIdeal& i) {
  if (!i.is_m_primary()) throw NotMPrimary();
  return t_basically_full_closure(i, maximal_ideal(i.ring())) == tight_closure(i);
}

}  // namespace closure
