#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "closure/errors.hpp"

namespace closure {

using Elt = long long;

// Numerical semigroup <g1,...,gk>: the set of non-negative integer combinations
// of the generators.  gcd(g1,...,gk) must be 1, so the complement in N is finite.
//
// Membership below the conductor exponent is held in a sieve bitmap; everything
// at or above the conductor is a member, so queries never need a larger table.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<Elt> generators);

  bool contains(Elt n) const;

  // All non-members (finitely many, all below the conductor exponent).
  std::vector<Elt> gaps() const;

  // Largest non-member, -1 when the semigroup is all of N.
  Elt frobenius_number() const { return conductor_; }

  // Smallest c with [c, infinity) contained in the semigroup.
  Elt conductor_exponent() const { return conductor_ + 1; }

  // Smallest positive member.
  Elt multiplicity() const { return multiplicity_; }

  const std::vector<Elt>& generators() const { return generators_; }

  Elt sieve_bound() const { return static_cast<Elt>(member_.size()); }

  // Same member set, not necessarily the same generator list.
  bool operator==(const NumericalSemigroup& o) const;
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

 private:
  std::vector<Elt> generators_;   // sorted, deduplicated
  std::vector<bool> member_;      // additive sieve over [0, 2*max(gens)^2 + 1)
  Elt conductor_ = -1;            // frobenius number
  Elt multiplicity_ = 0;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::vector<Elt> generators);

}  // namespace closure
