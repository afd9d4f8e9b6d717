#include "closure/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace closure {

NumericalSemigroup::NumericalSemigroup(std::vector<Elt> generators) {
  for (Elt g : generators)
    if (g <= 0) throw Error("semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.empty()) throw EmptyGenerators();

  Elt g = 0;
  for (Elt x : generators) g = std::gcd(g, x);
  if (g != 1) throw NonCofinite();

  generators_ = std::move(generators);
  const Elt maxg = generators_.back();

  // Schur: the largest gap is below (g1-1)(gk-1), so this bound is safe.
  const Elt bound = 2 * maxg * maxg + 1;
  member_.assign(static_cast<size_t>(bound), false);
  member_[0] = true;
  for (Elt n = 1; n < bound; ++n) {
    for (Elt gen : generators_) {
      if (n >= gen && member_[static_cast<size_t>(n - gen)]) {
        member_[static_cast<size_t>(n)] = true;
        break;
      }
    }
  }

  conductor_ = -1;
  for (Elt n = bound - 1; n >= 1; --n) {
    if (!member_[static_cast<size_t>(n)]) {
      conductor_ = n;
      break;
    }
  }
  multiplicity_ = generators_.front();
}

bool NumericalSemigroup::contains(Elt n) const {
  if (n < 0) return false;
  if (n > conductor_) return true;
  return member_[static_cast<size_t>(n)];
}

std::vector<Elt> NumericalSemigroup::gaps() const {
  std::vector<Elt> out;
  for (Elt n = 1; n <= conductor_; ++n)
    if (!member_[static_cast<size_t>(n)]) out.push_back(n);
  return out;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& o) const {
  if (conductor_ != o.conductor_) return false;
  for (Elt n = 1; n <= conductor_; ++n)
    if (member_[static_cast<size_t>(n)] != o.member_[static_cast<size_t>(n)]) return false;
  return true;
}

SemigroupPtr make_semigroup(std::vector<Elt> generators) {
  return std::make_shared<NumericalSemigroup>(std::move(generators));
}

}  // namespace closure
