#pragma once

#include <stdexcept>
#include <string>

namespace closure {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// semigroup_core
struct EmptyGenerators : Error {
  EmptyGenerators() : Error("semigroup needs at least one generator") {}
};
struct NonCofinite : Error {
  NonCofinite() : Error("generators must have gcd 1") {}
};

// ideal_algebra
struct GeneratorNotInRing : Error {
  explicit GeneratorNotInRing(long long g)
      : Error("generator exponent " + std::to_string(g) + " is not in the semigroup") {}
};
struct RingMismatch : Error {
  RingMismatch() : Error("operands live in different rings") {}
};
struct ColonByZero : Error {
  ColonByZero() : Error("colon by the zero ideal") {}
};
struct ZeroIdeal : Error {
  explicit ZeroIdeal(const std::string& op) : Error(op + ": zero ideal not allowed") {}
};
struct NotMPrimary : Error {
  NotMPrimary() : Error("ideal is not m-primary") {}
};

// closure_survey
struct BoundTooSmall : Error {
  BoundTooSmall(long long d, long long c)
      : Error("bound " + std::to_string(d) + " is below the conductor exponent " +
              std::to_string(c)) {}
};

// laurent_algebra
struct CharacteristicMismatch : Error {
  CharacteristicMismatch() : Error("operands have different characteristic") {}
};
struct DimensionMismatch : Error {
  DimensionMismatch() : Error("vector dimensions do not agree") {}
};

// hypersurface
struct InhomogeneousGenerator : Error {
  InhomogeneousGenerator() : Error("element is not homogeneous") {}
};
struct ExponentOutOfRange : Error {
  ExponentOutOfRange(long long k, long long p)
      : Error("exponent " + std::to_string(k) + " must be below the characteristic " +
              std::to_string(p)) {}
};
struct UnsupportedPrime : Error {
  explicit UnsupportedPrime(long long p)
      : Error("prime " + std::to_string(p) + " is not supported here") {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error("internal: " + what) {}
};

}  // namespace closure
