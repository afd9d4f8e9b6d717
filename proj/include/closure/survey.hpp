#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "closure/ideal.hpp"

namespace closure {

// a is contained in b (as exponent sets).
bool is_subset(const SemigroupIdeal& a, const SemigroupIdeal& b);

struct SurveyRecord {
  std::vector<Elt> ideal_gens;
  std::vector<Elt> star_gens;  // tight closure
  std::vector<Elt> bf_gens;    // (mI : m)
  bool basically_full = false; // (mI : m) == I
  bool star_bf = false;        // (mI : m) == I^*
  bool star_tau_bf = false;    // (tau I : tau) == I^*
};

struct SurveyReport {
  std::vector<Elt> ring_gens;
  Elt bound = 0;
  Elt prime = 0;
  std::vector<SurveyRecord> records;
  std::vector<SurveyRecord> counterexamples;  // records with some verdict false
  // Filled when an axiom run is attached to the survey (CLI --trials).
  std::uint64_t axiom_seed = 0;
  long axiom_trials = 0;
  long axiom_violations = 0;
};

struct AxiomReport {
  std::vector<Elt> ring_gens;
  Elt bound = 0;  // internal enumeration bound used for sampling
  long trials = 0;
  std::uint64_t seed = 0;
  long violations = 0;
  // Per-axiom tallies: extensive, monotone, idempotent, submultiplicative.
  std::array<long, 4> checked{};
  std::array<long, 4> violated{};
  std::optional<std::string> first_violation;
};

// All ideals I with 0 not in I and { b >= bound } contained in I, i.e. the
// m-primary monomial ideals "visible" below the bound.  Canonical order:
// lexicographic by minimal generator list.  Throws BoundTooSmall when the
// bound is below the conductor exponent.
std::vector<SemigroupIdeal> enumerate_m_primary_ideals(const SemigroupPtr& ring,
                                                       Elt bound);

// One record per enumerated ideal.  The prime feeds a Frobenius-power
// cross-check of every tight-closure verdict (q in {p, p^2, p^3}).
SurveyReport classify(const SemigroupPtr& ring, Elt bound, Elt prime);

// Randomized check of the closure-operation laws for I -> (TI : T):
// extensiveness, monotonicity, idempotence, submultiplicativity.
// Reproducible: triples are drawn with std::mt19937_64(seed), index = next() % n.
AxiomReport axiom_check(const SemigroupPtr& ring, long trials, std::uint64_t seed);

// All T (enumerated nonzero ideals plus the unit ideal) with (TI : T) = I^*
// for every enumerated I.  Sorted canonically; the unit ideal sorts first.
std::vector<SemigroupIdeal> find_valid_t(const SemigroupPtr& ring, Elt bound);

nlohmann::ordered_json to_json(const SurveyReport& report);
nlohmann::ordered_json to_json(const AxiomReport& report);

// One row per record; fields separated by ';', generator lists by ','.
std::string to_csv(const SurveyReport& report);

}  // namespace closure
