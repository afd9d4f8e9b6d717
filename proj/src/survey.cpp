#include "closure/survey.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace closure {

namespace {

bool is_prime(Elt p) {
  if (p < 2) return false;
  for (Elt d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string gens_to_string(const std::vector<Elt>& gens) {
  std::string s = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens[i]);
  }
  return s + ")";
}

}  // namespace

bool is_subset(const SemigroupIdeal& a, const SemigroupIdeal& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  const Elt hi = std::max(a.threshold(), b.threshold());
  for (Elt x = a.min_element(); x < hi; ++x)
    if (a.contains(x) && !b.contains(x)) return false;
  return true;
}

std::vector<SemigroupIdeal> enumerate_m_primary_ideals(const SemigroupPtr& ring,
                                                       Elt bound) {
  const auto& s = *ring;
  if (bound < s.conductor_exponent()) throw BoundTooSmall(bound, s.conductor_exponent());

  std::vector<Elt> positions;  // members of S in [1, bound), ascending
  for (Elt b = 1; b < bound; ++b)
    if (s.contains(b)) positions.push_back(b);

  std::vector<bool> chosen(static_cast<size_t>(bound), false);
  std::vector<SemigroupIdeal> out;

  auto emit = [&]() {
    // Minimal generators of chosen + [bound, inf): all lie below bound + conductor.
    auto member = [&](Elt x) {
      if (x >= bound) return true;
      return x >= 0 && chosen[static_cast<size_t>(x)];
    };
    std::vector<Elt> gens;
    for (Elt b = 1; b < bound + std::max<Elt>(s.conductor_exponent(), 1); ++b) {
      if (!member(b) || !s.contains(b)) continue;
      bool redundant = false;
      for (Elt a = 1; a < b && !redundant; ++a)
        if (member(a) && s.contains(a) && s.contains(b - a)) redundant = true;
      if (!redundant) gens.push_back(b);
    }
    out.push_back(SemigroupIdeal::from_generators(ring, gens));
  };

  // Decide bits from the largest position down; a bit may be set only when
  // adding any semigroup generator stays inside the chosen set (or beyond
  // the bound, where everything is a member).
  auto rec = [&](auto&& self, long idx) -> void {
    if (idx < 0) {
      emit();
      return;
    }
    const Elt b = positions[static_cast<size_t>(idx)];
    self(self, idx - 1);  // exclude b
    bool closed = true;
    for (Elt g : s.generators()) {
      const Elt above = b + g;
      if (above < bound && !chosen[static_cast<size_t>(above)]) {
        closed = false;
        break;
      }
    }
    if (closed) {
      chosen[static_cast<size_t>(b)] = true;
      self(self, idx - 1);
      chosen[static_cast<size_t>(b)] = false;
    }
  };
  rec(rec, static_cast<long>(positions.size()) - 1);

  std::sort(out.begin(), out.end(), [](const SemigroupIdeal& a, const SemigroupIdeal& b) {
    return a.minimal_generators() < b.minimal_generators();
  });
  return out;
}

SurveyReport classify(const SemigroupPtr& ring, Elt bound, Elt prime) {
  if (!is_prime(prime)) throw Error("classify: prime required");
  SurveyReport report;
  report.ring_gens = ring->generators();
  report.bound = bound;
  report.prime = prime;

  const auto m = maximal_ideal(ring);
  const auto tau = test_ideal(ring);
  const auto tau_gens = tau.minimal_generators();

  for (const auto& ideal : enumerate_m_primary_ideals(ring, bound)) {
    SurveyRecord rec;
    rec.ideal_gens = ideal.minimal_generators();
    const auto star = tight_closure(ideal);
    const auto bf = t_basically_full_closure(ideal, m);
    rec.star_gens = star.minimal_generators();
    rec.bf_gens = bf.minimal_generators();
    rec.basically_full = (bf == ideal);
    rec.star_bf = (bf == star);
    rec.star_tau_bf = (t_basically_full_closure(ideal, tau) == star);

    // Definitional cross-check of the tight-closure verdict: every generator c
    // of the conductor ideal multiplies q-th powers of I^* into I^[q].
    for (Elt e = 0; e < 3; ++e) {
      Elt q = prime;
      for (Elt i = 0; i < e; ++i) q *= prime;
      const auto fpow = frobenius_power(ideal, q);
      for (Elt b = star.min_element(); b < star.threshold(); ++b) {
        if (!star.contains(b)) continue;
        for (Elt c : tau_gens)
          if (!fpow.contains(c + q * b))
            throw InternalError("frobenius witness check failed");
      }
    }

    if (!(rec.basically_full && rec.star_bf && rec.star_tau_bf))
      report.counterexamples.push_back(rec);
    report.records.push_back(std::move(rec));
  }
  return report;
}

AxiomReport axiom_check(const SemigroupPtr& ring, long trials, std::uint64_t seed) {
  AxiomReport report;
  report.ring_gens = ring->generators();
  report.bound = ring->conductor_exponent() + 6;
  report.trials = trials;
  report.seed = seed;

  const auto pool = enumerate_m_primary_ideals(ring, report.bound);
  const size_t n = pool.size();
  std::mt19937_64 rng(seed);
  auto pick = [&]() -> const SemigroupIdeal& { return pool[rng() % n]; };

  auto note = [&](int axiom, const std::string& what) {
    ++report.violated[static_cast<size_t>(axiom)];
    ++report.violations;
    if (!report.first_violation) report.first_violation = what;
  };

  for (long trial = 0; trial < trials; ++trial) {
    const auto& i = pick();
    const auto& k = pick();
    const std::uint64_t t_idx = rng() % (n + 1);
    const SemigroupIdeal t =
        t_idx == n ? SemigroupIdeal::unit(ring) : pool[t_idx];
    const auto j = sum(i, k);  // contains i by construction

    const auto ti = t_basically_full_closure(i, t);
    const auto tj = t_basically_full_closure(j, t);
    const std::string ctx = "I=" + gens_to_string(i.minimal_generators()) +
                            " J=" + gens_to_string(j.minimal_generators()) +
                            " T=" + gens_to_string(t.minimal_generators());

    ++report.checked[0];
    if (!is_subset(i, ti)) note(0, "extensive: " + ctx);
    ++report.checked[1];
    if (!is_subset(ti, tj)) note(1, "monotone: " + ctx);
    ++report.checked[2];
    if (t_basically_full_closure(ti, t) != ti) note(2, "idempotent: " + ctx);
    ++report.checked[3];
    if (!is_subset(product(ti, tj), t_basically_full_closure(product(i, j), t)))
      note(3, "submultiplicative: " + ctx);
  }
  return report;
}

std::vector<SemigroupIdeal> find_valid_t(const SemigroupPtr& ring, Elt bound) {
  const auto pool = enumerate_m_primary_ideals(ring, bound);
  std::vector<SemigroupIdeal> stars;
  stars.reserve(pool.size());
  for (const auto& i : pool) stars.push_back(tight_closure(i));

  std::vector<SemigroupIdeal> candidates = pool;
  candidates.push_back(SemigroupIdeal::unit(ring));

  std::vector<SemigroupIdeal> valid;
  for (const auto& t : candidates) {
    bool ok = true;
    for (size_t idx = 0; idx < pool.size() && ok; ++idx)
      ok = (t_basically_full_closure(pool[idx], t) == stars[idx]);
    if (ok) valid.push_back(t);
  }
  std::sort(valid.begin(), valid.end(),
            [](const SemigroupIdeal& a, const SemigroupIdeal& b) {
              return a.minimal_generators() < b.minimal_generators();
            });
  return valid;
}

namespace {

nlohmann::ordered_json record_json(const SurveyRecord& rec) {
  nlohmann::ordered_json j;
  j["ideal_gens"] = rec.ideal_gens;
  j["star_gens"] = rec.star_gens;
  j["bf_gens"] = rec.bf_gens;
  j["basically_full"] = rec.basically_full;
  j["star_bf"] = rec.star_bf;
  j["star_tau_bf"] = rec.star_tau_bf;
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const SurveyReport& report) {
  nlohmann::ordered_json j;
  j["ring"] = report.ring_gens;
  j["bound"] = report.bound;
  j["prime"] = report.prime;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) j["records"].push_back(record_json(rec));
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.counterexamples)
    j["counterexamples"].push_back(record_json(rec));
  j["axiom_trials"] = report.axiom_trials;
  j["axiom_seed"] = report.axiom_seed;
  j["axiom_violations"] = report.axiom_violations;
  return j;
}

nlohmann::ordered_json to_json(const AxiomReport& report) {
  static const char* names[4] = {"extensive", "monotone", "idempotent",
                                 "submultiplicative"};
  nlohmann::ordered_json j;
  j["ring"] = report.ring_gens;
  j["bound"] = report.bound;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["violations"] = report.violations;
  nlohmann::ordered_json axioms;
  for (int a = 0; a < 4; ++a) {
    nlohmann::ordered_json one;
    one["checked"] = report.checked[static_cast<size_t>(a)];
    one["violated"] = report.violated[static_cast<size_t>(a)];
    axioms[names[a]] = one;
  }
  j["axioms"] = axioms;
  j["first_violation"] =
      report.first_violation ? nlohmann::ordered_json(*report.first_violation)
                             : nlohmann::ordered_json(nullptr);
  return j;
}

std::string to_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "ideal_gens;star_gens;bf_gens;basically_full;star_bf;star_tau_bf\n";
  auto cell = [](const std::vector<Elt>& gens) {
    std::string s;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(gens[i]);
    }
    return s;
  };
  for (const auto& rec : report.records) {
    out << cell(rec.ideal_gens) << ';' << cell(rec.star_gens) << ';'
        << cell(rec.bf_gens) << ';' << (rec.basically_full ? "true" : "false")
        << ';' << (rec.star_bf ? "true" : "false") << ';'
        << (rec.star_tau_bf ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace closure
