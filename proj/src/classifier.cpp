#include "glr/classifier.hpp"

#include <sstream>

#include "glr/cyclic_homology.hpp"
#include "glr/errors.hpp"
#include "glr/lattice.hpp"

namespace glr {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PositivePsc: return "PositivePSC";
    case Verdict::Counterexample: return "Counterexample";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

// First 1 <= k <= m-1 with det(action^k - I) = 0, or 0 when none exists.
long long first_singular_power(const CrystalGroup& g) {
  IntMatrix power = g.action;
  const IntMatrix id = IntMatrix::identity(power.rows());
  for (long long k = 1; k < g.m; ++k) {
    if (determinant(power - id) == 0) return k;
    power = power * g.action;
  }
  return 0;
}

std::string type_string(const DecompositionType& d) {
  std::ostringstream out;
  out << "(r, s, t) = (" << d.r << ", " << d.s << ", " << d.t << ")";
  return out.str();
}

}  // namespace

bool is_free_outside_origin(const CrystalGroup& g) {
  return first_singular_power(g) == 0;
}

bool check_positive(const CrystalGroup& g) {
  return g.m % 2 == 1 && g.m >= 3 && is_free_outside_origin(g);
}

std::optional<std::pair<long long, DecompositionType>> check_counterexample(
    const CrystalGroup& g) {
  if (g.m % 2 == 0 || !is_square_free(g.m)) return std::nullopt;
  for (long long p : prime_divisors(g.m)) {
    const DecompositionType d = decomposition_type(sylow_restriction(g, p));
    if (d.r >= 4 && d.s + d.t >= 1) return std::make_pair(p, d);
  }
  return std::nullopt;
}

GlrStatus classify(const CrystalGroup& g) {
  GlrStatus status;
  const bool odd = g.m % 2 == 1;
  const bool large_enough = g.m >= 3;
  const long long singular = first_singular_power(g);
  const bool free_action = singular == 0;
  const bool square_free = is_square_free(g.m);

  status.reasons.push_back(
      {"m odd", odd, "m = " + std::to_string(g.m)});
  status.reasons.push_back(
      {"m >= 3", large_enough, "m = " + std::to_string(g.m)});
  status.reasons.push_back(
      {"action free outside origin", free_action,
       free_action
           ? "det(A^k - I) != 0 for k = 1.." + std::to_string(g.m - 1)
           : "det(A^k - I) = 0 at k = " + std::to_string(singular)});
  status.reasons.push_back(
      {"m square-free", square_free, "m = " + std::to_string(g.m)});

  const bool positive = odd && large_enough && free_action;

  if (odd && square_free && g.m > 1) {
    for (long long p : prime_divisors(g.m)) {
      const DecompositionType d = decomposition_type(sylow_restriction(g, p));
      const bool hit = d.r >= 4 && d.s + d.t >= 1;
      status.reasons.push_back(
          {"counterexample type at p = " + std::to_string(p), hit,
           type_string(d) + "; needs r >= 4 and s + t >= 1"});
      if (hit && !status.witness) status.witness = std::make_pair(p, d);
    }
  } else {
    status.reasons.push_back(
        {"per-prime decomposition types", false,
         "not evaluated: requires m odd, square-free and > 1"});
  }

  if (positive && status.witness)
    fail(ErrorKind::InternalInconsistency,
         "group met both the positive and the counterexample criteria");

  if (positive) {
    status.verdict = Verdict::PositivePsc;
    status.witness.reset();
  } else if (status.witness) {
    status.verdict = Verdict::Counterexample;
  } else {
    status.verdict = Verdict::Unknown;
  }
  return status;
}

WitnessReport counterexample_witness(const CrystalGroup& g, long long p) {
  const auto hit = check_counterexample(g);
  if (!hit || hit->first != p)
    fail(ErrorKind::NotACounterexample,
         "group is not a counterexample at p = " + std::to_string(p));
  const FinAbGroup h1 = lhs_total_homology(g, 1);
  bool p_torsion = false;
  for (const Int& f : h1.invariant_factors)
    if (f % p == 0) p_torsion = true;
  return {p, h1.free_rank, p_torsion, homology_torus_lens(4, p, 5)};
}

}  // namespace glr
