#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glr/crystal_group.hpp"
#include "glr/decomposition.hpp"
#include "glr/fin_ab_group.hpp"

namespace glr {

enum class Verdict { PositivePsc, Counterexample, Unknown };

const char* to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(const HypothesisCheck&) const = default;
};

struct GlrStatus {
  Verdict verdict = Verdict::Unknown;
  // Prime and type establishing a counterexample, when one exists.
  std::optional<std::pair<long long, DecompositionType>> witness;
  // Full hypothesis ledger, in a fixed order, pass and fail alike.
  std::vector<HypothesisCheck> reasons;

  bool operator==(const GlrStatus&) const = default;
};

// det(action^k - I) != 0 for every 1 <= k <= m - 1 (vacuous for m = 1).
bool is_free_outside_origin(const CrystalGroup& g);

// m odd, m >= 3, and the action is free outside the origin.
bool check_positive(const CrystalGroup& g);

// For m odd and square-free: the first prime p | m (ascending) whose
// decomposition type has r >= 4 and s + t >= 1, together with that type.
std::optional<std::pair<long long, DecompositionType>> check_counterexample(
    const CrystalGroup& g);

// Never reports both criteria at once; the two are provably disjoint and a
// simultaneous hit is reported as an internal inconsistency.
GlrStatus classify(const CrystalGroup& g);

struct WitnessReport {
  long long p = 3;
  long long h1_free_rank = 0;
  bool h1_p_torsion_present = false;
  FinAbGroup h5_torsion_certificate;  // H_5(T^4 x BZ/p)

  bool operator==(const WitnessReport&) const = default;
};

// Homological data backing a counterexample verdict at the prime p; p must be
// the prime reported by check_counterexample.
WitnessReport counterexample_witness(const CrystalGroup& g, long long p);

}  // namespace glr
