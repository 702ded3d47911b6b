#pragma once

#include <map>
#include <utility>
#include <vector>

#include "glr/crystal_group.hpp"
#include "glr/cyclic_homology.hpp"
#include "glr/fin_ab_group.hpp"

namespace glr {

// Coefficients of connective real K-theory, 8-periodic from degree 0:
//   j mod 8:  0  1    2    3  4  5  6  7
//   ko_j(*):  Z  Z/2  Z/2  0  Z  0  0  0
// Trivial in negative degrees.
FinAbGroup ko_coeff(int j);

// KO_j of the real group algebra of Z/p^s (p an odd prime), 8-periodic with
// q = (p^s - 1)/2:
//   j mod 8:  0        1    2            3  4        5  6    7
//             Z^(1+q)  Z/2  Z/2 + Z^q    0  Z^(1+q)  0  Z^q  0
FinAbGroup ko_real_group_algebra(long long p, int s, int j);

// The ko_j(BZ^n)-module away from 2 and p, as a formal direct sum of exterior
// powers Lambda^(j-4l)(Z^n) over l >= 0 with 0 <= j-4l <= n.  Each summand
// carries the Sylow-restricted action action^(m/p^s) of order p^s.
struct KoSummand {
  LatticeModule module;
  int shift = 0;  // the index l

  bool operator==(const KoSummand&) const = default;
};
std::vector<KoSummand> ko_bzn_away_from_p(const CrystalGroup& g, int j,
                                          long long p);

// Atiyah-Hirzebruch E^2 page for ko_*(BGamma): entry (i, j) is
// H_i(Gamma; ko_j(*)), rows with Z/2 coefficients via universal coefficients.
struct E2Page {
  int max_total_degree = 0;
  std::map<std::pair<int, int>, FinAbGroup> entries;

  const FinAbGroup& at(int i, int j) const;
  bool operator==(const E2Page&) const = default;
};
E2Page ahss_e2(const CrystalGroup& g, int bound);

// Tate cohomology table of the ko_j(BZ^n)-modules at the prime p:
// entry (i, j) = Tate^(i+1)(Z/p; ko_j-module) for i in {0, 1}, 0 <= j <= bound.
// vanishing_holds records whether every entry with i + j even is trivial.
struct TateVanishingReport {
  long long prime = 3;
  int bound = 0;
  std::map<std::pair<int, int>, FinAbGroup> entries;
  bool vanishing_holds = true;

  bool operator==(const TateVanishingReport&) const = default;
};
TateVanishingReport tate_vanishing_report(const CrystalGroup& g, long long p,
                                          int bound);

}  // namespace glr
