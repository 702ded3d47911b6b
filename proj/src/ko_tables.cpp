#include "glr/ko_tables.hpp"

#include <string>

#include "glr/errors.hpp"
#include "glr/lattice.hpp"

namespace glr {

FinAbGroup ko_coeff(int j) {
  if (j < 0) return FinAbGroup::trivial();
  switch (j % 8) {
    case 0:
    case 4:
      return FinAbGroup::free(1);
    case 1:
    case 2:
      return FinAbGroup::cyclic(2);
    default:
      return FinAbGroup::trivial();
  }
}

FinAbGroup ko_real_group_algebra(long long p, int s, int j) {
  if (p % 2 == 0 || !is_prime(p))
    fail(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (s < 1) fail(ErrorKind::InvalidArgument, "prime power exponent must be >= 1");
  Int ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  const Int q_big = (ps - 1) / 2;
  if (q_big > 1000000000)
    fail(ErrorKind::InvalidArgument, "group algebra rank too large");
  const long long q = q_big.convert_to<long long>();
  switch (((j % 8) + 8) % 8) {
    case 0:
    case 4:
      return FinAbGroup::free(1 + q);
    case 1:
      return FinAbGroup::cyclic(2);
    case 2:
      return direct_sum(FinAbGroup::free(q), FinAbGroup::cyclic(2));
    case 6:
      return FinAbGroup::free(q);
    default:
      return FinAbGroup::trivial();
  }
}

std::vector<KoSummand> ko_bzn_away_from_p(const CrystalGroup& g, int j,
                                          long long p) {
  if (j < 0) fail(ErrorKind::NegativeDegree, "ko degree " + std::to_string(j));
  if (p < 2 || !is_prime(p))
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (g.m % p != 0)
    fail(ErrorKind::PrimeDoesNotDivideOrder,
         std::to_string(p) + " does not divide m = " + std::to_string(g.m));
  long long ps = 1, rest = g.m;
  while (rest % p == 0) {
    rest /= p;
    ps *= p;
  }
  const IntMatrix restricted =
      matrix_power(g.action, static_cast<unsigned long long>(rest));
  std::vector<KoSummand> summands;
  for (int l = 0; j - 4 * l >= 0; ++l) {
    const int deg = j - 4 * l;
    if (deg > g.n) continue;
    summands.push_back(
        {LatticeModule(exterior_power(restricted, deg), ps), l});
  }
  return summands;
}

const FinAbGroup& E2Page::at(int i, int j) const {
  const auto it = entries.find({i, j});
  if (it == entries.end())
    fail(ErrorKind::InvalidArgument,
         "no E2 entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  return it->second;
}

E2Page ahss_e2(const CrystalGroup& g, int bound) {
  if (bound < 0)
    fail(ErrorKind::NegativeBound, "total degree bound " + std::to_string(bound));
  if (!is_square_free(g.m))
    fail(ErrorKind::NotSquareFree,
         "m = " + std::to_string(g.m) + " is not square-free");
  std::vector<FinAbGroup> h;
  for (int i = 0; i <= bound; ++i) h.push_back(lhs_total_homology(g, i));
  E2Page page;
  page.max_total_degree = bound;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; i + j <= bound; ++j) {
      FinAbGroup entry;
      switch (j % 8) {
        case 0:
        case 4:
          entry = h[static_cast<std::size_t>(i)];
          break;
        case 1:
        case 2:
          entry = homology_with_z2(
              h[static_cast<std::size_t>(i)],
              i > 0 ? h[static_cast<std::size_t>(i - 1)] : FinAbGroup::trivial());
          break;
        default:
          break;  // ko coefficient trivial
      }
      page.entries[{i, j}] = entry;
    }
  return page;
}

TateVanishingReport tate_vanishing_report(const CrystalGroup& g, long long p,
                                          int bound) {
  if (bound < 0)
    fail(ErrorKind::NegativeBound, "degree bound " + std::to_string(bound));
  if (bound > g.n)
    fail(ErrorKind::InvalidArgument,
         "degree bound exceeds the lattice rank " + std::to_string(g.n));
  if (p < 2 || !is_prime(p))
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (g.m % p != 0)
    fail(ErrorKind::PrimeDoesNotDivideOrder,
         std::to_string(p) + " does not divide m = " + std::to_string(g.m));
  if ((g.m / p) % p == 0)
    fail(ErrorKind::NotSquareFree,
         "Sylow subgroup at " + std::to_string(p) + " is not of prime order");

  TateVanishingReport report;
  report.prime = p;
  report.bound = bound;
  for (int j = 0; j <= bound; ++j) {
    const std::vector<KoSummand> mods = ko_bzn_away_from_p(g, j, p);
    for (int i = 0; i <= 1; ++i) {
      // Tate^(i+1): i = 0 is the odd group, i = 1 the even one.
      const Parity parity = i == 0 ? Parity::Odd : Parity::Even;
      std::vector<FinAbGroup> parts;
      for (const KoSummand& s : mods)
        parts.push_back(tate_cohomology(s.module, parity));
      FinAbGroup entry = direct_sum(parts);
      if ((i + j) % 2 == 0 && !entry.is_trivial()) report.vanishing_holds = false;
      report.entries[{i, j}] = std::move(entry);
    }
  }
  return report;
}

}  // namespace glr
