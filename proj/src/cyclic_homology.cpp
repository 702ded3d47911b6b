#include "glr/cyclic_homology.hpp"

#include <string>
#include <utility>

#include "glr/errors.hpp"
#include "glr/lattice.hpp"

namespace glr {

LatticeModule::LatticeModule(IntMatrix action, long long order)
    : generator_action(std::move(action)), group_order(order) {
  if (!generator_action.is_square())
    fail(ErrorKind::DimensionMismatch, "module action must be square");
  if (group_order < 1)
    fail(ErrorKind::InvalidArgument, "module group order must be >= 1");
  if (!matrix_power(generator_action, static_cast<unsigned long long>(order))
           .is_identity())
    fail(ErrorKind::OrderMismatch,
         "module action^" + std::to_string(order) + " is not the identity");
}

IntMatrix norm_matrix(const LatticeModule& mod) {
  const IntMatrix& g = mod.generator_action;
  IntMatrix n = IntMatrix::identity(mod.rank());
  for (long long k = 1; k < mod.group_order; ++k)
    n = g * n + IntMatrix::identity(mod.rank());
  return n;
}

namespace {

IntMatrix action_minus_identity(const LatticeModule& mod) {
  return mod.generator_action - IntMatrix::identity(mod.rank());
}

}  // namespace

FinAbGroup group_homology(const LatticeModule& mod, int degree) {
  if (degree < 0)
    fail(ErrorKind::NegativeDegree,
         "homology degree " + std::to_string(degree));
  const IntMatrix gm1 = action_minus_identity(mod);
  if (degree == 0) return cokernel(gm1);
  if (degree % 2 == 1) return subquotient(gm1, norm_matrix(mod));
  return subquotient(norm_matrix(mod), gm1);
}

FinAbGroup tate_cohomology(const LatticeModule& mod, Parity parity) {
  const IntMatrix gm1 = action_minus_identity(mod);
  const FinAbGroup result = parity == Parity::Even
                                ? subquotient(gm1, norm_matrix(mod))
                                : subquotient(norm_matrix(mod), gm1);
  // Rationally the norm image fills the fixed subspace and vice versa, so
  // both parities are finite; anything else is a computation bug.
  if (result.free_rank != 0)
    fail(ErrorKind::InternalInconsistency, "Tate cohomology came out infinite");
  return result;
}

FinAbGroup coinvariants(const LatticeModule& mod) {
  return cokernel(action_minus_identity(mod));
}

std::vector<HomologySummand> lhs_homology_summands(const CrystalGroup& g,
                                                   int k) {
  if (k < 0)
    fail(ErrorKind::NegativeDegree, "homology degree " + std::to_string(k));
  std::vector<HomologySummand> summands;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    if (j > g.n) continue;  // Lambda^j vanishes above the rank
    LatticeModule mod(exterior_power(g.action, j), g.m);
    summands.push_back({i, j, group_homology(mod, i)});
  }
  return summands;
}

FinAbGroup lhs_total_homology(const CrystalGroup& g, int k) {
  std::vector<FinAbGroup> parts;
  for (const HomologySummand& s : lhs_homology_summands(g, k))
    parts.push_back(s.group);
  return direct_sum(parts);
}

namespace {

long long checked_binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  if (result > 1000000)
    fail(ErrorKind::InvalidArgument, "binomial coefficient too large");
  return result.convert_to<long long>();
}

}  // namespace

FinAbGroup homology_torus_lens(long long r, long long p, int k) {
  if (r < 0) fail(ErrorKind::InvalidArgument, "negative torus rank");
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    fail(ErrorKind::NotOddPrime, std::to_string(p) + " is not an odd prime");
  if (k < 0)
    fail(ErrorKind::NegativeDegree, "homology degree " + std::to_string(k));
  // H_a(T^r) = Z^C(r,a) is free, so Kunneth has no Tor terms and
  // H_k = Z^C(r,k) + sum over odd b of C(r, k-b) copies of Z/p.
  FinAbGroup result = FinAbGroup::free(checked_binomial(r, k));
  long long copies = 0;
  for (int b = 1; b <= k; b += 2) copies += checked_binomial(r, k - b);
  return direct_sum(result, FinAbGroup::elementary(p, copies));
}

FinAbGroup homology_with_z2(const FinAbGroup& h_i,
                            const FinAbGroup& h_i_minus_1) {
  long long copies = h_i.free_rank;
  for (const Int& f : h_i.invariant_factors)
    if (f % 2 == 0) ++copies;  // f tensor Z/2
  for (const Int& f : h_i_minus_1.invariant_factors)
    if (f % 2 == 0) ++copies;  // Tor(f, Z/2)
  return FinAbGroup::elementary(2, copies);
}

}  // namespace glr
