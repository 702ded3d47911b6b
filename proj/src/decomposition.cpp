#include "glr/decomposition.hpp"

#include <string>
#include <utility>

#include "glr/errors.hpp"
#include "glr/lattice.hpp"

namespace glr {

LatticeModule sylow_restriction(const CrystalGroup& g, long long p) {
  if (p < 2 || !is_prime(p))
    fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (g.m % p != 0)
    fail(ErrorKind::PrimeDoesNotDivideOrder,
         std::to_string(p) + " does not divide m = " + std::to_string(g.m));
  if (!is_square_free(g.m))
    fail(ErrorKind::NotSquareFree,
         "m = " + std::to_string(g.m) + " is not square-free");
  return LatticeModule(
      matrix_power(g.action, static_cast<unsigned long long>(g.m / p)), p);
}

namespace {

// Tate groups of a Z/p-lattice are elementary abelian; their F_p dimension is
// the number of invariant factors.
long long fp_dimension(const FinAbGroup& tate, long long p) {
  for (const Int& f : tate.invariant_factors)
    if (f != p)
      fail(ErrorKind::InternalInconsistency,
           "Tate invariant factor " + f.str() + " differs from p");
  return static_cast<long long>(tate.invariant_factors.size());
}

}  // namespace

DecompositionType decomposition_type(const LatticeModule& mod) {
  const long long p = mod.group_order;
  if (p == 2 || !is_prime(p))
    fail(ErrorKind::OrderNotPrime,
         "module group order " + std::to_string(p) + " is not an odd prime");
  const long long r = fp_dimension(tate_cohomology(mod, Parity::Even), p);
  const long long t = fp_dimension(tate_cohomology(mod, Parity::Odd), p);
  const long long fixed_rank = static_cast<long long>(
      kernel_saturated(mod.generator_action -
                       IntMatrix::identity(mod.rank()))
          .cols());
  const long long s = fixed_rank - r;
  DecompositionType d{p, r, s, t};
  if (s < 0 || d.total_rank() != static_cast<long long>(mod.rank()))
    fail(ErrorKind::InternalInconsistency,
         "decomposition rank accounting failed: r=" + std::to_string(r) +
             " s=" + std::to_string(s) + " t=" + std::to_string(t) +
             " for rank " + std::to_string(mod.rank()));
  return d;
}

namespace {

IntMatrix cyclic_permutation(long long p) {
  IntMatrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
  for (long long i = 0; i < p; ++i)
    m.at(static_cast<std::size_t>((i + 1) % p), static_cast<std::size_t>(i)) = 1;
  return m;
}

// Companion matrix of 1 + x + ... + x^(p-1).
IntMatrix augmentation_companion(long long p) {
  const std::size_t n = static_cast<std::size_t>(p - 1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -1;
  return m;
}

}  // namespace

LatticeModule build_module(const DecompositionType& d) {
  if (d.p == 2 || !is_prime(d.p))
    fail(ErrorKind::OrderNotPrime,
         "decomposition prime " + std::to_string(d.p) + " is not an odd prime");
  if (d.r < 0 || d.s < 0 || d.t < 0)
    fail(ErrorKind::InvalidArgument, "negative multiplicity");
  std::vector<IntMatrix> blocks;
  for (long long i = 0; i < d.r; ++i) blocks.push_back(IntMatrix::identity(1));
  for (long long i = 0; i < d.s; ++i) blocks.push_back(cyclic_permutation(d.p));
  for (long long i = 0; i < d.t; ++i)
    blocks.push_back(augmentation_companion(d.p));
  return LatticeModule(block_diag(blocks), d.p);
}

namespace {

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() %
                                     static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

UnimodularPair random_unimodular(std::size_t n, std::mt19937_64& rng,
                                 int max_ops, int coeff_bound) {
  UnimodularPair pair{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 0) return pair;
  const long long ops = rand_range(rng, 0, max_ops);
  for (long long k = 0; k < ops; ++k) {
    const long long kind = rand_range(rng, 0, 9);
    if (kind < 7 && n >= 2) {
      std::size_t i = static_cast<std::size_t>(rand_range(rng, 0, n - 1));
      std::size_t j = static_cast<std::size_t>(rand_range(rng, 0, n - 2));
      if (j >= i) ++j;
      Int c = rand_range(rng, 1, coeff_bound);
      if (rand_range(rng, 0, 1) == 1) c = -c;
      // u <- E u with E = I + c e_{ji};  u_inv <- u_inv E^{-1}
      pair.u.add_row_multiple(j, i, c);
      pair.u_inv.add_col_multiple(i, j, -c);
    } else if (kind == 7 && n >= 2) {
      std::size_t i = static_cast<std::size_t>(rand_range(rng, 0, n - 1));
      std::size_t j = static_cast<std::size_t>(rand_range(rng, 0, n - 2));
      if (j >= i) ++j;
      pair.u.swap_rows(i, j);
      pair.u_inv.swap_cols(i, j);
    } else {
      std::size_t i = static_cast<std::size_t>(rand_range(rng, 0, n - 1));
      pair.u.negate_row(i);
      pair.u_inv.negate_col(i);
    }
  }
  if (!(pair.u * pair.u_inv).is_identity())
    fail(ErrorKind::InternalInconsistency, "unimodular pair is not inverse");
  return pair;
}

LatticeModule conjugate_random(const LatticeModule& mod,
                               unsigned long long seed) {
  std::mt19937_64 rng(seed);
  const UnimodularPair pair = random_unimodular(mod.rank(), rng, 30, 3);
  return LatticeModule(pair.u * mod.generator_action * pair.u_inv,
                       mod.group_order);
}

}  // namespace glr
