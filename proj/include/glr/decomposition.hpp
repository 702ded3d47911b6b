#pragma once

#include <random>

#include "glr/crystal_group.hpp"
#include "glr/cyclic_homology.hpp"

namespace glr {

// Multiplicities in Z^r + (Z[Z/p])^s + I^t for a lattice over Z/p with p an
// odd prime; I is the augmentation ideal, of rank p - 1.
struct DecompositionType {
  long long p = 3;
  long long r = 0;
  long long s = 0;
  long long t = 0;

  bool operator==(const DecompositionType&) const = default;
  long long total_rank() const { return r + p * s + (p - 1) * t; }
};

// Lattice restricted to the Sylow p-subgroup of Z/m, generated by
// action^(m/p).  Requires p | m and m square-free, so the subgroup is Z/p.
LatticeModule sylow_restriction(const CrystalGroup& g, long long p);

// (r, s, t) recovered from cohomological invariants:
//   r = dim_Fp Tate^even, t = dim_Fp Tate^odd, s = rank(fixed lattice) - r.
// The accounting identity r + p*s + (p-1)*t = rank is verified and a failure
// reports an internal inconsistency.
DecompositionType decomposition_type(const LatticeModule& mod);

// Block-diagonal model: r blocks [1], s cyclic permutation blocks (p x p),
// t companion blocks of 1 + x + ... + x^(p-1) of size (p-1) x (p-1).
LatticeModule build_module(const DecompositionType& d);

// Conjugates the generator action by a seeded random unimodular matrix;
// deterministic for a fixed seed.
LatticeModule conjugate_random(const LatticeModule& mod, unsigned long long seed);

// u and its inverse, built from at most max_ops elementary row operations
// whose multipliers are bounded by coeff_bound in absolute value.
struct UnimodularPair {
  IntMatrix u;
  IntMatrix u_inv;
};
UnimodularPair random_unimodular(std::size_t n, std::mt19937_64& rng,
                                 int max_ops, int coeff_bound);

}  // namespace glr
