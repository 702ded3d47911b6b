#pragma once

#include <vector>

#include "glr/int_matrix.hpp"

namespace glr {

// Split extension Z^n -> Gamma -> Z/m, described by the action of the
// canonical generator of Z/m on the lattice.
struct CrystalGroup {
  long long n = 1;
  long long m = 1;
  IntMatrix action;               // n x n, unimodular, action^m = identity
  long long faithful_order = 1;   // least k >= 1 with action^k = identity

  bool faithful() const { return faithful_order == m; }
};

// Checks n >= 1, m >= 1, the matrix shape, unimodularity and action^m = I,
// and computes the faithful order (always a divisor of m).
CrystalGroup validate_group(long long n, long long m, IntMatrix action);

bool is_prime(long long v);
bool is_square_free(long long v);
std::vector<long long> prime_divisors(long long v);  // distinct, ascending
std::vector<long long> divisors(long long v);        // ascending

}  // namespace glr
