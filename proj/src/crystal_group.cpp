#include "glr/crystal_group.hpp"

#include <algorithm>
#include <string>

#include "glr/errors.hpp"
#include "glr/lattice.hpp"

namespace glr {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool is_square_free(long long v) {
  if (v < 1) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % (d * d) == 0) return false;
  return true;
}

std::vector<long long> prime_divisors(long long v) {
  std::vector<long long> primes;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) {
      primes.push_back(d);
      while (v % d == 0) v /= d;
    }
  if (v > 1) primes.push_back(v);
  return primes;
}

std::vector<long long> divisors(long long v) {
  std::vector<long long> divs;
  for (long long d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      divs.push_back(d);
      if (d != v / d) divs.push_back(v / d);
    }
  std::sort(divs.begin(), divs.end());
  return divs;
}

CrystalGroup validate_group(long long n, long long m, IntMatrix action) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "lattice rank must be >= 1");
  if (m < 1) fail(ErrorKind::InvalidArgument, "cyclic order must be >= 1");
  if (action.rows() != static_cast<std::size_t>(n) ||
      action.cols() != static_cast<std::size_t>(n))
    fail(ErrorKind::DimensionMismatch,
         "action matrix is " + std::to_string(action.rows()) + "x" +
             std::to_string(action.cols()) + ", expected " + std::to_string(n) +
             "x" + std::to_string(n));
  if (abs(determinant(action)) != 1)
    fail(ErrorKind::NotUnimodular, "action matrix has |det| != 1");
  if (!matrix_power(action, static_cast<unsigned long long>(m)).is_identity())
    fail(ErrorKind::OrderMismatch,
         "action^" + std::to_string(m) + " is not the identity");

  CrystalGroup g{n, m, std::move(action), m};
  for (long long d : divisors(m))
    if (matrix_power(g.action, static_cast<unsigned long long>(d))
            .is_identity()) {
      g.faithful_order = d;
      break;
    }
  return g;
}

}  // namespace glr
