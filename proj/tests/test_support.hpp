#pragma once

// Shared helpers for the test suites.  The oracles here deliberately avoid
// the code paths they are used to check: rank_elimination does fraction-free
// Gaussian elimination instead of a Smith form, and the binomial table is
// built from the Pascal recurrence alone.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "glr/crystal_group.hpp"
#include "glr/decomposition.hpp"
#include "glr/errors.hpp"
#include "glr/int_matrix.hpp"

namespace test_support {

inline std::optional<glr::ErrorKind> thrown_kind(
    const std::function<void()>& fn) {
  try {
    fn();
  } catch (const glr::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline glr::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                                    std::size_t cols, long long bound) {
  glr::IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.at(i, j) = static_cast<long long>(
                       rng() % static_cast<unsigned long long>(2 * bound + 1)) -
                   bound;
  return a;
}

// Rank over Q by fraction-free (Bareiss) elimination; no Smith form involved.
inline std::size_t rank_elimination(glr::IntMatrix a) {
  std::size_t r = 0;
  glr::Int prev = 1;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j)
        a.at(i, j) =
            (a.at(i, j) * a.at(r, col) - a.at(i, col) * a.at(r, j)) / prev;
      a.at(i, col) = 0;
    }
    prev = a.at(r, col);
    ++r;
  }
  return r;
}

// Pascal recurrence only.
inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (long long i = 1; i <= n; ++i)
    for (long long j = i; j >= 1; --j)
      row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

// Companion matrices of the cyclotomic polynomials used to manufacture random
// groups: the block for d has multiplicative order exactly d.
inline const std::map<long long, glr::IntMatrix>& cyclotomic_blocks() {
  static const std::map<long long, glr::IntMatrix> blocks = [] {
    auto companion = [](std::vector<long long> low_coeffs) {
      // x^k + c_{k-1} x^{k-1} + ... + c_0; last column holds -c_i.
      const std::size_t k = low_coeffs.size();
      glr::IntMatrix m(k, k);
      for (std::size_t i = 0; i + 1 < k; ++i) m.at(i + 1, i) = 1;
      for (std::size_t i = 0; i < k; ++i) m.at(i, k - 1) = -low_coeffs[i];
      return m;
    };
    std::map<long long, glr::IntMatrix> b;
    b.emplace(1, companion({-1}));                          // x - 1
    b.emplace(2, companion({1}));                           // x + 1
    b.emplace(3, companion({1, 1}));                        // x^2 + x + 1
    b.emplace(5, companion({1, 1, 1, 1}));                  // x^4 + ... + 1
    b.emplace(6, companion({1, -1}));                       // x^2 - x + 1
    b.emplace(7, companion({1, 1, 1, 1, 1, 1}));            // x^6 + ... + 1
    b.emplace(9, companion({1, 0, 0, 1, 0, 0}));            // x^6 + x^3 + 1
    b.emplace(15, companion({1, -1, 0, 1, -1, 1, 0, -1}));  // Phi_15
    return b;
  }();
  return blocks;
}

// A random group of order dividing m: block-diagonal cyclotomic pieces whose
// orders divide m, conjugated by a seeded unimodular matrix.
inline glr::CrystalGroup random_group(std::mt19937_64& rng, long long m,
                                      int max_blocks) {
  std::vector<long long> usable;
  for (const auto& [d, block] : cyclotomic_blocks())
    if (m % d == 0) usable.push_back(d);
  const int count =
      1 + static_cast<int>(rng() % static_cast<unsigned long long>(max_blocks));
  std::vector<glr::IntMatrix> blocks;
  for (int i = 0; i < count; ++i)
    blocks.push_back(cyclotomic_blocks().at(usable[rng() % usable.size()]));
  glr::IntMatrix a = glr::block_diag(blocks);
  const glr::UnimodularPair pair = glr::random_unimodular(a.rows(), rng, 12, 2);
  a = pair.u * a * pair.u_inv;
  return glr::validate_group(static_cast<long long>(a.rows()), m, a);
}

}  // namespace test_support
