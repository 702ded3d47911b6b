#include "glr/lattice.hpp"

#include <string>

#include "glr/errors.hpp"

namespace glr {

IntMatrix kernel_saturated(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  const std::size_t k = std::min(a.rows(), a.cols());
  std::size_t r = 0;
  while (r < k && f.d.at(r, r) != 0) ++r;
  // a * v e_j = u^{-1} d e_j = 0 exactly for j >= r, so the trailing columns
  // of v are a kernel basis.  They extend to a basis of Z^cols (v is
  // unimodular), hence the kernel lattice they span is saturated.
  IntMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = r; j < a.cols(); ++j)
      basis.at(i, j - r) = f.v.at(i, j);
  return basis;
}

FinAbGroup cokernel(const IntMatrix& a) {
  const IntMatrix d = smith_normal_form(a).d;
  const std::size_t k = std::min(a.rows(), a.cols());
  FinAbGroup g;
  std::size_t r = 0;
  for (; r < k && d.at(r, r) != 0; ++r)
    if (d.at(r, r) > 1) g.invariant_factors.push_back(d.at(r, r));
  g.free_rank = static_cast<long long>(a.rows() - r);
  return g;
}

IntMatrix solve_exact(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows())
    fail(ErrorKind::DimensionMismatch, "solve_exact shape mismatch");
  const SmithForm f = smith_normal_form(basis);
  const std::size_t k = basis.cols();
  if (k > basis.rows() || (k > 0 && f.d.at(k - 1, k - 1) == 0))
    fail(ErrorKind::InvalidArgument, "solve_exact basis not of full column rank");
  const IntMatrix w = f.u * targets;
  for (std::size_t i = k; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (w.at(i, j) != 0)
        fail(ErrorKind::InvalidArgument, "solve_exact system unsolvable");
  IntMatrix c(k, targets.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j) {
      if (w.at(i, j) % f.d.at(i, i) != 0)
        fail(ErrorKind::InvalidArgument, "solve_exact solution not integral");
      c.at(i, j) = w.at(i, j) / f.d.at(i, i);
    }
  return f.v * c;
}

FinAbGroup subquotient(const IntMatrix& ker_of, const IntMatrix& im_of) {
  if (ker_of.cols() != im_of.rows())
    fail(ErrorKind::DimensionMismatch,
         "subquotient maps not composable: ker_of is " +
             std::to_string(ker_of.rows()) + "x" + std::to_string(ker_of.cols()) +
             ", im_of is " + std::to_string(im_of.rows()) + "x" +
             std::to_string(im_of.cols()));
  if (!(ker_of * im_of).is_zero())
    fail(ErrorKind::CompositionNotZero, "ker_of * im_of is nonzero");
  const IntMatrix basis = kernel_saturated(ker_of);
  // im(im_of) lies in the saturated kernel, so its coordinates in the kernel
  // basis are integral and unique.
  const IntMatrix coords = solve_exact(basis, im_of);
  return cokernel(coords);
}

std::vector<std::vector<std::size_t>> k_subsets_lex(std::size_t n,
                                                    std::size_t k) {
  std::vector<std::vector<std::size_t>> subsets;
  if (k > n) return subsets;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    subsets.push_back(cur);
    // advance to the next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return subsets;
}

IntMatrix exterior_power(const IntMatrix& a, int k) {
  if (!a.is_square())
    fail(ErrorKind::DimensionMismatch, "exterior power of a non-square matrix");
  const std::size_t n = a.rows();
  if (k < 0 || static_cast<std::size_t>(k) > n)
    fail(ErrorKind::DegreeOutOfRange,
         "exterior power degree " + std::to_string(k) + " outside 0.." +
             std::to_string(n));
  const auto subsets = k_subsets_lex(n, static_cast<std::size_t>(k));
  IntMatrix result(subsets.size(), subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      IntMatrix minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < subsets[r].size(); ++i)
        for (std::size_t j = 0; j < subsets[c].size(); ++j)
          minor.at(i, j) = a.at(subsets[r][i], subsets[c][j]);
      result.at(r, c) = determinant(minor);
    }
  return result;
}

long long matrix_order(const IntMatrix& a, long long bound) {
  if (!a.is_square())
    fail(ErrorKind::DimensionMismatch, "matrix order of a non-square matrix");
  if (abs(determinant(a)) != 1)
    fail(ErrorKind::NotInvertible, "matrix is not invertible over Z");
  IntMatrix power = a;
  for (long long e = 1; e <= bound; ++e) {
    if (power.is_identity()) return e;
    power = power * a;
  }
  fail(ErrorKind::NotFiniteOrder,
       "no power up to " + std::to_string(bound) + " is the identity");
}

}  // namespace glr
