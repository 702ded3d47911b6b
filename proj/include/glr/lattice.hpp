#pragma once

#include <vector>

#include "glr/fin_ab_group.hpp"
#include "glr/int_matrix.hpp"
#include "glr/smith.hpp"

namespace glr {

// Columns form a basis of the saturated kernel ker(a) in Z^cols; the quotient
// of Z^cols by the column span is torsion-free.
IntMatrix kernel_saturated(const IntMatrix& a);

// Z^rows / column-span(a).
FinAbGroup cokernel(const IntMatrix& a);

// ker(ker_of) / im(im_of).  Requires ker_of * im_of = 0.
FinAbGroup subquotient(const IntMatrix& ker_of, const IntMatrix& im_of);

// The unique integer solution x of basis * x = targets; basis must have full
// column rank and the system must be integrally solvable.
IntMatrix solve_exact(const IntMatrix& basis, const IntMatrix& targets);

// k-th compound matrix: entry (R, C) is the minor det a[R, C] over
// lexicographically ordered k-element row and column subsets, no extra sign.
// Functorial: exterior_power(a * b, k) = exterior_power(a, k) * exterior_power(b, k).
IntMatrix exterior_power(const IntMatrix& a, int k);

// Least e >= 1 with a^e = I; requires |det a| = 1 and e <= bound.
long long matrix_order(const IntMatrix& a, long long bound);

std::vector<std::vector<std::size_t>> k_subsets_lex(std::size_t n, std::size_t k);

}  // namespace glr
