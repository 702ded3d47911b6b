#pragma once

#include "glr/int_matrix.hpp"

namespace glr {

// u * a * v = d with u, v unimodular and d diagonal, nonnegative, each
// diagonal entry dividing the next; zero entries trail the chain.  d is the
// Smith normal form of a and is unique.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Number of nonzero invariant factors.
std::size_t rank(const IntMatrix& a);

}  // namespace glr
