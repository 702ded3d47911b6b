#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glr/cyclic_homology.hpp"
#include "glr/lattice.hpp"
#include "test_support.hpp"

using glr::CrystalGroup;
using glr::ErrorKind;
using glr::FinAbGroup;
using glr::IntMatrix;
using glr::LatticeModule;
using glr::Parity;
using test_support::thrown_kind;

namespace {

const IntMatrix rot3{{0, -1}, {1, -1}};  // order 3, free outside the origin

LatticeModule random_module(std::mt19937_64& rng, long long m) {
  const CrystalGroup g = test_support::random_group(rng, m, 3);
  return LatticeModule(g.action, g.m);
}

}  // namespace

TEST_CASE("module constructor validates its input") {
  CHECK(thrown_kind([] { LatticeModule(IntMatrix(2, 3), 2); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(thrown_kind([] { LatticeModule(IntMatrix::identity(2), 0); }) ==
        ErrorKind::InvalidArgument);
  CHECK(thrown_kind([] { LatticeModule(rot3, 2); }) == ErrorKind::OrderMismatch);
  CHECK(LatticeModule(rot3, 3).rank() == 2);
  // a non-faithful structure is fine: order 6 on an order-3 matrix
  CHECK(LatticeModule(rot3, 6).group_order == 6);
}

TEST_CASE("norm matrix frozen values") {
  CHECK(glr::norm_matrix(LatticeModule(IntMatrix::identity(2), 3)) ==
        IntMatrix{{3, 0}, {0, 3}});
  CHECK(glr::norm_matrix(LatticeModule(rot3, 3)).is_zero());
  const IntMatrix perm{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  CHECK(glr::norm_matrix(LatticeModule(perm, 3)) ==
        IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
}

TEST_CASE("homology of the trivial one-dimensional module") {
  const LatticeModule triv(IntMatrix::identity(1), 3);
  CHECK(glr::group_homology(triv, 0) == FinAbGroup::free(1));
  CHECK(glr::group_homology(triv, 1) == FinAbGroup::cyclic(3));
  CHECK(glr::group_homology(triv, 2) == FinAbGroup::trivial());
  CHECK(glr::group_homology(triv, 3) == FinAbGroup::cyclic(3));
  CHECK(glr::group_homology(triv, 4) == FinAbGroup::trivial());
  CHECK(thrown_kind([&] { glr::group_homology(triv, -1); }) ==
        ErrorKind::NegativeDegree);
}

TEST_CASE("homology of the rotation lattice") {
  const LatticeModule mod(rot3, 3);
  CHECK(glr::group_homology(mod, 0) == FinAbGroup::cyclic(3));
  CHECK(glr::group_homology(mod, 1) == FinAbGroup::trivial());
  CHECK(glr::group_homology(mod, 2) == FinAbGroup::cyclic(3));
  CHECK(glr::coinvariants(mod) == glr::group_homology(mod, 0));
}

TEST_CASE("homology of the regular representation is trivial above zero") {
  const IntMatrix perm{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const LatticeModule mod(perm, 3);
  CHECK(glr::group_homology(mod, 0) == FinAbGroup::free(1));
  for (int k = 1; k <= 4; ++k)
    CHECK(glr::group_homology(mod, k) == FinAbGroup::trivial());
  CHECK(glr::tate_cohomology(mod, Parity::Even) == FinAbGroup::trivial());
  CHECK(glr::tate_cohomology(mod, Parity::Odd) == FinAbGroup::trivial());
}

TEST_CASE("homology is 2-periodic above degree zero") {
  std::mt19937_64 rng(21);
  for (long long m : {3LL, 6LL, 15LL}) {
    const LatticeModule mod = random_module(rng, m);
    for (int k = 1; k <= 2; ++k)
      CHECK(glr::group_homology(mod, k) == glr::group_homology(mod, k + 2));
  }
}

TEST_CASE("homology and Tate groups are additive over direct sums") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const LatticeModule a = random_module(rng, 6);
    const LatticeModule b = random_module(rng, 6);
    const LatticeModule sum(
        glr::block_diag({a.generator_action, b.generator_action}), 6);
    for (int k = 0; k <= 2; ++k)
      CHECK(glr::group_homology(sum, k) ==
            glr::direct_sum(glr::group_homology(a, k),
                            glr::group_homology(b, k)));
    for (Parity parity : {Parity::Even, Parity::Odd})
      CHECK(glr::tate_cohomology(sum, parity) ==
            glr::direct_sum(glr::tate_cohomology(a, parity),
                            glr::tate_cohomology(b, parity)));
  }
}

TEST_CASE("Tate cohomology frozen values") {
  const LatticeModule triv(IntMatrix::identity(2), 3);
  CHECK(glr::tate_cohomology(triv, Parity::Even) ==
        FinAbGroup::elementary(3, 2));
  CHECK(glr::tate_cohomology(triv, Parity::Odd) == FinAbGroup::trivial());
  const LatticeModule mod(rot3, 3);
  CHECK(glr::tate_cohomology(mod, Parity::Even) == FinAbGroup::trivial());
  CHECK(glr::tate_cohomology(mod, Parity::Odd) == FinAbGroup::cyclic(3));
}

TEST_CASE("assembled homology of the free rank-two group") {
  const CrystalGroup g = glr::validate_group(2, 3, rot3);
  const auto summands = glr::lhs_homology_summands(g, 1);
  REQUIRE(summands.size() == 2);
  CHECK(summands[0].i == 0);
  CHECK(summands[0].j == 1);
  CHECK(summands[0].group == FinAbGroup::cyclic(3));
  CHECK(summands[1].i == 1);
  CHECK(summands[1].j == 0);
  CHECK(summands[1].group == FinAbGroup::cyclic(3));
  CHECK(glr::lhs_total_homology(g, 1) == FinAbGroup::elementary(3, 2));
  CHECK(glr::lhs_total_homology(g, 0) == FinAbGroup::free(1));
}

TEST_CASE("degree-one homology equals the abelianization") {
  std::mt19937_64 rng(23);
  for (long long m : {3LL, 5LL, 6LL, 7LL, 15LL}) {
    for (int trial = 0; trial < 8; ++trial) {
      const CrystalGroup g = test_support::random_group(rng, m, 3);
      // Relation matrix of the abelianized presentation: the lattice modulo
      // (action - I), plus an order-m generator.
      IntMatrix torsion(1, 1);
      torsion.at(0, 0) = m;
      const FinAbGroup expected = glr::cokernel(glr::block_diag(
          {g.action - IntMatrix::identity(g.action.rows()), torsion}));
      CHECK(glr::lhs_total_homology(g, 1) == expected);
    }
  }
}

TEST_CASE("product homology by the Kunneth formula") {
  CHECK(glr::homology_torus_lens(4, 3, 5) == FinAbGroup::elementary(3, 8));
  CHECK(glr::homology_torus_lens(0, 3, 0) == FinAbGroup::free(1));
  CHECK(glr::homology_torus_lens(0, 3, 1) == FinAbGroup::cyclic(3));
  CHECK(glr::homology_torus_lens(0, 3, 2) == FinAbGroup::trivial());
  CHECK(glr::homology_torus_lens(2, 5, 2) ==
        glr::direct_sum(FinAbGroup::free(1), FinAbGroup::elementary(5, 2)));
  CHECK(thrown_kind([] { glr::homology_torus_lens(2, 2, 1); }) ==
        ErrorKind::NotOddPrime);
  CHECK(thrown_kind([] { glr::homology_torus_lens(2, 9, 1); }) ==
        ErrorKind::NotOddPrime);
  CHECK(thrown_kind([] { glr::homology_torus_lens(2, 3, -1); }) ==
        ErrorKind::NegativeDegree);
}

TEST_CASE("Kunneth formula matches the assembled homology of a product") {
  // Z^r x Z/p is the split group with trivial action.
  for (long long r : {1LL, 2LL, 3LL, 4LL}) {
    for (long long p : {3LL, 5LL}) {
      const CrystalGroup g = glr::validate_group(
          r, p, IntMatrix::identity(static_cast<std::size_t>(r)));
      for (int k = 0; k <= 6; ++k)
        CHECK(glr::homology_torus_lens(r, p, k) == glr::lhs_total_homology(g, k));
    }
  }
}

TEST_CASE("universal coefficients with Z/2") {
  const FinAbGroup h_i = glr::direct_sum(FinAbGroup::free(2),
                                         FinAbGroup::cyclic(4));
  const FinAbGroup h_prev = glr::direct_sum(FinAbGroup::cyclic(2),
                                            FinAbGroup::cyclic(3));
  CHECK(glr::homology_with_z2(h_i, h_prev) == FinAbGroup::elementary(2, 4));
  CHECK(glr::homology_with_z2(FinAbGroup::cyclic(3), FinAbGroup::cyclic(9)) ==
        FinAbGroup::trivial());
}
