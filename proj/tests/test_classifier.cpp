#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glr/catalog.hpp"
#include "glr/classifier.hpp"
#include "glr/cyclic_homology.hpp"
#include "test_support.hpp"

using glr::CrystalGroup;
using glr::DecompositionType;
using glr::ErrorKind;
using glr::FinAbGroup;
using glr::GlrStatus;
using glr::IntMatrix;
using glr::Verdict;
using test_support::thrown_kind;

namespace {

const IntMatrix rot3{{0, -1}, {1, -1}};

Verdict catalog_verdict(const char* name) {
  return glr::classify(glr::to_group(*glr::find_catalog_entry(name))).verdict;
}

}  // namespace

TEST_CASE("group validation") {
  CHECK(thrown_kind([] { glr::validate_group(0, 3, IntMatrix(0, 0)); }) ==
        ErrorKind::InvalidArgument);
  CHECK(thrown_kind([] { glr::validate_group(2, 0, IntMatrix::identity(2)); }) ==
        ErrorKind::InvalidArgument);
  CHECK(thrown_kind([] { glr::validate_group(3, 3, IntMatrix(2, 3)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(thrown_kind([] { glr::validate_group(1, 2, IntMatrix{{2}}); }) ==
        ErrorKind::NotUnimodular);
  CHECK(thrown_kind([] { glr::validate_group(2, 2, rot3); }) ==
        ErrorKind::OrderMismatch);

  const CrystalGroup g = glr::validate_group(2, 6, rot3);
  CHECK(g.faithful_order == 3);
  CHECK_FALSE(g.faithful());
  CHECK(glr::validate_group(2, 3, rot3).faithful());
}

TEST_CASE("number theory helpers") {
  CHECK(glr::is_prime(2));
  CHECK(glr::is_prime(97));
  CHECK_FALSE(glr::is_prime(1));
  CHECK_FALSE(glr::is_prime(91));
  CHECK(glr::is_square_free(1));
  CHECK(glr::is_square_free(30));
  CHECK_FALSE(glr::is_square_free(12));
  CHECK(glr::prime_divisors(45) == std::vector<long long>{3, 5});
  CHECK(glr::divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("freeness of the action outside the origin") {
  CHECK(glr::is_free_outside_origin(glr::validate_group(2, 3, rot3)));
  CHECK_FALSE(glr::is_free_outside_origin(
      glr::validate_group(4, 3, IntMatrix::identity(4))));
  // vacuous for the trivial quotient
  CHECK(glr::is_free_outside_origin(
      glr::validate_group(1, 1, IntMatrix::identity(1))));
}

TEST_CASE("catalog verdicts") {
  CHECK(catalog_verdict("z4-x-z3") == Verdict::Unknown);
  CHECK(catalog_verdict("free-z2-z3") == Verdict::PositivePsc);
  CHECK(catalog_verdict("schick-like-z6-z3") == Verdict::Counterexample);
  CHECK(catalog_verdict("free-z6-z7") == Verdict::PositivePsc);
  CHECK(catalog_verdict("regular-z3") == Verdict::Unknown);
}

TEST_CASE("counterexample status carries the witness type") {
  const GlrStatus status =
      glr::classify(glr::to_group(*glr::find_catalog_entry("schick-like-z6-z3")));
  REQUIRE(status.witness.has_value());
  CHECK(status.witness->first == 3);
  CHECK(status.witness->second == DecompositionType{3, 4, 0, 1});
  bool found = false;
  for (const glr::HypothesisCheck& c : status.reasons)
    if (c.name == "counterexample type at p = 3") found = c.passed;
  CHECK(found);
}

TEST_CASE("positive verdict does not require square-free order") {
  // Phi_9 companion block: order 9, free outside the origin.
  const CrystalGroup g =
      glr::validate_group(6, 9, test_support::cyclotomic_blocks().at(9));
  const GlrStatus status = glr::classify(g);
  CHECK(status.verdict == Verdict::PositivePsc);
  CHECK_FALSE(status.witness.has_value());
}

TEST_CASE("even order groups are out of scope for both criteria") {
  const CrystalGroup g =
      glr::validate_group(2, 6, test_support::cyclotomic_blocks().at(6));
  const GlrStatus status = glr::classify(g);
  CHECK(status.verdict == Verdict::Unknown);
  CHECK_FALSE(status.reasons.at(0).passed);  // "m odd"
}

TEST_CASE("trivial quotient is unknown") {
  const GlrStatus status =
      glr::classify(glr::validate_group(1, 1, IntMatrix::identity(1)));
  CHECK(status.verdict == Verdict::Unknown);
}

TEST_CASE("primes are scanned in ascending order") {
  // At p = 3 the restriction is trivial, type (8, 0, 0): r >= 4 holds but
  // s + t = 0, so the scan must move on and certify p = 5.
  const IntMatrix a = glr::block_diag(
      {IntMatrix::identity(4), test_support::cyclotomic_blocks().at(5)});
  const GlrStatus status = glr::classify(glr::validate_group(8, 15, a));
  CHECK(status.verdict == Verdict::Counterexample);
  REQUIRE(status.witness.has_value());
  CHECK(status.witness->first == 5);
  CHECK(status.witness->second == DecompositionType{5, 4, 0, 1});
}

TEST_CASE("the two criteria are mutually exclusive") {
  std::mt19937_64 rng(41);
  for (long long m : {3LL, 5LL, 7LL, 15LL}) {
    for (int trial = 0; trial < 10; ++trial) {
      const CrystalGroup g = test_support::random_group(rng, m, 3);
      const bool positive = glr::check_positive(g);
      const auto counter = glr::check_counterexample(g);
      CHECK_FALSE((positive && counter.has_value()));
      if (positive) {
        // freeness forces r = s = 0 at every odd prime dividing m
        for (long long p : glr::prime_divisors(g.m)) {
          if (p == 2) continue;
          const DecompositionType d =
              glr::decomposition_type(glr::sylow_restriction(g, p));
          CHECK(d.r == 0);
          CHECK(d.s == 0);
        }
      }
    }
  }
}

TEST_CASE("classification is invariant under lattice base change") {
  std::mt19937_64 rng(42);
  for (const glr::GroupDescriptor& d : glr::reference_catalog()) {
    const CrystalGroup g = glr::to_group(d);
    const glr::UnimodularPair pair =
        glr::random_unimodular(g.action.rows(), rng, 15, 2);
    const CrystalGroup twisted =
        glr::validate_group(g.n, g.m, pair.u * g.action * pair.u_inv);
    CHECK(glr::classify(twisted).verdict == glr::classify(g).verdict);
  }
}

TEST_CASE("witness report for the counterexample group") {
  const CrystalGroup g =
      glr::to_group(*glr::find_catalog_entry("schick-like-z6-z3"));
  const glr::WitnessReport w = glr::counterexample_witness(g, 3);
  CHECK(w.p == 3);
  CHECK(w.h1_free_rank == 4);
  CHECK(w.h1_p_torsion_present);
  CHECK(w.h5_torsion_certificate == FinAbGroup::elementary(3, 8));
}

TEST_CASE("witness report refuses non-counterexamples") {
  const CrystalGroup free3 =
      glr::to_group(*glr::find_catalog_entry("free-z2-z3"));
  CHECK(thrown_kind([&] { glr::counterexample_witness(free3, 3); }) ==
        ErrorKind::NotACounterexample);
  const CrystalGroup schick =
      glr::to_group(*glr::find_catalog_entry("schick-like-z6-z3"));
  CHECK(thrown_kind([&] { glr::counterexample_witness(schick, 5); }) ==
        ErrorKind::NotACounterexample);
}
