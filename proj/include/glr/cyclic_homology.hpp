#pragma once

#include <vector>

#include "glr/crystal_group.hpp"
#include "glr/fin_ab_group.hpp"
#include "glr/int_matrix.hpp"

namespace glr {

// Z/group_order-module structure on Z^rank, given by the matrix of a chosen
// generator.
struct LatticeModule {
  IntMatrix generator_action;
  long long group_order = 1;

  LatticeModule(IntMatrix action, long long order);
  std::size_t rank() const { return generator_action.rows(); }

  bool operator==(const LatticeModule&) const = default;
};

// I + g + g^2 + ... + g^(order-1).
IntMatrix norm_matrix(const LatticeModule& mod);

// Homology of the cyclic group with coefficients in the module, computed from
// the 2-periodic free resolution
//   ... --norm--> Z[G] --(g-1)--> Z[G] --norm--> Z[G] --(g-1)--> Z[G] --> Z:
//   H_0        = coker(g - I)
//   H_odd      = ker(g - I) / im(norm)
//   H_{even>0} = ker(norm)  / im(g - I)
FinAbGroup group_homology(const LatticeModule& mod, int degree);

enum class Parity { Even, Odd };

// Tate cohomology of the cyclic group: even = fixed points modulo the norm
// image, odd = norm kernel modulo the (g-1) image.  Always finite, and every
// invariant factor divides the group order.
FinAbGroup tate_cohomology(const LatticeModule& mod, Parity parity);

// Largest quotient with trivial action, coker(g - I); equals H_0.
FinAbGroup coinvariants(const LatticeModule& mod);

struct HomologySummand {
  int i = 0;  // cyclic group homology degree
  int j = 0;  // exterior power degree
  FinAbGroup group;

  bool operator==(const HomologySummand&) const = default;
};

// H_k(Gamma) assembled from the collapsed Lyndon-Hochschild-Serre spectral
// sequence of Z^n -> Gamma -> Z/m: the direct sum of H_i(Z/m; Lambda^j Z^n)
// over i + j = k.  The collapse hypothesis (valid for square-free m) is the
// caller's responsibility and is not verified here.
std::vector<HomologySummand> lhs_homology_summands(const CrystalGroup& g, int k);
FinAbGroup lhs_total_homology(const CrystalGroup& g, int k);

// H_k(T^r x BZ/p) by the Kunneth formula, with H_b(BZ/p) = Z, Z/p, 0, Z/p,
// 0, ... hardcoded; the torus factors are free, so no Tor terms arise.
FinAbGroup homology_torus_lens(long long r, long long p, int k);

// H_i(-; Z/2) by universal coefficients: H_i tensor Z/2 plus Tor(H_{i-1}, Z/2).
FinAbGroup homology_with_z2(const FinAbGroup& h_i, const FinAbGroup& h_i_minus_1);

}  // namespace glr
