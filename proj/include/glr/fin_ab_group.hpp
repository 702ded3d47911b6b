#pragma once

#include <string>
#include <vector>

#include "glr/int_matrix.hpp"

namespace glr {

// Z^free_rank + Z/f_1 + ... + Z/f_k in invariant factor form:
// 2 <= f_1 and f_i divides f_{i+1}.
struct FinAbGroup {
  long long free_rank = 0;
  std::vector<Int> invariant_factors;

  bool operator==(const FinAbGroup&) const = default;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  std::string to_string() const;

  static FinAbGroup trivial();
  static FinAbGroup free(long long rank);
  static FinAbGroup cyclic(const Int& order);  // order >= 1; Z/1 is trivial
  static FinAbGroup elementary(const Int& p, long long copies);  // (Z/p)^copies
};

// Canonical invariant factor form of the direct sum.
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup direct_sum(const std::vector<FinAbGroup>& parts);

}  // namespace glr
