#include "glr/catalog.hpp"

namespace glr {

namespace {

std::vector<GroupDescriptor> make_catalog() {
  std::vector<GroupDescriptor> entries;

  // Trivial Z/3 action on Z^4: Schick-style torsion in H_1 but no
  // counterexample type (s + t = 0).
  entries.push_back({"z4-x-z3", 4, 3,
                     IntMatrix{{1, 0, 0, 0},
                               {0, 1, 0, 0},
                               {0, 0, 1, 0},
                               {0, 0, 0, 1}}});

  // Free Z/3 rotation of the hexagonal lattice.
  entries.push_back({"free-z2-z3", 2, 3, IntMatrix{{0, -1}, {1, -1}}});

  // Z^4 trivial plus one augmentation-ideal block: the minimal
  // counterexample shape (r, s, t) = (4, 0, 1).
  entries.push_back({"schick-like-z6-z3", 6, 3,
                     IntMatrix{{1, 0, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 0},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 0, 0, 0, -1},
                               {0, 0, 0, 0, 1, -1}}});

  // Companion matrix of 1 + x + ... + x^6: free Z/7 action on Z^6.
  entries.push_back({"free-z6-z7", 6, 7,
                     IntMatrix{{0, 0, 0, 0, 0, -1},
                               {1, 0, 0, 0, 0, -1},
                               {0, 1, 0, 0, 0, -1},
                               {0, 0, 1, 0, 0, -1},
                               {0, 0, 0, 1, 0, -1},
                               {0, 0, 0, 0, 1, -1}}});

  // Regular representation of Z/3 as a cyclic permutation.
  entries.push_back({"regular-z3", 3, 3,
                     IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}});

  return entries;
}

}  // namespace

const std::vector<GroupDescriptor>& reference_catalog() {
  static const std::vector<GroupDescriptor> catalog = make_catalog();
  return catalog;
}

const GroupDescriptor* find_catalog_entry(std::string_view name) {
  for (const GroupDescriptor& d : reference_catalog())
    if (d.name == name) return &d;
  return nullptr;
}

CrystalGroup to_group(const GroupDescriptor& d) {
  return validate_group(d.n, d.m, d.matrix);
}

}  // namespace glr
