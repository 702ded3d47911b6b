#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "glr/crystal_group.hpp"
#include "glr/int_matrix.hpp"

namespace glr {

struct GroupDescriptor {
  std::string name;  // may be empty
  long long n = 1;
  long long m = 1;
  IntMatrix matrix;

  bool operator==(const GroupDescriptor&) const = default;
};

// Bundled read-only reference groups.
const std::vector<GroupDescriptor>& reference_catalog();
const GroupDescriptor* find_catalog_entry(std::string_view name);

CrystalGroup to_group(const GroupDescriptor& d);

}  // namespace glr
