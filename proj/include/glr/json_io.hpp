#pragma once

#include <string>

#include <json.hpp>

#include "glr/catalog.hpp"
#include "glr/fin_ab_group.hpp"
#include "glr/ko_tables.hpp"

namespace glr {

using Json = nlohmann::ordered_json;

Json to_json(const FinAbGroup& g);
FinAbGroup fin_ab_group_from_json(const Json& j);

Json to_json(const GroupDescriptor& d);
GroupDescriptor group_descriptor_from_json(const Json& j);

// Serialized as a flat object keyed "i,j".
Json grid_to_json(const std::map<std::pair<int, int>, FinAbGroup>& entries);
std::map<std::pair<int, int>, FinAbGroup> grid_from_json(const Json& j);

// Resolves a bundled catalog name first, then a filesystem path.
GroupDescriptor load_group_descriptor(const std::string& name_or_path);

}  // namespace glr
