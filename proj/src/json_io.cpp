#include "glr/json_io.hpp"

#include <fstream>
#include <string>

#include "glr/errors.hpp"

namespace glr {

namespace {

long long checked_narrow(const Int& v, const char* what) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    fail(ErrorKind::InvalidArgument,
         std::string(what) + " exceeds the JSON integer range");
  return v.convert_to<long long>();
}

}  // namespace

Json to_json(const FinAbGroup& g) {
  Json factors = Json::array();
  for (const Int& f : g.invariant_factors)
    factors.push_back(checked_narrow(f, "invariant factor"));
  return Json{{"free_rank", g.free_rank}, {"invariant_factors", factors}};
}

FinAbGroup fin_ab_group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("free_rank") ||
      !j.contains("invariant_factors"))
    fail(ErrorKind::InvalidArgument,
         "group object needs free_rank and invariant_factors");
  FinAbGroup g;
  g.free_rank = j.at("free_rank").get<long long>();
  if (g.free_rank < 0) fail(ErrorKind::InvalidArgument, "negative free rank");
  Int prev = 0;
  for (const Json& f : j.at("invariant_factors")) {
    Int v = f.get<long long>();
    if (v < 2) fail(ErrorKind::InvalidArgument, "invariant factor below 2");
    if (prev != 0 && v % prev != 0)
      fail(ErrorKind::InvalidArgument, "invariant factors do not form a chain");
    g.invariant_factors.push_back(v);
    prev = v;
  }
  return g;
}

Json to_json(const GroupDescriptor& d) {
  Json matrix = Json::array();
  for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.matrix.cols(); ++j)
      row.push_back(checked_narrow(d.matrix.at(i, j), "matrix entry"));
    matrix.push_back(row);
  }
  Json result{{"name", d.name}, {"n", d.n}, {"m", d.m}, {"matrix", matrix}};
  return result;
}

GroupDescriptor group_descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") ||
      !j.contains("matrix"))
    fail(ErrorKind::InvalidArgument, "group descriptor needs n, m and matrix");
  GroupDescriptor d;
  if (j.contains("name") && !j.at("name").is_null())
    d.name = j.at("name").get<std::string>();
  d.n = j.at("n").get<long long>();
  d.m = j.at("m").get<long long>();
  if (d.n < 1) fail(ErrorKind::InvalidArgument, "n must be >= 1");
  const Json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d.n))
    fail(ErrorKind::DimensionMismatch, "matrix must have n rows");
  d.matrix = IntMatrix(static_cast<std::size_t>(d.n),
                       static_cast<std::size_t>(d.n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d.n))
      fail(ErrorKind::DimensionMismatch, "matrix rows must have n entries");
    for (std::size_t k = 0; k < row.size(); ++k)
      d.matrix.at(i, k) = row[k].get<long long>();
  }
  return d;
}

Json grid_to_json(const std::map<std::pair<int, int>, FinAbGroup>& entries) {
  Json grid = Json::object();
  for (const auto& [key, group] : entries)
    grid[std::to_string(key.first) + "," + std::to_string(key.second)] =
        to_json(group);
  return grid;
}

std::map<std::pair<int, int>, FinAbGroup> grid_from_json(const Json& j) {
  std::map<std::pair<int, int>, FinAbGroup> entries;
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      fail(ErrorKind::InvalidArgument, "grid key without comma: " + key);
    entries[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
        fin_ab_group_from_json(value);
  }
  return entries;
}

GroupDescriptor load_group_descriptor(const std::string& name_or_path) {
  if (const GroupDescriptor* entry = find_catalog_entry(name_or_path))
    return *entry;
  std::ifstream in(name_or_path);
  if (!in)
    fail(ErrorKind::InvalidArgument,
         "no catalog entry or readable file named '" + name_or_path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::InvalidArgument,
         "could not parse '" + name_or_path + "': " + e.what());
  }
  return group_descriptor_from_json(j);
}

}  // namespace glr
