#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "glr/classifier.hpp"
#include "glr/cyclic_homology.hpp"
#include "glr/json_io.hpp"
#include "glr/ko_tables.hpp"

namespace glr {

// Every report serializes to JSON and parses back to an equal value.

struct ClassifyReport {
  GroupDescriptor group;
  long long faithful_order = 1;
  GlrStatus status;
  std::optional<WitnessReport> witness;

  bool operator==(const ClassifyReport&) const = default;
};
ClassifyReport build_classify_report(const GroupDescriptor& d);
std::string to_text(const ClassifyReport& r);
Json to_json(const ClassifyReport& r);
ClassifyReport classify_report_from_json(const Json& j);

struct DecomposeReport {
  GroupDescriptor group;
  DecompositionType type;

  bool operator==(const DecomposeReport&) const = default;
};
DecomposeReport build_decompose_report(const GroupDescriptor& d, long long p);
std::string to_text(const DecomposeReport& r);
Json to_json(const DecomposeReport& r);
DecomposeReport decompose_report_from_json(const Json& j);

struct HomologyReport {
  GroupDescriptor group;
  int degree = 0;
  std::vector<HomologySummand> summands;
  FinAbGroup total;

  bool operator==(const HomologyReport&) const = default;
};
HomologyReport build_homology_report(const GroupDescriptor& d, int degree);
std::string to_text(const HomologyReport& r);
Json to_json(const HomologyReport& r);
HomologyReport homology_report_from_json(const Json& j);

struct KoTableReport {
  long long p = 3;
  int s = 1;
  std::array<FinAbGroup, 8> degrees;

  bool operator==(const KoTableReport&) const = default;
};
KoTableReport build_ko_table_report(long long p, int s);
std::string to_text(const KoTableReport& r);
Json to_json(const KoTableReport& r);
KoTableReport ko_table_report_from_json(const Json& j);

struct AhssReport {
  GroupDescriptor group;
  E2Page page;
  std::vector<TateVanishingReport> vanishing;  // per odd prime dividing m

  bool operator==(const AhssReport&) const = default;
};
AhssReport build_ahss_report(const GroupDescriptor& d, int bound);
std::string to_text(const AhssReport& r);
Json to_json(const AhssReport& r);
AhssReport ahss_report_from_json(const Json& j);

}  // namespace glr
