#include "glr/reports.hpp"

#include <sstream>
#include <string>

#include "glr/errors.hpp"

namespace glr {

namespace {

std::string group_header(const GroupDescriptor& d) {
  std::ostringstream out;
  out << "group: " << (d.name.empty() ? "(unnamed)" : d.name) << " (n = " << d.n
      << ", m = " << d.m << ")";
  return out.str();
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "PositivePSC") return Verdict::PositivePsc;
  if (s == "Counterexample") return Verdict::Counterexample;
  if (s == "Unknown") return Verdict::Unknown;
  fail(ErrorKind::InvalidArgument, "unknown verdict '" + s + "'");
}

Json to_json(const DecompositionType& t) {
  return Json{{"p", t.p}, {"r", t.r}, {"s", t.s}, {"t", t.t}};
}

DecompositionType decomposition_type_from_json(const Json& j) {
  return {j.at("p").get<long long>(), j.at("r").get<long long>(),
          j.at("s").get<long long>(), j.at("t").get<long long>()};
}

Json to_json(const WitnessReport& w) {
  return Json{{"p", w.p},
              {"h1_free_rank", w.h1_free_rank},
              {"h1_p_torsion_present", w.h1_p_torsion_present},
              {"h5_torsion_certificate", to_json(w.h5_torsion_certificate)}};
}

WitnessReport witness_from_json(const Json& j) {
  return {j.at("p").get<long long>(), j.at("h1_free_rank").get<long long>(),
          j.at("h1_p_torsion_present").get<bool>(),
          fin_ab_group_from_json(j.at("h5_torsion_certificate"))};
}

std::string type_string(const DecompositionType& d) {
  std::ostringstream out;
  out << "(r, s, t) = (" << d.r << ", " << d.s << ", " << d.t << ")";
  return out.str();
}

}  // namespace

ClassifyReport build_classify_report(const GroupDescriptor& d) {
  const CrystalGroup g = to_group(d);
  ClassifyReport report{d, g.faithful_order, classify(g), std::nullopt};
  if (report.status.verdict == Verdict::Counterexample)
    report.witness = counterexample_witness(g, report.status.witness->first);
  return report;
}

std::string to_text(const ClassifyReport& r) {
  std::ostringstream out;
  out << group_header(r.group) << "\n";
  out << "faithful order: " << r.faithful_order
      << (r.faithful_order == r.group.m ? "" : " (action is not faithful)")
      << "\n";
  out << "verdict: " << to_string(r.status.verdict) << "\n";
  out << "hypotheses:\n";
  for (const HypothesisCheck& c : r.status.reasons)
    out << "  [" << (c.passed ? "pass" : "fail") << "] " << c.name << ": "
        << c.detail << "\n";
  if (r.status.witness)
    out << "counterexample at p = " << r.status.witness->first << ": "
        << type_string(r.status.witness->second) << "\n";
  if (r.witness) {
    out << "witness:\n";
    out << "  H_1 free rank: " << r.witness->h1_free_rank << "\n";
    out << "  H_1 has p-torsion: "
        << (r.witness->h1_p_torsion_present ? "yes" : "no") << "\n";
    out << "  H_5(T^4 x BZ/" << r.witness->p
        << ") certificate: " << r.witness->h5_torsion_certificate.to_string()
        << "\n";
  }
  return out.str();
}

Json to_json(const ClassifyReport& r) {
  Json hypotheses = Json::array();
  for (const HypothesisCheck& c : r.status.reasons)
    hypotheses.push_back(
        Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  Json counterexample;
  if (r.status.witness)
    counterexample = Json{{"p", r.status.witness->first},
                          {"type", to_json(r.status.witness->second)}};
  return Json{{"group", to_json(r.group)},
              {"faithful_order", r.faithful_order},
              {"verdict", to_string(r.status.verdict)},
              {"hypotheses", hypotheses},
              {"counterexample", counterexample},
              {"witness", r.witness ? to_json(*r.witness) : Json()}};
}

ClassifyReport classify_report_from_json(const Json& j) {
  ClassifyReport r;
  r.group = group_descriptor_from_json(j.at("group"));
  r.faithful_order = j.at("faithful_order").get<long long>();
  r.status.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const Json& c : j.at("hypotheses"))
    r.status.reasons.push_back({c.at("name").get<std::string>(),
                                c.at("passed").get<bool>(),
                                c.at("detail").get<std::string>()});
  if (!j.at("counterexample").is_null())
    r.status.witness = std::make_pair(
        j.at("counterexample").at("p").get<long long>(),
        decomposition_type_from_json(j.at("counterexample").at("type")));
  if (!j.at("witness").is_null())
    r.witness = witness_from_json(j.at("witness"));
  return r;
}

DecomposeReport build_decompose_report(const GroupDescriptor& d, long long p) {
  const CrystalGroup g = to_group(d);
  return {d, decomposition_type(sylow_restriction(g, p))};
}

std::string to_text(const DecomposeReport& r) {
  std::ostringstream out;
  out << group_header(r.group) << "\n";
  out << "restriction to Z/" << r.type.p << ": Z^r + (Z[Z/p])^s + I^t with "
      << type_string(r.type) << "\n";
  out << "rank check: " << r.type.r << " + " << r.type.p << "*" << r.type.s
      << " + " << (r.type.p - 1) << "*" << r.type.t << " = "
      << r.type.total_rank() << "\n";
  return out.str();
}

Json to_json(const DecomposeReport& r) {
  return Json{{"group", to_json(r.group)}, {"type", to_json(r.type)}};
}

DecomposeReport decompose_report_from_json(const Json& j) {
  return {group_descriptor_from_json(j.at("group")),
          decomposition_type_from_json(j.at("type"))};
}

HomologyReport build_homology_report(const GroupDescriptor& d, int degree) {
  const CrystalGroup g = to_group(d);
  if (!is_square_free(g.m))
    fail(ErrorKind::NotSquareFree,
         "m = " + std::to_string(g.m) +
             " is not square-free; the assembled homology needs the collapse");
  HomologyReport r{d, degree, lhs_homology_summands(g, degree), {}};
  std::vector<FinAbGroup> parts;
  for (const HomologySummand& s : r.summands) parts.push_back(s.group);
  r.total = direct_sum(parts);
  return r;
}

std::string to_text(const HomologyReport& r) {
  std::ostringstream out;
  out << group_header(r.group) << "\n";
  out << "H_" << r.degree << " = " << r.total.to_string() << "\n";
  out << "summands (i = cyclic degree, j = exterior degree):\n";
  for (const HomologySummand& s : r.summands)
    out << "  (" << s.i << ", " << s.j << "): " << s.group.to_string() << "\n";
  return out.str();
}

Json to_json(const HomologyReport& r) {
  Json summands = Json::array();
  for (const HomologySummand& s : r.summands)
    summands.push_back(Json{{"i", s.i}, {"j", s.j}, {"group", to_json(s.group)}});
  return Json{{"group", to_json(r.group)},
              {"degree", r.degree},
              {"summands", summands},
              {"total", to_json(r.total)}};
}

HomologyReport homology_report_from_json(const Json& j) {
  HomologyReport r;
  r.group = group_descriptor_from_json(j.at("group"));
  r.degree = j.at("degree").get<int>();
  for (const Json& s : j.at("summands"))
    r.summands.push_back({s.at("i").get<int>(), s.at("j").get<int>(),
                          fin_ab_group_from_json(s.at("group"))});
  r.total = fin_ab_group_from_json(j.at("total"));
  return r;
}

KoTableReport build_ko_table_report(long long p, int s) {
  KoTableReport r{p, s, {}};
  for (int j = 0; j < 8; ++j)
    r.degrees[static_cast<std::size_t>(j)] = ko_real_group_algebra(p, s, j);
  return r;
}

std::string to_text(const KoTableReport& r) {
  std::ostringstream out;
  out << "KO_j(R[Z/" << r.p << "^" << r.s << "]), 8-periodic:\n";
  for (int j = 0; j < 8; ++j)
    out << "  j = " << j << ": "
        << r.degrees[static_cast<std::size_t>(j)].to_string() << "\n";
  return out.str();
}

Json to_json(const KoTableReport& r) {
  Json degrees = Json::array();
  for (const FinAbGroup& g : r.degrees) degrees.push_back(to_json(g));
  return Json{{"p", r.p}, {"s", r.s}, {"degrees", degrees}};
}

KoTableReport ko_table_report_from_json(const Json& j) {
  KoTableReport r;
  r.p = j.at("p").get<long long>();
  r.s = j.at("s").get<int>();
  const Json& degrees = j.at("degrees");
  if (degrees.size() != 8)
    fail(ErrorKind::InvalidArgument, "ko table must have 8 degrees");
  for (std::size_t i = 0; i < 8; ++i)
    r.degrees[i] = fin_ab_group_from_json(degrees[i]);
  return r;
}

AhssReport build_ahss_report(const GroupDescriptor& d, int bound) {
  const CrystalGroup g = to_group(d);
  AhssReport r{d, ahss_e2(g, bound), {}};
  const int tate_bound = std::min<long long>(bound, g.n);
  for (long long p : prime_divisors(g.m))
    if (p % 2 == 1) r.vanishing.push_back(tate_vanishing_report(g, p, tate_bound));
  return r;
}

std::string to_text(const AhssReport& r) {
  std::ostringstream out;
  out << group_header(r.group) << "\n";
  out << "E^2 entries H_i(Gamma; ko_j) for i + j <= " << r.page.max_total_degree
      << " (trivial entries omitted):\n";
  for (const auto& [key, group] : r.page.entries)
    if (!group.is_trivial())
      out << "  (" << key.first << ", " << key.second
          << "): " << group.to_string() << "\n";
  for (const TateVanishingReport& v : r.vanishing) {
    out << "Tate vanishing at p = " << v.prime
        << " (degrees 0.." << v.bound
        << "): " << (v.vanishing_holds ? "holds" : "fails") << "\n";
    for (const auto& [key, group] : v.entries)
      if (!group.is_trivial())
        out << "  Tate^" << key.first + 1 << " at j = " << key.second << ": "
            << group.to_string() << "\n";
  }
  return out.str();
}

Json to_json(const AhssReport& r) {
  Json vanishing = Json::array();
  for (const TateVanishingReport& v : r.vanishing)
    vanishing.push_back(Json{{"prime", v.prime},
                             {"bound", v.bound},
                             {"entries", grid_to_json(v.entries)},
                             {"vanishing_holds", v.vanishing_holds}});
  return Json{{"group", to_json(r.group)},
              {"max_total_degree", r.page.max_total_degree},
              {"entries", grid_to_json(r.page.entries)},
              {"tate_vanishing", vanishing}};
}

AhssReport ahss_report_from_json(const Json& j) {
  AhssReport r;
  r.group = group_descriptor_from_json(j.at("group"));
  r.page.max_total_degree = j.at("max_total_degree").get<int>();
  r.page.entries = grid_from_json(j.at("entries"));
  for (const Json& v : j.at("tate_vanishing")) {
    TateVanishingReport t;
    t.prime = v.at("prime").get<long long>();
    t.bound = v.at("bound").get<int>();
    t.entries = grid_from_json(v.at("entries"));
    t.vanishing_holds = v.at("vanishing_holds").get<bool>();
    r.vanishing.push_back(std::move(t));
  }
  return r;
}

}  // namespace glr
