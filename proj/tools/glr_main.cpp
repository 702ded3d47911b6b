// Command line front end: classify split crystallographic groups against the
// positive and negative scalar curvature criteria, and print the supporting
// algebraic invariants (module decompositions, homology, ko tables, E^2 data).
#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <string>

#include "glr/catalog.hpp"
#include "glr/classifier.hpp"
#include "glr/cyclic_homology.hpp"
#include "glr/decomposition.hpp"
#include "glr/errors.hpp"
#include "glr/json_io.hpp"
#include "glr/lattice.hpp"
#include "glr/reports.hpp"
#include "glr/smith.hpp"

namespace {

int exit_code_for(const glr::Error& e) {
  switch (e.kind()) {
    case glr::ErrorKind::PrimeDoesNotDivideOrder:
    case glr::ErrorKind::NotSquareFree:
      return 3;
    case glr::ErrorKind::InternalInconsistency:
      return 1;
    default:
      return 2;
  }
}

void selftest_check(bool ok, const std::string& what) {
  if (!ok)
    glr::fail(glr::ErrorKind::InternalInconsistency, "selftest: " + what);
  std::cout << "[ok] " << what << "\n";
}

glr::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                             std::size_t cols) {
  glr::IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.at(i, j) = static_cast<long long>(rng() % 19) - 9;
  return a;
}

int run_selftest(unsigned long long seed) {
  std::mt19937_64 rng(seed);

  bool smith_ok = true;
  for (int trial = 0; trial < 25 && smith_ok; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const glr::IntMatrix a = random_matrix(rng, rows, cols);
    const glr::SmithForm f = glr::smith_normal_form(a);
    smith_ok = f.u * a * f.v == f.d && abs(glr::determinant(f.u)) == 1 &&
               abs(glr::determinant(f.v)) == 1;
    for (std::size_t k = 0; smith_ok && k + 1 < std::min(rows, cols); ++k) {
      const glr::Int &d0 = f.d.at(k, k), &d1 = f.d.at(k + 1, k + 1);
      smith_ok = d0 >= 0 && (d0 != 0 ? d1 % d0 == 0 : d1 == 0);
    }
  }
  selftest_check(smith_ok, "smith normal form properties on random matrices");

  const std::map<std::string, glr::Verdict> expected = {
      {"z4-x-z3", glr::Verdict::Unknown},
      {"free-z2-z3", glr::Verdict::PositivePsc},
      {"schick-like-z6-z3", glr::Verdict::Counterexample},
      {"free-z6-z7", glr::Verdict::PositivePsc},
      {"regular-z3", glr::Verdict::Unknown}};
  bool catalog_ok = true;
  for (const glr::GroupDescriptor& d : glr::reference_catalog()) {
    const glr::GlrStatus status = glr::classify(glr::to_group(d));
    const auto it = expected.find(d.name);
    catalog_ok = catalog_ok && it != expected.end() &&
                 status.verdict == it->second;
  }
  selftest_check(catalog_ok, "reference catalog verdicts");

  bool decomp_ok = true;
  for (long long p : {3LL, 5LL}) {
    for (const glr::DecompositionType want :
         {glr::DecompositionType{p, 2, 1, 0}, glr::DecompositionType{p, 1, 0, 2},
          glr::DecompositionType{p, 0, 1, 1}}) {
      const glr::LatticeModule built = glr::build_module(want);
      const glr::LatticeModule twisted =
          glr::conjugate_random(built, static_cast<unsigned long long>(rng()));
      decomp_ok = decomp_ok && glr::decomposition_type(built) == want &&
                  glr::decomposition_type(twisted) == want;
    }
  }
  selftest_check(decomp_ok, "module decomposition round trips");

  bool abelian_ok = true;
  for (const glr::GroupDescriptor& d : glr::reference_catalog()) {
    if (!glr::is_square_free(d.m)) continue;
    const glr::CrystalGroup g = glr::to_group(d);
    glr::IntMatrix torsion(1, 1);
    torsion.at(0, 0) = g.m;
    const glr::FinAbGroup direct = glr::cokernel(glr::block_diag(
        {g.action - glr::IntMatrix::identity(g.action.rows()), torsion}));
    abelian_ok = abelian_ok && glr::lhs_total_homology(g, 1) == direct;
  }
  selftest_check(abelian_ok, "degree one homology equals the abelianization");

  std::cout << "selftest passed (seed " << seed << ")\n";
  return 0;
}

void emit(const std::string& text, const glr::Json& json, bool as_json) {
  if (as_json)
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact classifier for split crystallographic groups Z^n x| Z/m:\n"
      "positive scalar curvature certificates and counterexample witnesses."};
  app.require_subcommand(1);

  std::string input, show_name;
  long long prime = 0;
  int degree = 0, power = 1, max_degree = 0;
  unsigned long long seed = 20260815;
  bool as_json = false;

  CLI::App* classify = app.add_subcommand(
      "classify", "Run both curvature criteria on a group");
  classify->add_option("input", input, "catalog name or JSON file")->required();
  classify->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* decompose = app.add_subcommand(
      "decompose", "Restrict the lattice to a Sylow Z/p and split it");
  decompose->add_option("input", input, "catalog name or JSON file")->required();
  decompose->add_option("--prime", prime, "odd prime dividing m")->required();
  decompose->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* homology = app.add_subcommand(
      "homology", "Integral group homology of Z^n x| Z/m (square-free m)");
  homology->add_option("input", input, "catalog name or JSON file")->required();
  homology->add_option("--degree", degree, "homology degree")->required();
  homology->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* ko_table = app.add_subcommand(
      "ko-table", "KO groups of the real group algebra of Z/p^s");
  ko_table->add_option("--prime", prime, "odd prime p")->required();
  ko_table->add_option("--power", power, "exponent s >= 1");
  ko_table->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* ahss = app.add_subcommand(
      "ahss", "E^2 page of the ko spectral sequence plus Tate vanishing");
  ahss->add_option("input", input, "catalog name or JSON file")->required();
  ahss->add_option("--max-degree", max_degree, "largest total degree i + j")
      ->required();
  ahss->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in example groups");
  catalog->require_subcommand(1);
  CLI::App* catalog_list = catalog->add_subcommand("list", "List the names");
  CLI::App* catalog_show =
      catalog->add_subcommand("show", "Print one entry as JSON");
  catalog_show->add_option("name", show_name, "catalog name")->required();

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run a quick internal consistency battery");
  selftest->add_option("--seed", seed, "random seed for the battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      const glr::ClassifyReport r =
          glr::build_classify_report(glr::load_group_descriptor(input));
      emit(glr::to_text(r), glr::to_json(r), as_json);
    } else if (decompose->parsed()) {
      const glr::DecomposeReport r =
          glr::build_decompose_report(glr::load_group_descriptor(input), prime);
      emit(glr::to_text(r), glr::to_json(r), as_json);
    } else if (homology->parsed()) {
      const glr::HomologyReport r =
          glr::build_homology_report(glr::load_group_descriptor(input), degree);
      emit(glr::to_text(r), glr::to_json(r), as_json);
    } else if (ko_table->parsed()) {
      const glr::KoTableReport r = glr::build_ko_table_report(prime, power);
      emit(glr::to_text(r), glr::to_json(r), as_json);
    } else if (ahss->parsed()) {
      const glr::AhssReport r =
          glr::build_ahss_report(glr::load_group_descriptor(input), max_degree);
      emit(glr::to_text(r), glr::to_json(r), as_json);
    } else if (catalog_list->parsed()) {
      for (const glr::GroupDescriptor& d : glr::reference_catalog())
        std::cout << d.name << "  (n = " << d.n << ", m = " << d.m << ")\n";
    } else if (catalog_show->parsed()) {
      const glr::GroupDescriptor* entry = glr::find_catalog_entry(show_name);
      if (entry == nullptr)
        glr::fail(glr::ErrorKind::InvalidArgument,
                  "no catalog entry named '" + show_name + "'");
      std::cout << glr::to_json(*entry).dump(2) << "\n";
    } else if (selftest->parsed()) {
      return run_selftest(seed);
    }
  } catch (const glr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
