// idem2: construct, verify, classify and enumerate the idempotents of the
// ring of 2x2 matrices over Z_n[x1..xv] truncated at total degree D.
//
// All structured data crosses the boundary as JSON (stdin/--input to stdout).
// Exit codes: 0 success, 1 domain error, 2 usage or parse error. Domain
// errors are reported as {"error": {"kind", "detail"}} on stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idem2/json_io.hpp"

namespace {

using idem2::Json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) idem2::raise("ParseError", "cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Cell {
  std::uint64_t n = 0;
  std::uint32_t vars = 0;
  std::uint32_t trunc = 0;
};

// The compiled-in selftest grid: every ring small enough for the exhaustive
// oracle to sweep in seconds, covering one and two variables and all the
// coprime-split shapes up to three factors (n = 12).
const std::vector<Cell> kDefaultGrid = {
    {2, 0, 0}, {3, 0, 0}, {4, 0, 0},  {5, 0, 0}, {6, 0, 0},
    {8, 0, 0}, {9, 0, 0}, {10, 0, 0}, {12, 0, 0},
    {2, 1, 2}, {3, 1, 1}, {4, 1, 1},  {6, 1, 1}, {2, 2, 1}};

std::vector<Cell> load_grid(const std::string& path, std::uint64_t& budget) {
  Json j = idem2::parse_json_text(read_input(path));
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) {
    idem2::raise("ParseError", "grid file must be {\"cells\": [[n, vars, trunc], ...]}");
  }
  if (j.contains("budget")) {
    if (!j["budget"].is_number_unsigned()) {
      idem2::raise("ParseError", "'budget' must be a non-negative integer");
    }
    budget = j["budget"].get<std::uint64_t>();
  }
  std::vector<Cell> grid;
  for (const Json& jc : j["cells"]) {
    if (!jc.is_array() || jc.size() != 3 || !jc[0].is_number_unsigned() ||
        !jc[1].is_number_unsigned() || !jc[2].is_number_unsigned()) {
      idem2::raise("ParseError", "each grid cell must be [n, vars, trunc]");
    }
    grid.push_back(Cell{jc[0].get<std::uint64_t>(), jc[1].get<std::uint32_t>(),
                        jc[2].get<std::uint32_t>()});
  }
  return grid;
}

int cmd_construct(const std::string& input) {
  idem2::IdempotentSpec spec =
      idem2::spec_from_json(idem2::parse_json_text(read_input(input)));
  idem2::Mat2 a = idem2::construct_case(spec);
  Json out = idem2::mat2_to_json(a);
  out["verified"] = idem2::is_idempotent(a);
  emit(out);
  return 0;
}

int cmd_verify(const std::string& input) {
  idem2::Mat2 a = idem2::mat2_from_json(idem2::parse_json_text(read_input(input)));
  bool idem = idem2::is_idempotent(a);
  bool ch = idem2::cayley_hamilton_residual(a) == idem2::Mat2::zero(a.context());
  emit(Json{{"idempotent", idem}, {"cayley_hamilton_zero", ch}});
  return 0;
}

int cmd_classify(const std::string& input) {
  idem2::Mat2 a = idem2::mat2_from_json(idem2::parse_json_text(read_input(input)));
  emit(idem2::spec_to_json(idem2::classify(a)));
  return 0;
}

Json census(const Cell& cell, std::uint64_t budget, unsigned jobs, bool with_oracle,
            bool* oracle_passed) {
  idem2::TruncationContext ctx(idem2::Modulus(cell.n), cell.vars, cell.trunc);
  auto classified = idem2::enumerate_all(ctx, budget);

  Json splits = Json::array();
  for (const auto& split : idem2::CoprimeSplit::all_splits(ctx.modulus())) {
    std::size_t count = 0;
    for (const auto& ci : classified) {
      if (ci.spec.split() == split) ++count;
    }
    splits.push_back(Json{{"P", split.part(idem2::Role::P)},
                          {"Q", split.part(idem2::Role::Q)},
                          {"R", split.part(idem2::Role::R)},
                          {"count", count}});
  }

  Json out{{"n", cell.n},
           {"vars", cell.vars},
           {"trunc", cell.trunc},
           {"count", classified.size()},
           {"splits", std::move(splits)}};

  if (with_oracle) {
    std::vector<idem2::Mat2> constructed;
    constructed.reserve(classified.size());
    for (auto& ci : classified) constructed.push_back(std::move(ci.matrix));
    auto brute = idem2::brute_force_idempotents(ctx, budget, jobs);
    auto report = idem2::compare_sets(constructed, brute);
    if (oracle_passed) *oracle_passed = report.passed;
    out["oracle"] = idem2::report_to_json(report);
  }
  return out;
}

int cmd_enumerate(const Cell& cell, std::uint64_t budget, unsigned jobs,
                  bool with_oracle) {
  bool passed = true;
  emit(census(cell, budget, jobs, with_oracle, &passed));
  return passed ? 0 : 1;
}

int cmd_selftest(const std::vector<Cell>& grid, std::uint64_t budget, unsigned jobs) {
  Json cells = Json::array();
  bool all_passed = true;
  for (const Cell& cell : grid) {
    bool passed = true;
    Json c = census(cell, budget, jobs, true, &passed);
    c["passed"] = passed;
    all_passed = all_passed && passed;
    cells.push_back(std::move(c));
  }
  emit(Json{{"passed", all_passed}, {"cells", std::move(cells)}});
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact idempotents of 2x2 matrices over truncated power series with Z_n "
      "coefficients"};
  app.require_subcommand(1);

  std::string construct_input = "-";
  auto* construct =
      app.add_subcommand("construct", "Build the idempotent matrix for a spec");
  construct->add_option("--input", construct_input, "spec JSON file, - for stdin");

  std::string verify_input = "-";
  auto* verify = app.add_subcommand("verify", "Check a matrix for idempotency");
  verify->add_option("--input", verify_input, "matrix JSON file, - for stdin");

  std::string classify_input = "-";
  auto* classify =
      app.add_subcommand("classify", "Recover the canonical spec of an idempotent");
  classify->add_option("--input", classify_input, "matrix JSON file, - for stdin");

  Cell cell;
  std::uint64_t enum_budget = idem2::kDefaultBudget;
  unsigned enum_jobs = 1;
  bool with_oracle = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "Census of all idempotents of one ring");
  enumerate->add_option("n", cell.n, "coefficient modulus")->required();
  enumerate->add_option("vars", cell.vars, "number of variables")->default_val(0);
  enumerate->add_option("trunc", cell.trunc, "total-degree cutoff")->default_val(0);
  enumerate->add_flag("--with-oracle", with_oracle,
                      "cross-check against exhaustive search");
  enumerate->add_option("--budget", enum_budget, "max candidates to search")
      ->envname("IDEM2_BUDGET");
  enumerate->add_option("--jobs", enum_jobs, "worker threads for the search");

  std::string grid_path;
  std::uint64_t selftest_budget = idem2::kDefaultBudget;
  unsigned selftest_jobs = 1;
  auto* selftest = app.add_subcommand(
      "selftest", "Run the oracle-checked census over the built-in grid");
  selftest->add_option("--grid", grid_path,
                       "grid JSON file {\"budget\": N, \"cells\": [[n, vars, trunc], ...]}");
  selftest->add_option("--budget", selftest_budget, "max candidates per cell")
      ->envname("IDEM2_BUDGET");
  selftest->add_option("--jobs", selftest_jobs, "worker threads per cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(construct_input);
    if (verify->parsed()) return cmd_verify(verify_input);
    if (classify->parsed()) return cmd_classify(classify_input);
    if (enumerate->parsed())
      return cmd_enumerate(cell, enum_budget, enum_jobs, with_oracle);
    if (selftest->parsed()) {
      std::vector<Cell> grid = kDefaultGrid;
      if (!grid_path.empty()) {
        std::uint64_t file_budget = selftest_budget;
        grid = load_grid(grid_path, file_budget);
        if (selftest->count("--budget") == 0) selftest_budget = file_budget;
      }
      return cmd_selftest(grid, selftest_budget, selftest_jobs);
    }
  } catch (const idem2::Error& e) {
    emit(Json{{"error", Json{{"kind", e.kind()}, {"detail", e.detail()}}}});
    return e.kind() == "ParseError" ? 2 : 1;
  }
  return 2;
}
