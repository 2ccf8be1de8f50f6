// pellkit: exact Pell-equation toolkit CLI.
//
// Subcommands: cf, solve, family, verify. Exit codes: 0 determinate
// success, 1 verification discrepancy, 2 domain/usage error,
// 3 undetermined verdict.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "pellkit/cf.hpp"
#include "pellkit/family.hpp"
#include "pellkit/lucas.hpp"
#include "pellkit/oracle.hpp"
#include "pellkit/pell.hpp"

namespace {

using pellkit::Int;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDiscrepancy = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUndetermined = 3;

Int parse_int(const std::string& text, const char* what) {
  if (text.empty()) throw pellkit::domain_error(std::string(what) + ": empty");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    throw pellkit::domain_error(std::string(what) + ": not an integer");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw pellkit::domain_error(std::string(what) + ": not an integer: " +
                                  text);
  return Int(text);
}

Int default_search_bound() {
  if (const char* env = std::getenv("PELLKIT_BOUND"))
    return parse_int(env, "PELLKIT_BOUND");
  return Int(1000000);
}

json expansion_json(const pellkit::SurdExpansion& exp) {
  json period = json::array();
  for (const Int& a : exp.period) period.push_back(a.str());
  return {{"type", "expansion"},
          {"d", exp.d.str()},
          {"a0", exp.a0.str()},
          {"period", period},
          {"m", std::to_string(exp.period_length())}};
}

json solution_json(const pellkit::PellSolution& sol) {
  return {{"type", "solution"},
          {"x", sol.x.str()},
          {"y", sol.y.str()},
          {"n", std::to_string(sol.n)},
          {"rhs", std::to_string(sol.rhs)}};
}

json solvability_json(const pellkit::Solvability& verdict) {
  if (const auto* sol = pellkit::solution_of(verdict)) return solution_json(*sol);
  if (const auto* none = std::get_if<pellkit::NoSolution>(&verdict))
    return {{"type", "no-solution"},
            {"reason", std::string(pellkit::to_string(none->reason))}};
  const auto& undet = std::get<pellkit::Undetermined>(verdict);
  return {{"type", "undetermined"},
          {"searched_bound", undet.searched_bound.str()}};
}

void print_text_result(const json& result) {
  const std::string type = result.at("type");
  if (type == "expansion") {
    std::cout << "d = " << result.at("d").get<std::string>() << "\n";
    std::cout << "sqrt(d) = [" << result.at("a0").get<std::string>() << ";";
    const auto& period = result.at("period");
    for (std::size_t i = 0; i < period.size(); ++i)
      std::cout << (i ? ", " : " ") << period[i].get<std::string>();
    std::cout << "]\n";
    std::cout << "period length m = " << result.at("m").get<std::string>()
              << "\n";
  } else if (type == "solution") {
    std::cout << "x = " << result.at("x").get<std::string>() << "\n"
              << "y = " << result.at("y").get<std::string>() << "\n"
              << "n = " << result.at("n").get<std::string>() << "\n"
              << "rhs = " << result.at("rhs").get<std::string>() << "\n";
  } else if (type == "no-solution") {
    std::cout << "no solution (" << result.at("reason").get<std::string>()
              << ")\n";
  } else if (type == "undetermined") {
    std::cout << "undetermined (searched y <= "
              << result.at("searched_bound").get<std::string>() << ")\n";
  }
}

struct RecordPrinter {
  std::string format = "text";
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  void emit(const std::string& command, json inputs, const std::string& method,
            json result, bool with_timing = true) const {
    if (format == "json") {
      json record{{"command", command},
                  {"inputs", std::move(inputs)},
                  {"method", method},
                  {"result", std::move(result)}};
      if (with_timing) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        record["timing_ms"] = static_cast<std::int64_t>(ms);
      }
      std::cout << record.dump(2) << "\n";
    } else {
      print_text_result(result);
      std::cout << "method = " << method << "\n";
    }
  }
};

void add_format_flag(CLI::App* cmd, RecordPrinter& printer) {
  cmd->add_option("--format", printer.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

// Method tag for the rhs = -4 route, by the d mod 4 case split.
std::string negative_four_method(const Int& d) {
  const int residue = Int(d % 4).convert_to<int>();
  return residue == 1 ? "brute-force" : "theorem-tag";
}

// Lifts a fundamental solution of any rhs to the n-th solution by
// composing with unit powers.
pellkit::Solvability lift_to_nth(const Int& d, pellkit::Solvability verdict,
                                 std::int64_t n) {
  const auto* sol = pellkit::solution_of(verdict);
  if (sol == nullptr || n <= 1) return verdict;
  const pellkit::PellSolution unit = pellkit::fundamental_unit(d);
  return pellkit::compose(*sol, pellkit::nth_solution(d, unit, n - 1), d, 1);
}

int run_cf(const std::string& d_text, int family, const std::string& a_text,
           const std::string& b_text, const RecordPrinter& printer) {
  json inputs;
  pellkit::SurdExpansion exp;
  std::string method;
  if (!d_text.empty()) {
    const Int d = parse_int(d_text, "d");
    inputs["d"] = d.str();
    exp = pellkit::cf_expand(d);
    method = "generic-cf";
  } else {
    const Int a = parse_int(a_text, "a");
    const Int b = parse_int(b_text, "b");
    inputs["family"] = std::to_string(family);
    inputs["a"] = a.str();
    inputs["b"] = b.str();
    exp = family == 1 ? pellkit::family1_cf(a, b) : pellkit::family2_cf(a, b);
    method = "closed-form";
  }
  printer.emit("cf", std::move(inputs), method, expansion_json(exp));
  return kExitOk;
}

int run_solve(const std::string& d_text, const std::string& n_rhs_text,
              std::int64_t n, const std::string& bound_text,
              const RecordPrinter& printer) {
  const Int d = parse_int(d_text, "d");
  const Int rhs = parse_int(n_rhs_text, "N");
  const Int bound =
      bound_text.empty() ? default_search_bound() : parse_int(bound_text, "bound");
  if (n < 1) throw pellkit::domain_error("solve: --n must be >= 1");
  json inputs{{"d", d.str()},
              {"N", rhs.str()},
              {"n", std::to_string(n)},
              {"bound", bound.str()}};

  pellkit::Solvability verdict{pellkit::Undetermined{bound}};
  std::string method = "generic-cf";
  if (rhs == 1) {
    verdict = pellkit::nth_solution(d, pellkit::fundamental_unit(d), n);
  } else if (rhs == -1) {
    verdict = lift_to_nth(d, pellkit::solve_negative_one(d), n);
  } else if (rhs == 4) {
    verdict = lift_to_nth(d, pellkit::solve_four(d), n);
  } else if (rhs == -4) {
    verdict = lift_to_nth(d, pellkit::solve_negative_four(d, bound), n);
    method = negative_four_method(d);
    if (!pellkit::solution_of(verdict) &&
        !std::holds_alternative<pellkit::Undetermined>(verdict))
      method = "theorem-tag";
  } else {
    throw pellkit::domain_error("solve: N must be one of {1, -1, 4, -4}");
  }

  const bool undetermined =
      std::holds_alternative<pellkit::Undetermined>(verdict);
  printer.emit("solve", std::move(inputs), method, solvability_json(verdict));
  return undetermined ? kExitUndetermined : kExitOk;
}

int run_family(int family, const std::string& a_text, const std::string& b_text,
               const std::string& corollary, const std::string& k_text,
               const std::string& n_rhs_text, std::int64_t n, bool force,
               const std::string& bound_text, const RecordPrinter& printer) {
  const Int rhs = parse_int(n_rhs_text, "N");
  const Int bound =
      bound_text.empty() ? default_search_bound() : parse_int(bound_text, "bound");
  if (n < 1) throw pellkit::domain_error("family: --n must be >= 1");

  if (!corollary.empty()) {
    const Int k = parse_int(k_text, "k");
    json inputs{{"corollary", corollary},
                {"k", k.str()},
                {"N", rhs.str()},
                {"n", std::to_string(n)}};
    pellkit::Corollary which;
    if (corollary == "9k2-3" && rhs == 1)
      which = pellkit::Corollary::kD9k2Minus3Rhs1;
    else if (corollary == "9k2-3" && rhs == 4)
      which = pellkit::Corollary::kD9k2Minus3Rhs4;
    else if (corollary == "9k2-6" && rhs == 1)
      which = pellkit::Corollary::kD9k2Minus6Rhs1;
    else if (corollary == "9k2-6" && rhs == 4)
      which = pellkit::Corollary::kD9k2Minus6Rhs4;
    else
      throw pellkit::domain_error("family: corollaries cover N in {1, 4} only");
    const pellkit::PellSolution sol = pellkit::corollary_solve(which, k, n);
    printer.emit("family", std::move(inputs), "closed-form",
                 solution_json(sol));
    return kExitOk;
  }

  const Int a = parse_int(a_text, "a");
  const Int b = parse_int(b_text, "b");
  const int rhs_i = rhs.convert_to<int>();
  if (rhs != 1 && rhs != -1 && rhs != 4 && rhs != -4)
    throw pellkit::domain_error("family: N must be one of {1, -1, 4, -4}");
  json inputs{{"family", std::to_string(family)},
              {"a", a.str()},
              {"b", b.str()},
              {"N", rhs.str()},
              {"n", std::to_string(n)}};

  const bool in_hypothesis = (family == 1 && a >= 2) || (family == 2 && a >= 3);
  if (!in_hypothesis && !force)
    throw pellkit::domain_error(
        family == 1 ? "family 1 requires a >= 2 (use --force for generic path)"
                    : "family 2 requires a >= 3 (use --force for generic path)");

  pellkit::Solvability verdict{pellkit::Undetermined{bound}};
  std::string method;
  if (in_hypothesis) {
    pellkit::FamilyParams params = pellkit::FamilyParams::make(
        family == 1 ? pellkit::Family::kF1 : pellkit::Family::kF2, a, b);
    verdict = pellkit::family_solve(params, rhs_i, n, bound);
    if (pellkit::solution_of(verdict))
      method = (family == 1 && rhs_i == -4) ? negative_four_method(params.d)
                                            : "closed-form";
    else if (std::holds_alternative<pellkit::Undetermined>(verdict))
      method = "brute-force";
    else
      method = "theorem-tag";
  } else {
    // Outside the theorem hypotheses: generic machinery on the raw d.
    const Int d = family == 1 ? Int(a * a * b * b - b)
                              : Int(a * a * b * b - 2 * b);
    inputs["d"] = d.str();
    method = "generic-cf";
    if (rhs == 1) {
      verdict = pellkit::nth_solution(d, pellkit::fundamental_unit(d), n);
    } else if (rhs == -1) {
      verdict = lift_to_nth(d, pellkit::solve_negative_one(d), n);
    } else if (rhs == 4) {
      verdict = lift_to_nth(d, pellkit::solve_four(d), n);
    } else {
      verdict = lift_to_nth(d, pellkit::solve_negative_four(d, bound), n);
      method = negative_four_method(d);
    }
  }

  const bool undetermined =
      std::holds_alternative<pellkit::Undetermined>(verdict);
  printer.emit("family", std::move(inputs), method, solvability_json(verdict));
  return undetermined ? kExitUndetermined : kExitOk;
}

int run_verify(const pellkit::CrossCheckGrid& grid, unsigned jobs,
               const RecordPrinter& printer) {
  const auto discrepancies = pellkit::cross_check(grid, jobs);
  if (printer.format == "json") {
    json list = json::array();
    for (const auto& d : discrepancies)
      list.push_back({{"where", d.where}, {"detail", d.detail}});
    json result{{"type", "verification"},
                {"discrepancies", std::move(list)},
                {"discrepancy_count", std::to_string(discrepancies.size())}};
    json inputs{{"a_max", std::to_string(grid.a_max)},
                {"b_max", std::to_string(grid.b_max)},
                {"n_max", std::to_string(grid.n_max)},
                {"k_max", std::to_string(grid.k_max)},
                {"y_bound", grid.y_bound.str()}};
    // No timing field: verify output is byte-identical for any --jobs.
    printer.emit("verify", std::move(inputs), "cross-check", std::move(result),
                 /*with_timing=*/false);
  } else {
    for (const auto& d : discrepancies)
      std::cout << "DISCREPANCY " << d.where << ": " << d.detail << "\n";
    std::cout << discrepancies.size() << " discrepancies\n";
  }
  return discrepancies.empty() ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pellkit: exact Pell-equation toolkit for N in {1, -1, 4, -4}"};
  app.require_subcommand(1);

  RecordPrinter printer;

  // cf
  auto* cf = app.add_subcommand("cf", "Continued fraction expansion of sqrt(d)");
  std::string cf_d, cf_a, cf_b;
  int cf_family = 0;
  cf->add_option("d", cf_d, "Positive non-square integer");
  cf->add_option("--family", cf_family, "Family id (1: a^2b^2-b, 2: a^2b^2-2b)")
      ->check(CLI::IsMember({1, 2}));
  cf->add_option("--a", cf_a, "Family parameter a");
  cf->add_option("--b", cf_b, "Family parameter b");
  add_format_flag(cf, printer);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve x^2 - d y^2 = N");
  std::string solve_d, solve_rhs, solve_bound;
  std::int64_t solve_n = 1;
  solve->add_option("d", solve_d, "Positive non-square integer")->required();
  solve->add_option("N", solve_rhs, "Right-hand side in {1, -1, 4, -4}")
      ->required();
  solve->add_option("--n", solve_n, "Solution index (1 = fundamental)");
  solve->add_option("--bound", solve_bound,
                    "Search bound for the undecided N = -4 case");
  add_format_flag(solve, printer);

  // family
  auto* fam = app.add_subcommand(
      "family", "Closed-form solutions for the d-families and corollaries");
  std::string fam_a, fam_b, fam_k, fam_rhs, fam_bound, fam_corollary;
  int fam_family = 0;
  std::int64_t fam_n = 1;
  bool fam_force = false;
  fam->add_option("--family", fam_family, "Family id")
      ->check(CLI::IsMember({1, 2}));
  fam->add_option("--a", fam_a, "Family parameter a");
  fam->add_option("--b", fam_b, "Family parameter b");
  fam->add_option("--corollary", fam_corollary, "Corollary d-form")
      ->check(CLI::IsMember({"9k2-3", "9k2-6"}));
  fam->add_option("--k", fam_k, "Corollary parameter k");
  fam->add_option("N", fam_rhs, "Right-hand side")->required();
  fam->add_option("--n", fam_n, "Solution index");
  fam->add_flag("--force", fam_force,
                "Use the generic solver outside theorem hypotheses");
  fam->add_option("--bound", fam_bound, "Search bound for N = -4");
  add_format_flag(fam, printer);

  // verify
  auto* verify =
      app.add_subcommand("verify", "Cross-check closed forms against "
                                   "generic solving and brute force");
  pellkit::CrossCheckGrid grid;
  std::string verify_y_bound;
  unsigned verify_jobs = 1;
  verify->add_option("--a-max", grid.a_max, "Max a")->capture_default_str();
  verify->add_option("--b-max", grid.b_max, "Max b")->capture_default_str();
  verify->add_option("--n-max", grid.n_max, "Max solution index")
      ->capture_default_str();
  verify->add_option("--k-max", grid.k_max, "Max corollary k")
      ->capture_default_str();
  verify->add_option("--y-bound", verify_y_bound,
                     "Brute-force bound for unsolvability sweeps");
  verify->add_option("--jobs", verify_jobs, "Worker threads")
      ->capture_default_str();
  add_format_flag(verify, printer);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cf->parsed()) {
      const bool have_d = !cf_d.empty();
      const bool have_family = cf_family != 0;
      if (have_d == have_family)
        throw pellkit::domain_error(
            "cf: supply exactly one of d or --family with --a/--b");
      if (have_family && (cf_a.empty() || cf_b.empty()))
        throw pellkit::domain_error("cf: --family requires --a and --b");
      return run_cf(cf_d, cf_family, cf_a, cf_b, printer);
    }
    if (solve->parsed())
      return run_solve(solve_d, solve_rhs, solve_n, solve_bound, printer);
    if (fam->parsed()) {
      const bool have_family = fam_family != 0;
      const bool have_corollary = !fam_corollary.empty();
      if (have_family == have_corollary)
        throw pellkit::domain_error(
            "family: supply exactly one of --family or --corollary");
      if (have_family && (fam_a.empty() || fam_b.empty()))
        throw pellkit::domain_error("family: --family requires --a and --b");
      if (have_corollary && fam_k.empty())
        throw pellkit::domain_error("family: --corollary requires --k");
      return run_family(fam_family, fam_a, fam_b, fam_corollary, fam_k,
                        fam_rhs, fam_n, fam_force, fam_bound, printer);
    }
    if (verify->parsed()) {
      if (!verify_y_bound.empty())
        grid.y_bound = parse_int(verify_y_bound, "y-bound");
      return run_verify(grid, verify_jobs, printer);
    }
  } catch (const pellkit::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
