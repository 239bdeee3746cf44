#include "lyapcomp/harness.hpp"

#include "lyapcomp/errors.hpp"

#include <CLI11.hpp>
#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

namespace {

/** "a,b" -> pair, or nullopt when the flag was not given. */
std::optional<std::pair<double, double>> parse_eigs(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw lyap::InputError("--eigs expects two comma-separated values");
  try {
    std::size_t used = 0;
    const double a = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string rest = text.substr(comma + 1);
    const double b = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return std::make_pair(a, b);
  } catch (const std::exception&) {
    throw lyap::InputError("--eigs expects two comma-separated values");
  }
}

void apply_rhs_tokens(const std::vector<std::string>& tokens,
                      lyap::SolveArgs& args) {
  if (tokens.empty()) return;
  if (tokens[0] == "gaussian") {
    if (tokens.size() != 1)
      throw lyap::InputError("--rhs gaussian takes no path");
    args.rhs = "gaussian";
  } else if (tokens[0] == "file") {
    if (tokens.size() != 2)
      throw lyap::InputError("--rhs file needs a path");
    args.rhs = "file";
    args.rhs_path = tokens[1];
  } else {
    throw lyap::InputError("--rhs expects 'gaussian' or 'file PATH'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-rank solver for A X + X A = c c^T under a memory cap"};
  app.require_subcommand(1);

  lyap::SolveArgs sargs;
  std::string solve_eigs;
  std::vector<std::string> solve_rhs;
  CLI::App* solve =
      app.add_subcommand("solve", "run one problem with one method");
  solve->add_option("--problem", sargs.problem, "problem kind: lap4d or mtx");
  solve->add_option("--n-side", sargs.n_side, "grid side for lap4d (N = n^2)");
  solve->add_option("--matrix", sargs.matrix_path, "Matrix Market file");
  solve->add_option("--mass", sargs.mass_path,
                    "Matrix Market mass matrix (generalized equation)");
  solve->add_option("--rhs", solve_rhs, "'gaussian' or 'file PATH'")
      ->expected(1, 2);
  solve->add_option("--tol", sargs.tol, "relative residual tolerance");
  solve->add_option("--maxmem", sargs.maxmem,
                    "stored length-N vector budget (default 120)");
  solve->add_option("--max-matvecs", sargs.max_matvecs,
                    "operator application budget");
  solve->add_option("--method", sargs.method,
                    "compress, two-pass or reference");
  solve->add_option("--eigs", solve_eigs,
                    "exact spectral interval a,b of the operator");
  solve->add_option("--reorth", sargs.reorth,
                    "reorthogonalization: first-cycle, full or none");
  solve->add_option("--out", sargs.out_path, "CSV output path");

  lyap::BenchArgs bargs;
  CLI::App* bench =
      app.add_subcommand("bench", "sweep sizes x methods, emit a CSV table");
  bench->add_option("--problem", bargs.problem, "problem kind (lap4d)");
  bench->add_option("--n-side", bargs.n_sides, "grid sides to sweep")
      ->delimiter(',');
  bench->add_option("--methods", bargs.methods, "methods to compare")
      ->delimiter(',');
  bench->add_option("--tol", bargs.tol, "relative residual tolerance");
  bench->add_option("--maxmem", bargs.maxmem, "stored vector budget");
  bench->add_option("--max-matvecs", bargs.max_matvecs,
                    "operator application budget");
  bench->add_option("--reorth", bargs.reorth, "reorthogonalization policy");
  bench->add_option("--out", bargs.out_path, "CSV output path");

  std::size_t poles_k = 0;
  double poles_a = 0.0;
  double poles_b = 0.0;
  CLI::App* poles = app.add_subcommand(
      "poles", "print optimal poles and approximation error for an interval");
  poles->add_option("--k", poles_k, "number of poles")->required();
  poles->add_option("--a", poles_a, "interval lower end")->required();
  poles->add_option("--b", poles_b, "interval upper end")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (solve->parsed()) {
      apply_rhs_tokens(solve_rhs, sargs);
      sargs.eigs = parse_eigs(solve_eigs);
      return lyap::cmd_solve(sargs, std::cout, std::cerr);
    }
    if (bench->parsed()) return lyap::cmd_bench(bargs, std::cout, std::cerr);
    return lyap::cmd_poles(poles_k, poles_a, poles_b, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
