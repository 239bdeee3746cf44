#pragma once

#include "lyapcomp/solvers.hpp"

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lyap {

/** One benchmark table line. scaled_residual is the exact residual from
 *  true_residual_fro divided by |c|^2, never the solver's estimate;
 *  matvecs comes from the operator tally and excludes verification
 *  applications. */
struct ExperimentRow {
  std::size_t n = 0;
  double tol = 0.0;
  std::size_t k = 0;
  long matvecs = 0;
  double time_s = 0.0;
  double scaled_residual = 0.0;
  std::size_t cycles = 0;
  long peak_vectors = 0;
  std::string method;
};

std::string csv_header();
std::string to_csv(const ExperimentRow& row);

struct SolveArgs {
  std::string problem = "lap4d";
  long n_side = 0;
  std::string matrix_path;
  std::string mass_path;
  std::string rhs = "gaussian";
  std::string rhs_path;
  double tol = 1e-8;
  long maxmem = 120;
  long max_matvecs = 500000;
  std::string method = "compress";
  std::optional<std::pair<double, double>> eigs;
  std::string reorth = "first-cycle";
  std::string out_path;
};

struct BenchArgs {
  std::string problem = "lap4d";
  std::vector<long> n_sides;
  std::vector<std::string> methods;
  double tol = 1e-8;
  long maxmem = 120;
  long max_matvecs = 500000;
  std::string reorth = "first-cycle";
  std::string out_path;
};

/** Runs one problem with one method and emits a CSV row (to --out when given,
 *  otherwise to `out`) plus a human-readable summary. Returns 0 when the
 *  tolerance was reached, 2 when a budget cap ended the run, 3 on input
 *  errors. */
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

/** Sweeps sizes x methods and emits one CSV row each. Row failures are
 *  reported on `err` and the sweep continues. Returns 0 when every row
 *  reached tolerance, 2 when any row capped or failed, 3 on input errors. */
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/** Prints the pole set, the theoretical bound and the measured approximation
 *  error for one interval. Returns 0, or 3 on invalid input. */
int cmd_poles(std::size_t k, double a, double b, std::ostream& out,
              std::ostream& err);

}  // namespace lyap
