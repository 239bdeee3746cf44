#include "lyapcomp/harness.hpp"

#include "lyapcomp/errors.hpp"
#include "lyapcomp/generalized.hpp"
#include "lyapcomp/matrix_market.hpp"
#include "lyapcomp/problems.hpp"
#include "lyapcomp/zolotarev.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace lyap {
namespace {

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

ReorthPolicy parse_reorth(const std::string& name) {
  if (name == "first-cycle") return ReorthPolicy::kFirstCycle;
  if (name == "full") return ReorthPolicy::kFull;
  if (name == "none") return ReorthPolicy::kNone;
  throw InputError("unknown reorth policy: " + name);
}

struct BuiltProblem {
  std::shared_ptr<const SymmetricOperator> op;
  Eigen::VectorXd c;
};

BuiltProblem build_problem(const std::string& problem, long n_side,
                           const std::string& matrix_path,
                           const std::string& mass_path, const std::string& rhs,
                           const std::string& rhs_path,
                           const std::optional<std::pair<double, double>>& eigs) {
  if (eigs && (!(eigs->first > 0.0) || eigs->second < eigs->first))
    throw InputError("--eigs must satisfy 0 < a <= b");

  std::shared_ptr<SymmetricOperator> base;
  Eigen::VectorXd c0;
  if (problem == "lap4d") {
    if (n_side < 1) throw InputError("lap4d needs --n-side >= 1");
    const std::size_t n = static_cast<std::size_t>(n_side);
    auto op = std::make_shared<CsrSymOperator>(kron_sum_laplacian(n));
    const auto [lo, hi] = kron_sum_laplacian_interval(n);
    op->set_spectral_hint(lo, hi);
    base = op;
    if (rhs == "gaussian") {
      c0 = gaussian_rhs(n);
    } else if (rhs == "file") {
      c0 = read_vector_file(rhs_path);
    } else {
      throw InputError("unknown rhs kind: " + rhs);
    }
  } else if (problem == "mtx") {
    if (matrix_path.empty()) throw InputError("mtx problem needs --matrix");
    if (rhs == "gaussian")
      throw InputError(
          "the gaussian rhs lives on the lap4d grid; mtx problems need "
          "--rhs file");
    if (rhs != "file") throw InputError("unknown rhs kind: " + rhs);
    SparseCSR m = load_matrix_market(matrix_path);
    const Eigen::VectorXd b = read_vector_file(rhs_path);
    if (!mass_path.empty()) {
      const SparseCSR e = load_matrix_market(mass_path);
      auto gen = cholesky_transformed_operator(std::move(m), e);
      c0 = gen->transform_rhs(b);
      base = gen;
    } else {
      base = std::make_shared<CsrSymOperator>(std::move(m));
      c0 = b;
    }
  } else {
    throw InputError("unknown problem kind: " + problem);
  }
  if (eigs) base->set_spectral_hint(eigs->first, eigs->second);

  BuiltProblem built;
  std::tie(built.op, built.c) = normalize_problem(base, c0);
  return built;
}

struct RunResult {
  ExperimentRow row;
  Termination termination = Termination::kTol;
  std::vector<std::string> warnings;
  std::size_t total_steps = 0;
  std::size_t m = 0;
  PoleSet poles;
};

/** Runs one method and fills the row; the residual check happens after the
 *  clock stops and after the matvec tally is taken. `fixed` pins the step
 *  count and poles of a reference run (used by the bench sweep to mirror a
 *  compress run); otherwise the reference step count is maxmem - 1. */
RunResult run_method(const std::string& method, const SymmetricOperator& op,
                     const Eigen::VectorXd& c, const SolverConfig& config,
                     long maxmem,
                     const std::optional<std::pair<std::size_t, PoleSet>>& fixed =
                         std::nullopt) {
  RunResult res;
  res.row.n = op.dim();
  res.row.tol = config.tol;
  res.row.method = method;

  const long tally0 = op.matvec_count();
  LowRankSolution sol;
  const auto t0 = std::chrono::steady_clock::now();
  if (method == "compress" || method == "two-pass") {
    auto [s, report] = method == "compress" ? compress_solve(op, c, config)
                                            : two_pass_solve(op, c, config);
    sol = std::move(s);
    res.row.k = report.k;
    res.row.matvecs = report.matvecs;
    res.row.cycles = report.cycles;
    res.row.peak_vectors = report.peak_vector_count;
    res.termination = report.termination;
    res.warnings = std::move(report.warnings);
    res.total_steps = report.total_steps;
    res.m = report.m;
    res.poles = std::move(report.poles);
  } else if (method == "reference") {
    std::size_t steps;
    PoleSet poles;
    if (fixed) {
      std::tie(steps, poles) = *fixed;
    } else {
      double a = 0.0;
      double b = 0.0;
      if (config.spectral_interval) {
        std::tie(a, b) = *config.spectral_interval;
      } else if (op.spectral_hint()) {
        std::tie(a, b) = *op.spectral_hint();
      } else {
        throw InputError(
            "the reference method needs a spectral interval; pass --eigs");
      }
      poles = zolotarev_poles(choose_pole_count(config.tol, a, b), a, b);
      steps = static_cast<std::size_t>(maxmem) - 1;
    }
    sol = reference_solve(op, c, steps, poles);
    res.row.k = poles.k();
    res.row.cycles = 1;
    res.row.matvecs = op.matvec_count() - tally0;
    res.row.peak_vectors = res.row.matvecs + 1;
    res.total_steps = static_cast<std::size_t>(res.row.matvecs);
    res.poles = std::move(poles);
  } else {
    throw InputError("unknown method: " + method);
  }
  const auto t1 = std::chrono::steady_clock::now();
  res.row.time_s = std::chrono::duration<double>(t1 - t0).count();

  res.row.scaled_residual = true_residual_fro(op, sol, c) / sol.cnorm2;
  if (method == "reference")
    res.termination = res.row.scaled_residual <= config.tol ? Termination::kTol
                                                            : Termination::kCap;
  return res;
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::kTol:
      return "tolerance reached";
    case Termination::kBreakdown:
      return "exact invariant subspace found";
    case Termination::kCap:
      return "budget cap hit";
  }
  return "unknown";
}

int exit_code(Termination t) {
  return t == Termination::kCap ? 2 : 0;
}

void write_csv(const std::string& out_path, const std::string& table,
               std::ostream& out) {
  if (out_path.empty()) {
    out << table;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot open output file: " + out_path);
  f << table;
}

void print_summary(std::ostream& os, const RunResult& res) {
  os << res.row.method << ": " << termination_name(res.termination) << " after "
     << res.row.cycles << " cycle(s), M=" << res.total_steps
     << ", k=" << res.row.k << "\n"
     << "  matvecs=" << res.row.matvecs
     << " peak_vectors=" << res.row.peak_vectors << " scaled_residual="
     << format_double("%.3e", res.row.scaled_residual) << " time_s="
     << format_double("%.3f", res.row.time_s) << "\n";
  for (const std::string& w : res.warnings) os << "  warning: " << w << "\n";
}

}  // namespace

std::string csv_header() {
  return "N,tol,k,matvecs,time_s,scaled_residual,cycles,peak_vectors,method\n";
}

std::string to_csv(const ExperimentRow& row) {
  std::ostringstream os;
  os << row.n << ',' << format_double("%.6g", row.tol) << ',' << row.k << ','
     << row.matvecs << ',' << format_double("%.6f", row.time_s) << ','
     << format_double("%.6e", row.scaled_residual) << ',' << row.cycles << ','
     << row.peak_vectors << ',' << row.method << '\n';
  return os.str();
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const BuiltProblem built =
        build_problem(args.problem, args.n_side, args.matrix_path,
                      args.mass_path, args.rhs, args.rhs_path, args.eigs);
    SolverConfig config;
    config.tol = args.tol;
    config.maxmem = args.maxmem;
    config.max_matvecs = args.max_matvecs;
    config.reorth_policy = parse_reorth(args.reorth);

    const RunResult res =
        run_method(args.method, *built.op, built.c, config, args.maxmem);

    write_csv(args.out_path, csv_header() + to_csv(res.row), out);
    print_summary(args.out_path.empty() ? err : out, res);
    return exit_code(res.termination);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.methods.empty()) throw InputError("bench needs at least one method");
    if (args.n_sides.empty()) throw InputError("bench needs at least one size");
    for (const std::string& m : args.methods)
      if (m != "compress" && m != "two-pass" && m != "reference")
        throw InputError("unknown method: " + m);
    const ReorthPolicy policy = parse_reorth(args.reorth);
    if (args.problem != "lap4d")
      throw InputError("bench sweeps are defined for the lap4d problem");

    std::string table = csv_header();
    bool all_tol = true;
    for (long n_side : args.n_sides) {
      const BuiltProblem built =
          build_problem("lap4d", n_side, "", "", "gaussian", "", std::nullopt);
      SolverConfig config;
      config.tol = args.tol;
      config.maxmem = args.maxmem;
      config.max_matvecs = args.max_matvecs;
      config.reorth_policy = policy;

      std::optional<std::pair<std::size_t, PoleSet>> compress_shape;
      for (const std::string& method : args.methods) {
        try {
          const RunResult res =
              run_method(method, *built.op, built.c, config, args.maxmem,
                         method == "reference" ? compress_shape : std::nullopt);
          if (method == "compress")
            compress_shape = {res.total_steps, res.poles};
          table += to_csv(res.row);
          if (res.termination != Termination::kTol) all_tol = false;
          for (const std::string& w : res.warnings)
            err << "warning (N=" << built.op->dim() << ", " << method
                << "): " << w << "\n";
        } catch (const std::exception& e) {
          all_tol = false;
          err << "bench row failed (n_side=" << n_side << ", " << method
              << "): " << e.what() << "\n";
        }
      }
    }
    write_csv(args.out_path, table, out);
    return all_tol ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

int cmd_poles(std::size_t k, double a, double b, std::ostream& out,
              std::ostream& err) {
  try {
    const PoleSet poles = zolotarev_poles(k, a, b);
    out << "poles (k=" << k << ", interval [" << format_double("%.6g", a)
        << ", " << format_double("%.6g", b) << "]):\n";
    for (double xi : poles.poles)
      out << "  " << format_double("%.15e", xi) << "\n";
    out << "zolotarev_bound = "
        << format_double("%.6e", zolotarev_bound(k, a, b)) << "\n";
    out << "grid raterr     = " << format_double("%.6e", raterr(poles, a, b))
        << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace lyap
