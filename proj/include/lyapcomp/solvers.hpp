#pragma once

#include "lyapcomp/dense_core.hpp"
#include "lyapcomp/operators.hpp"
#include "lyapcomp/zolotarev.hpp"

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lyap {

enum class ReorthPolicy { kNone, kFirstCycle, kFull };
enum class SpectralEstimatePolicy { kExactInput, kFirstCycleRitz };
enum class Termination { kTol, kBreakdown, kCap };

/** Everything one compression cycle carries forward, all of it small: the
 *  compressed projection S_tilde, the coefficient vectors coupling it to the
 *  first Lanczos vector and to the cycle seam, and the current projected
 *  solution. Long vectors (the compressed basis) live in the solver's arena
 *  and are not part of this record. wcum accumulates the product of the
 *  per-cycle compression maps, so wcum spans the same space in T-coordinates
 *  as the stored basis does in problem coordinates. */
struct CycleState {
  std::size_t cycle_index = 0;
  /** Lanczos steps summarized so far, over all cycles; equals wcum's rows. */
  std::size_t steps = 0;
  double beta_seam = 0.0;
  double estimate = 0.0;
  Eigen::MatrixXd wtilde;
  Eigen::MatrixXd wcum;
  Eigen::MatrixXd s_tilde;
  Eigen::VectorXd w;
  Eigen::VectorXd wtilde_last_row;
  Eigen::MatrixXd utilde;
  Eigen::MatrixXd y;
};

struct SolverConfig {
  double tol = 1e-8;
  long maxmem = 120;
  long max_matvecs = 500000;
  std::optional<PoleSet> poles;
  std::optional<std::pair<double, double>> spectral_interval;
  SpectralEstimatePolicy spectral_estimate_policy =
      SpectralEstimatePolicy::kExactInput;
  ReorthPolicy reorth_policy = ReorthPolicy::kFirstCycle;
  std::function<void(const CycleState&)> observer;
};

/** X is approximated by Z Y Z^T; Z has orthonormal columns and Y (which
 *  carries the |c|^2 scale of the right-hand side) is symmetric PSD up to
 *  roundoff. */
struct LowRankSolution {
  Eigen::MatrixXd z;
  Eigen::MatrixXd y;
  double cnorm2 = 0.0;
};

struct SolveReport {
  long matvecs = 0;
  std::size_t cycles = 0;
  std::size_t total_steps = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<double> estimates;
  long peak_vector_count = 0;
  Termination termination = Termination::kTol;
  double eig_lo = 0.0;
  double eig_hi = 0.0;
  PoleSet poles;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<std::string> warnings;
};

/** Keeps the whole Lanczos basis, projects once onto the rational space of
 *  the tridiagonal matrix, and assembles the factor directly. Memory is
 *  unrestricted; this is the correctness yardstick for the capped solvers. */
LowRankSolution reference_solve(const SymmetricOperator& op,
                                const Eigen::VectorXd& c, std::size_t steps,
                                const PoleSet& poles);

/** Memory-capped solver: fixed-length Lanczos cycles, each ended by
 *  compressing the stored basis against a small rational basis, with the
 *  per-cycle residual estimate deciding termination. Peak storage is
 *  maxmem length-N vectors (the cap is waived under ReorthPolicy::kFull,
 *  which exists to check equivalence with reference_solve). */
std::pair<LowRankSolution, SolveReport> compress_solve(
    const SymmetricOperator& op, const Eigen::VectorXd& c,
    const SolverConfig& config);

/** Baseline with the same cycle structure and stopping rule: pass 1 builds
 *  only the tridiagonal matrix, pass 2 reruns the identical recurrence and
 *  accumulates the factor, doubling the matvec count. */
std::pair<LowRankSolution, SolveReport> two_pass_solve(
    const SymmetricOperator& op, const Eigen::VectorXd& c,
    const SolverConfig& config);

/** (0.1 * smallest, 1.1 * largest) Ritz value of the first-cycle projection.
 *  Throws NumericalError when the smallest Ritz value is not positive. */
std::pair<double, double> estimate_extremal_eigs(const TridiagonalMatrix& t1);

/** The cheap per-cycle residual estimate
 *  beta_seam * |wtilde_last_row^T Utilde Y|_2; the stopping rule compares it
 *  to tol * |c|^2 / 2. */
double residual_estimate(const CycleState& state, double beta_seam);

/** Exact residual |A X + X A - c c^T|_F for X = Z Y Z^T, computed in the
 *  coordinates of an orthonormal basis of [Z, AZ, c]. Costs Z.cols() applies,
 *  which the caller should not count toward solver totals. */
double true_residual_fro(const SymmetricOperator& op, const LowRankSolution& sol,
                         const Eigen::VectorXd& c);

/** Finite-precision diagnostic constants for a Lanczos run of M steps on an
 *  N-dimensional operator with at most s nonzeros per row. norm_ratio
 *  estimates ||abs(A)||_2 / ||A||_2. assumption_holds reports whether
 *  lambda_min clears the (M+1)^{5/2} eps2 ||A|| threshold; the conditioning
 *  and error constants are NaN when it does not. */
struct FpBoundReport {
  double eps0 = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double delta_m = 0.0;
  double delta_m1 = 0.0;
  bool assumption_holds = false;
  double kappa_m1 = 0.0;
  double kappa_tilde_m1 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};
FpBoundReport fp_bound_constants(std::size_t n, std::size_t m, std::size_t s,
                                 double norm_ratio, double lambda_min,
                                 double lambda_max, double norm_a);

}  // namespace lyap
