#include "lyapcomp/solvers.hpp"

#include "lyapcomp/arena.hpp"
#include "lyapcomp/errors.hpp"
#include "lyapcomp/kernels.hpp"
#include "lyapcomp/lanczos.hpp"
#include "lyapcomp/rational_arnoldi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>
#include <utility>

namespace lyap {
namespace {

Eigen::Map<const Eigen::VectorXd> as_vec(const double* p, std::size_t n) {
  return Eigen::Map<const Eigen::VectorXd>(p, static_cast<Eigen::Index>(n));
}

void validate_config(const SolverConfig& config) {
  if (!(config.tol > 0.0) || !(config.tol < 1.0))
    throw InputError("tol must lie in (0, 1)");
  if (config.maxmem < 4)
    throw InputError("maxmem must be at least 4");
  if (config.max_matvecs < 1)
    throw InputError("max_matvecs must be at least 1");
  if (config.spectral_interval) {
    const auto [a, b] = *config.spectral_interval;
    if (!(a > 0.0) || !(b >= a) || !std::isfinite(b))
      throw InputError("spectral interval must satisfy 0 < a <= b");
  }
}

struct CyclePlan {
  double a = 0.0;
  double b = 0.0;
  PoleSet poles;
  std::size_t k = 0;
  std::size_t m = 0;
  std::vector<std::string> warnings;
};

/** Resolves the spectral interval, the pole count and the per-cycle step
 *  budget once the first projection is available. */
CyclePlan plan_cycles(const SymmetricOperator& op, const SolverConfig& config,
                      const TridiagonalMatrix& t1) {
  CyclePlan plan;
  if (config.spectral_interval) {
    std::tie(plan.a, plan.b) = *config.spectral_interval;
  } else if (config.spectral_estimate_policy ==
                 SpectralEstimatePolicy::kExactInput &&
             op.spectral_hint()) {
    std::tie(plan.a, plan.b) = *op.spectral_hint();
    if (!(plan.a > 0.0) || !(plan.b >= plan.a) || !std::isfinite(plan.b))
      throw NumericalError("operator spectral hint must satisfy 0 < a <= b");
  } else {
    if (config.spectral_estimate_policy == SpectralEstimatePolicy::kExactInput)
      plan.warnings.push_back(
          "no spectral interval available; using first-cycle Ritz estimates");
    std::tie(plan.a, plan.b) = estimate_extremal_eigs(t1);
  }

  if (config.poles) {
    plan.poles = *config.poles;
    plan.k = plan.poles.k();
    if (config.maxmem < static_cast<long>(2 * plan.k + 2))
      throw InputError("maxmem too small for the requested pole count");
  } else {
    plan.k = choose_pole_count(config.tol, plan.a, plan.b);
    const std::size_t kmax = static_cast<std::size_t>((config.maxmem - 2) / 2);
    if (plan.k > kmax) {
      std::ostringstream msg;
      msg << "pole count " << plan.k << " clamped to " << kmax
          << " by the memory cap; the tolerance may be unreachable";
      plan.warnings.push_back(msg.str());
      plan.k = kmax;
    }
    plan.poles = zolotarev_poles(plan.k, plan.a, plan.b);
  }
  plan.m = static_cast<std::size_t>(config.maxmem) - 2 * plan.k - 1;
  return plan;
}

/** The projected side of the compression recursion. Everything here is
 *  small and dense: the compressed projection S_tilde of the growing
 *  tridiagonal matrix, the coefficient vectors tying it to the start vector
 *  and to the cycle seam, and the projected solution. The solvers pair each
 *  call with the matching transformation of their stored basis slots. */
class CyclePipeline {
 public:
  CyclePipeline(PoleSet poles, double cnorm2)
      : poles_(std::move(poles)), cnorm2_(cnorm2) {}

  void first_cycle(const TridiagonalMatrix& t1, double beta_seam) {
    const std::size_t m1 = t1.order();
    if (m1 == 0) throw UsageError("first_cycle: empty projection");
    const Eigen::MatrixXd t = t1.to_dense();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m1, 2);
    b(0, 0) = 1.0;
    b(m1 - 1, 1) = 1.0;
    RationalBasis rb = rational_block_arnoldi(t, b, poles_);
    absorb(rb);
    st_.wtilde = rb.v;
    st_.s_tilde = st_.wtilde.transpose() * t * st_.wtilde;
    st_.w = st_.wtilde.row(0).transpose();
    st_.wtilde_last_row = st_.wtilde.row(m1 - 1).transpose();
    st_.wcum = st_.wtilde;
    st_.cycle_index = 1;
    st_.steps = m1;
    project(beta_seam);
  }

  void next_cycle(const std::vector<double>& ahat,
                  const std::vector<double>& bhat, double beta_prev,
                  double beta_seam) {
    const std::size_t prev = static_cast<std::size_t>(st_.s_tilde.rows());
    const std::size_t mh = ahat.size();
    if (mh == 0) throw UsageError("next_cycle: empty cycle");
    const std::size_t dim = prev + mh;

    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
    s.topLeftCorner(prev, prev) = st_.s_tilde;
    s.block(0, prev, prev, 1) = beta_prev * st_.wtilde_last_row;
    s.block(prev, 0, 1, prev) = beta_prev * st_.wtilde_last_row.transpose();
    for (std::size_t i = 0; i < mh; ++i) {
      s(prev + i, prev + i) = ahat[i];
      if (i + 1 < mh) {
        s(prev + i, prev + i + 1) = bhat[i];
        s(prev + i + 1, prev + i) = bhat[i];
      }
    }

    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, 2);
    b.col(0).head(prev) = st_.w;
    b(dim - 1, 1) = 1.0;
    RationalBasis rb = rational_block_arnoldi(s, b, poles_);
    absorb(rb);
    const Eigen::MatrixXd& wt = rb.v;

    st_.s_tilde = wt.transpose() * s * wt;
    st_.w = wt.topRows(prev).transpose() * st_.w;
    st_.wtilde_last_row = wt.row(dim - 1).transpose();
    Eigen::MatrixXd wcum_next(st_.wcum.rows() + static_cast<Eigen::Index>(mh),
                              wt.cols());
    wcum_next.topRows(st_.wcum.rows()) = st_.wcum * wt.topRows(prev);
    wcum_next.bottomRows(mh) = wt.bottomRows(mh);
    st_.wcum = std::move(wcum_next);
    st_.wtilde = wt;
    st_.cycle_index += 1;
    st_.steps += mh;
    project(beta_seam);
  }

  const CycleState& state() const { return st_; }
  std::size_t width() const {
    return static_cast<std::size_t>(st_.wtilde.cols());
  }
  /** Coefficients of the final factor on [stored basis, current cycle]. */
  Eigen::MatrixXd final_map() const { return st_.wtilde * st_.utilde; }
  /** Coefficients of the final factor on the full recurrence history. */
  Eigen::MatrixXd u_total() const { return st_.wcum * st_.utilde; }
  std::vector<std::string> take_warnings() { return std::move(warnings_); }

 private:
  void project(double beta_seam) {
    RationalBasis rb = rational_block_arnoldi(st_.s_tilde, st_.w, poles_);
    absorb(rb);
    st_.utilde = rb.v;
    const Eigen::MatrixXd h =
        st_.utilde.transpose() * st_.s_tilde * st_.utilde;
    const Eigen::VectorXd g = st_.utilde.transpose() * st_.w;
    st_.y = solve_projected_lyapunov(h, g, cnorm2_);
    st_.beta_seam = beta_seam;
    st_.estimate = residual_estimate(st_, beta_seam);
  }

  void absorb(const RationalBasis& rb) {
    warnings_.insert(warnings_.end(), rb.warnings.begin(), rb.warnings.end());
  }

  PoleSet poles_;
  double cnorm2_;
  CycleState st_;
  std::vector<std::string> warnings_;
};

LowRankSolution assemble_solution(const Eigen::MatrixXd& z0,
                                  const Eigen::MatrixXd& y, double cnorm2) {
  OrthoResult orth = orthonormalize(z0);
  LowRankSolution sol;
  sol.z = std::move(orth.q);
  sol.y = orth.r * y * orth.r.transpose();
  sol.cnorm2 = cnorm2;
  return sol;
}

/** Returns the recurrence's remaining slots to the arena: the retained
 *  window (which contains the current vector when retention is on), plus
 *  the current and loose previous vectors when it is off. */
void release_recurrence_slots(LanczosState& lan, VectorArena& arena) {
  if (double* lp = lan.loose_prev_slot()) arena.release(lp);
  bool current_released = false;
  for (double* s : lan.window()) {
    if (s == lan.current_slot()) current_released = true;
    arena.release(s);
  }
  if (!current_released) arena.release(lan.current_slot());
}

}  // namespace

std::pair<double, double> estimate_extremal_eigs(const TridiagonalMatrix& t1) {
  if (t1.order() == 0)
    throw InputError("estimate_extremal_eigs: empty projection");
  const auto [vals, vecs] = sym_eig(t1);
  const double lo = vals(0);
  const double hi = vals(vals.size() - 1);
  if (!(lo > 0.0))
    throw NumericalError(
        "smallest Ritz value is not positive; the operator does not look "
        "positive definite");
  return {0.1 * lo, 1.1 * hi};
}

double residual_estimate(const CycleState& state, double beta_seam) {
  if (state.utilde.size() == 0 || state.y.size() == 0) return 0.0;
  return beta_seam *
         (state.wtilde_last_row.transpose() * state.utilde * state.y).norm();
}

LowRankSolution reference_solve(const SymmetricOperator& op,
                                const Eigen::VectorXd& c, std::size_t steps,
                                const PoleSet& poles) {
  if (steps == 0) throw InputError("reference_solve: steps must be positive");
  const std::size_t n = op.dim();
  VectorArena arena(n, 0);
  LanczosState lan = lanczos_start(op, c, arena, true, true);
  lan.advance(steps);
  const std::size_t m = lan.steps_done();

  const Eigen::MatrixXd t = lan.tridiagonal().to_dense();
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(m);
  e1(0) = 1.0;
  RationalBasis rb = rational_block_arnoldi(t, e1, poles);
  const double cnorm2 = lan.cnorm() * lan.cnorm();
  const Eigen::MatrixXd h = rb.v.transpose() * t * rb.v;
  const Eigen::VectorXd g = rb.v.transpose() * e1;
  const Eigen::MatrixXd y = solve_projected_lyapunov(h, g, cnorm2);

  Eigen::MatrixXd z0 = Eigen::MatrixXd::Zero(n, rb.v.cols());
  const auto& win = lan.window();
  for (std::size_t r = 0; r < m; ++r) z0 += as_vec(win[r], n) * rb.v.row(r);
  for (double* s : win) arena.release(s);
  return assemble_solution(z0, y, cnorm2);
}

std::pair<LowRankSolution, SolveReport> compress_solve(
    const SymmetricOperator& op, const Eigen::VectorXd& c,
    const SolverConfig& config) {
  validate_config(config);
  const std::size_t n = op.dim();
  const bool full_window = config.reorth_policy == ReorthPolicy::kFull;
  VectorArena arena(n, full_window ? 0 : config.maxmem);
  const long count0 = op.matvec_count();

  SolveReport report;
  LanczosState lan = lanczos_start(op, c, arena, true,
                                   config.reorth_policy != ReorthPolicy::kNone);
  const double cnorm2 = lan.cnorm() * lan.cnorm();

  const std::size_t first_steps = static_cast<std::size_t>(
      std::min<long>(config.maxmem - 1, config.max_matvecs));
  lan.advance(first_steps);

  CyclePlan plan = plan_cycles(op, config, lan.tridiagonal());
  report.warnings = std::move(plan.warnings);
  report.eig_lo = plan.a;
  report.eig_hi = plan.b;
  report.k = plan.k;
  report.m = plan.m;
  report.poles = plan.poles;

  CyclePipeline pipe(plan.poles, cnorm2);
  pipe.first_cycle(lan.tridiagonal(),
                   lan.breakdown() ? 0.0 : lan.betas().back());

  std::vector<double*> qw;
  std::size_t cycle_start = 0;
  const double threshold = config.tol * cnorm2 / 2.0;

  for (;;) {
    const CycleState& st = pipe.state();
    report.estimates.push_back(st.estimate);
    report.cycles = st.cycle_index;
    if (config.observer) config.observer(st);

    if (st.estimate <= threshold) {
      report.termination = Termination::kTol;
      break;
    }
    if (lan.breakdown()) {
      report.termination = Termination::kBreakdown;
      break;
    }
    const long used = op.matvec_count() - count0;
    if (used + static_cast<long>(plan.m) > config.max_matvecs) {
      report.termination = Termination::kCap;
      break;
    }

    if (config.reorth_policy == ReorthPolicy::kFirstCycle &&
        st.cycle_index == 1)
      lan.set_reorth(false);

    const std::size_t width = pipe.width();
    if (!full_window) {
      std::vector<double*> src = std::move(qw);
      std::vector<double*> detached = lan.detach_window();
      src.insert(src.end(), detached.begin(), detached.end());
      if (st.wtilde.rows() != static_cast<Eigen::Index>(src.size()))
        throw UsageError("internal: stored basis does not match cycle map");
      if (width >= src.size())
        throw NumericalError(
            "compression width leaves no room for the recurrence seam");
      const std::vector<double*> dst(src.begin(), src.begin() + width);
      kern::slots_transform(src, dst, st.wtilde, n);
      for (std::size_t i = width; i + 1 < src.size(); ++i)
        arena.release(src[i]);
      qw.assign(src.begin(), src.begin() + width);
    } else {
      std::vector<double*> src = qw;
      const auto& win = lan.window();
      for (std::size_t j = cycle_start; j < lan.steps_done(); ++j)
        src.push_back(win[j]);
      if (st.wtilde.rows() != static_cast<Eigen::Index>(src.size()))
        throw UsageError("internal: stored basis does not match cycle map");
      std::vector<double*> dst;
      dst.reserve(width);
      for (std::size_t j = 0; j < width; ++j) dst.push_back(arena.acquire());
      kern::slots_transform(src, dst, st.wtilde, n);
      for (double* s : qw) arena.release(s);
      qw = std::move(dst);
    }

    cycle_start = lan.steps_done();
    lan.advance(plan.m);
    const std::size_t t = lan.steps_done();
    const std::vector<double> ahat(lan.alphas().begin() + cycle_start,
                                   lan.alphas().begin() + t);
    const std::vector<double> bhat(lan.betas().begin() + cycle_start,
                                   lan.betas().begin() + (t - 1));
    pipe.next_cycle(ahat, bhat, lan.betas()[cycle_start - 1],
                    lan.breakdown() ? 0.0 : lan.betas().back());
  }

  const std::size_t cycle_len = lan.steps_done() - cycle_start;
  std::vector<double*> basis = qw;
  const auto& win = lan.window();
  const std::size_t win_from = full_window ? cycle_start : 0;
  for (std::size_t j = 0; j < cycle_len; ++j) basis.push_back(win[win_from + j]);

  const Eigen::MatrixXd map = pipe.final_map();
  if (map.rows() != static_cast<Eigen::Index>(basis.size()))
    throw UsageError("internal: factor map does not match stored basis");
  const std::size_t khat = static_cast<std::size_t>(map.cols());

  Eigen::MatrixXd z0(n, khat);
  if (!full_window) {
    const std::vector<double*> dst(basis.begin(), basis.begin() + khat);
    kern::slots_transform(basis, dst, map, n);
    for (std::size_t j = 0; j < khat; ++j) {
      kern::copy(dst[j], z0.col(j).data(), n);
      arena.release(dst[j]);
    }
    for (std::size_t j = khat; j < basis.size(); ++j) arena.release(basis[j]);
    if (!lan.breakdown()) arena.release(lan.current_slot());
    if (double* lp = lan.loose_prev_slot()) arena.release(lp);
  } else {
    z0.setZero();
    for (std::size_t r = 0; r < basis.size(); ++r)
      z0 += as_vec(basis[r], n) * map.row(r);
    for (double* s : qw) arena.release(s);
    for (double* s : win) arena.release(s);
  }

  for (std::string& w : pipe.take_warnings())
    report.warnings.push_back(std::move(w));
  report.total_steps = lan.steps_done();
  report.alphas = lan.alphas();
  report.betas = lan.betas();
  report.matvecs = op.matvec_count() - count0;
  report.peak_vector_count = arena.peak();

  LowRankSolution sol = assemble_solution(z0, pipe.state().y, cnorm2);
  return {std::move(sol), std::move(report)};
}

std::pair<LowRankSolution, SolveReport> two_pass_solve(
    const SymmetricOperator& op, const Eigen::VectorXd& c,
    const SolverConfig& config) {
  validate_config(config);
  const std::size_t n = op.dim();
  const bool full_window = config.reorth_policy == ReorthPolicy::kFull;
  const bool reorth_any = config.reorth_policy != ReorthPolicy::kNone;
  VectorArena arena(n, full_window ? 0 : config.maxmem);
  const long count0 = op.matvec_count();

  SolveReport report;
  double cnorm2 = 0.0;
  Eigen::MatrixXd u_total;
  Eigen::MatrixXd y;
  std::size_t m1 = 0;
  std::size_t mtotal = 0;
  std::size_t cycles_run = 0;

  {
    LanczosState lan = lanczos_start(op, c, arena, reorth_any, reorth_any);
    cnorm2 = lan.cnorm() * lan.cnorm();

    const std::size_t first_steps = static_cast<std::size_t>(
        std::min<long>(config.maxmem - 1, config.max_matvecs));
    lan.advance(first_steps);
    m1 = lan.steps_done();

    CyclePlan plan = plan_cycles(op, config, lan.tridiagonal());
    report.warnings = std::move(plan.warnings);
    report.eig_lo = plan.a;
    report.eig_hi = plan.b;
    report.k = plan.k;
    report.m = plan.m;
    report.poles = plan.poles;

    CyclePipeline pipe(plan.poles, cnorm2);
    pipe.first_cycle(lan.tridiagonal(),
                     lan.breakdown() ? 0.0 : lan.betas().back());

    std::size_t cycle_start = 0;
    const double threshold = config.tol * cnorm2 / 2.0;

    for (;;) {
      const CycleState& st = pipe.state();
      report.estimates.push_back(st.estimate);
      report.cycles = st.cycle_index;
      if (config.observer) config.observer(st);

      if (st.estimate <= threshold) {
        report.termination = Termination::kTol;
        break;
      }
      if (lan.breakdown()) {
        report.termination = Termination::kBreakdown;
        break;
      }
      const long used = op.matvec_count() - count0;
      if (used + static_cast<long>(plan.m) > config.max_matvecs) {
        report.termination = Termination::kCap;
        break;
      }

      if (config.reorth_policy == ReorthPolicy::kFirstCycle &&
          st.cycle_index == 1) {
        lan.set_reorth(false);
        std::vector<double*> detached = lan.detach_window();
        for (std::size_t i = 0; i + 1 < detached.size(); ++i)
          arena.release(detached[i]);
        lan.set_retain(false);
      }

      cycle_start = lan.steps_done();
      lan.advance(plan.m);
      const std::size_t t = lan.steps_done();
      const std::vector<double> ahat(lan.alphas().begin() + cycle_start,
                                     lan.alphas().begin() + t);
      const std::vector<double> bhat(lan.betas().begin() + cycle_start,
                                     lan.betas().begin() + (t - 1));
      pipe.next_cycle(ahat, bhat, lan.betas()[cycle_start - 1],
                      lan.breakdown() ? 0.0 : lan.betas().back());
    }

    mtotal = lan.steps_done();
    cycles_run = pipe.state().cycle_index;
    u_total = pipe.u_total();
    y = pipe.state().y;
    for (std::string& w : pipe.take_warnings())
      report.warnings.push_back(std::move(w));
    report.total_steps = mtotal;
    report.alphas = lan.alphas();
    report.betas = lan.betas();
    release_recurrence_slots(lan, arena);
  }

  if (u_total.rows() != static_cast<Eigen::Index>(mtotal))
    throw UsageError("internal: factor coefficients do not match step count");
  const std::size_t khat = static_cast<std::size_t>(u_total.cols());
  Eigen::MatrixXd z0(n, khat);

  {
    LanczosState lan2 = lanczos_start(op, c, arena, reorth_any, reorth_any);
    if (config.reorth_policy == ReorthPolicy::kNone) {
      std::vector<double*> acc;
      acc.reserve(khat);
      for (std::size_t j = 0; j < khat; ++j) {
        acc.push_back(arena.acquire());
        kern::fill(0.0, acc.back(), n);
      }
      for (std::size_t j = 1; j <= mtotal; ++j) {
        for (std::size_t col = 0; col < khat; ++col)
          kern::axpy(u_total(j - 1, col), lan2.current(), acc[col], n);
        lan2.advance(1);
      }
      for (std::size_t col = 0; col < khat; ++col) {
        kern::copy(acc[col], z0.col(col).data(), n);
        arena.release(acc[col]);
      }
      release_recurrence_slots(lan2, arena);
    } else if (cycles_run == 1 || full_window) {
      lan2.advance(mtotal);
      const auto& win = lan2.window();
      const std::vector<double*> src(win.begin(), win.begin() + mtotal);
      const std::vector<double*> dst(src.begin(), src.begin() + khat);
      kern::slots_transform(src, dst, u_total, n);
      for (std::size_t j = 0; j < khat; ++j)
        kern::copy(dst[j], z0.col(j).data(), n);
      release_recurrence_slots(lan2, arena);
    } else {
      lan2.advance(m1);
      lan2.set_reorth(false);
      std::vector<double*> detached = lan2.detach_window();
      const std::vector<double*> dst(detached.begin(),
                                     detached.begin() + khat);
      kern::slots_transform(detached, dst, u_total.topRows(m1), n);
      for (std::size_t i = khat; i + 1 < detached.size(); ++i)
        arena.release(detached[i]);
      lan2.set_retain(false);
      for (std::size_t j = m1 + 1; j <= mtotal; ++j) {
        for (std::size_t col = 0; col < khat; ++col)
          kern::axpy(u_total(j - 1, col), lan2.current(), dst[col], n);
        lan2.advance(1);
      }
      for (std::size_t col = 0; col < khat; ++col) {
        kern::copy(dst[col], z0.col(col).data(), n);
        arena.release(dst[col]);
      }
      release_recurrence_slots(lan2, arena);
    }
  }

  report.matvecs = op.matvec_count() - count0;
  report.peak_vector_count = arena.peak();
  LowRankSolution sol = assemble_solution(z0, y, cnorm2);
  return {std::move(sol), std::move(report)};
}

double true_residual_fro(const SymmetricOperator& op,
                         const LowRankSolution& sol, const Eigen::VectorXd& c) {
  const std::size_t n = op.dim();
  if (sol.z.rows() != static_cast<Eigen::Index>(n) ||
      c.size() != static_cast<Eigen::Index>(n))
    throw InputError("true_residual_fro: dimension mismatch");
  const Eigen::Index khat = sol.z.cols();

  Eigen::MatrixXd az(n, khat);
  for (Eigen::Index j = 0; j < khat; ++j)
    op.apply(sol.z.col(j).data(), az.col(j).data());

  Eigen::MatrixXd blk(n, 2 * khat + 1);
  blk.leftCols(khat) = sol.z;
  blk.middleCols(khat, khat) = az;
  blk.col(2 * khat) = c;
  const OrthoResult orth = orthonormalize(blk);

  const Eigen::MatrixXd cz = orth.r.leftCols(khat);
  const Eigen::MatrixXd cw = orth.r.middleCols(khat, khat);
  const Eigen::VectorXd chat = orth.r.col(2 * khat);
  const Eigen::MatrixXd inner = cw * sol.y * cz.transpose() +
                                cz * sol.y * cw.transpose() -
                                chat * chat.transpose();
  return inner.norm();
}

FpBoundReport fp_bound_constants(std::size_t n, std::size_t m, std::size_t s,
                                 double norm_ratio, double lambda_min,
                                 double lambda_max, double norm_a) {
  const double u = std::ldexp(1.0, -53);
  FpBoundReport r;
  r.eps0 = 2.0 * (static_cast<double>(n) + 4.0) * u;
  r.eps1 = 2.0 * (7.0 + static_cast<double>(s) * norm_ratio) * u;
  r.eps2 = std::sqrt(2.0) * std::max(6.0 * r.eps0, r.eps1);
  const double md = static_cast<double>(m);
  r.delta_m = std::pow(md, 2.5) * r.eps2 * norm_a;
  r.delta_m1 = std::pow(md + 1.0, 2.5) * r.eps2 * norm_a;
  r.assumption_holds = lambda_min > r.delta_m1;
  if (r.assumption_holds) {
    r.kappa_m1 = (lambda_max + r.delta_m1) / (lambda_min - r.delta_m1);
    r.kappa_tilde_m1 =
        (lambda_max + lambda_min) / (2.0 * lambda_min - 2.0 * r.delta_m1);
    r.c1 = (1.0 + 2.0 * r.eps0) * (md + 1.0) *
           (4.0 + 4.0 * std::sqrt(2.0 * r.kappa_m1));
    r.c2 = std::sqrt(1.0 + 2.0 * r.eps0) * md * lambda_max /
           (lambda_min - r.delta_m);
    r.c3 = 2.0 * (1.0 + 2.0 * r.eps0) * md * lambda_max /
           (lambda_min - r.delta_m);
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.kappa_m1 = nan;
    r.kappa_tilde_m1 = nan;
    r.c1 = nan;
    r.c2 = nan;
    r.c3 = nan;
  }
  return r;
}

}  // namespace lyap
