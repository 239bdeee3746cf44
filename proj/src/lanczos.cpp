#include "lyapcomp/lanczos.hpp"

#include "lyapcomp/errors.hpp"
#include "lyapcomp/kernels.hpp"

#include <cmath>
#include <limits>

namespace lyap {

LanczosState::LanczosState(const SymmetricOperator& op, const Eigen::VectorXd& c,
                           VectorArena& arena, bool retain_window, bool reorth)
    : op_(op),
      arena_(arena),
      n_(op.dim()),
      retain_(retain_window),
      reorth_(reorth) {
  if (static_cast<std::size_t>(c.size()) != n_)
    throw InputError("lanczos_start: vector length does not match operator");
  if (arena.dim() != n_)
    throw UsageError("lanczos_start: arena dimension does not match operator");
  cnorm_ = c.norm();
  if (!(cnorm_ > 0.0) || !std::isfinite(cnorm_))
    throw InputError("lanczos_start: starting vector must be nonzero and finite");
  q_curr_ = arena_.acquire();
  kern::copy_scaled(1.0 / cnorm_, c.data(), q_curr_, n_);
  if (retain_) window_.push_back(q_curr_);
}

/** Runs one iteration; returns false only when already broken down. The
 *  iteration that detects breakdown still counts (it consumed an apply and
 *  appended its diagonal entry). */
bool LanczosState::step() {
  if (breakdown_) return false;
  double* w;
  if (alphas_.empty()) {
    w = arena_.acquire();
    op_.apply(q_curr_, w);
  } else {
    const double beta_prev = betas_.back();
    if (prev_loose_) {
      w = q_prev_;
      q_prev_ = nullptr;
      prev_loose_ = false;
      kern::scal(-beta_prev, w, n_);
    } else {
      w = arena_.acquire();
      kern::copy_scaled(-beta_prev, q_prev_, w, n_);
    }
    op_.apply_add(q_curr_, w);
  }

  const double alpha = kern::dot(q_curr_, w, n_);
  alphas_.push_back(alpha);
  kern::axpy(-alpha, q_curr_, w, n_);

  double beta;
  if (reorth_ && !window_.empty()) {
    const double pre = kern::nrm2(w, n_);
    for (double* u : window_) {
      const double h = kern::dot(u, w, n_);
      kern::axpy(-h, u, w, n_);
    }
    beta = kern::nrm2(w, n_);
    if (beta < pre / std::sqrt(2.0)) {
      for (double* u : window_) {
        const double h = kern::dot(u, w, n_);
        kern::axpy(-h, u, w, n_);
      }
      beta = kern::nrm2(w, n_);
    }
  } else {
    beta = kern::nrm2(w, n_);
  }

  const double beta_older = betas_.empty() ? 0.0 : betas_.back();
  const double gersh = std::abs(alpha) + beta_older;
  norm_est_ = std::max(norm_est_, gersh);
  const double tol =
      static_cast<double>(n_) * std::numeric_limits<double>::epsilon() * norm_est_;
  if (beta <= tol) {
    breakdown_ = true;
    arena_.release(w);
    return true;
  }
  norm_est_ = std::max(norm_est_, gersh + beta);
  betas_.push_back(beta);
  kern::scal(1.0 / beta, w, n_);
  q_prev_ = q_curr_;
  prev_loose_ = !retain_;
  q_curr_ = w;
  if (retain_) window_.push_back(q_curr_);
  return true;
}

std::size_t LanczosState::advance(std::size_t steps) {
  std::size_t taken = 0;
  while (taken < steps && !breakdown_ && step()) ++taken;
  return taken;
}

std::vector<double*> LanczosState::detach_window() {
  if (!retain_)
    throw UsageError("detach_window: window retention is off");
  std::vector<double*> out(window_.begin(), window_.end() - 1);
  window_.clear();
  window_.push_back(q_curr_);
  if (!out.empty()) {
    q_prev_ = out.back();
    prev_loose_ = true;
  }
  return out;
}

void LanczosState::set_retain(bool retain) {
  if (retain == retain_) return;
  if (!retain && window_.size() > 1)
    throw UsageError("set_retain: detach the window before disabling retention");
  retain_ = retain;
  if (!retain_) {
    window_.clear();
  } else {
    window_.push_back(q_curr_);
  }
}

TridiagonalMatrix LanczosState::tridiagonal() const {
  TridiagonalMatrix t;
  t.diag = alphas_;
  t.offdiag = betas_;
  if (t.offdiag.size() == t.diag.size() && !t.offdiag.empty())
    t.offdiag.pop_back();
  return t;
}

LanczosState lanczos_start(const SymmetricOperator& op, const Eigen::VectorXd& c,
                           VectorArena& arena, bool retain_window, bool reorth) {
  return LanczosState(op, c, arena, retain_window, reorth);
}

}  // namespace lyap
