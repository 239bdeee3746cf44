#pragma once

#include "lyapcomp/arena.hpp"
#include "lyapcomp/dense_core.hpp"
#include "lyapcomp/operators.hpp"

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace lyap {

/** Resumable three-term recurrence q_{j+1} = (A q_j - a_j q_j - b_{j-1} q_{j-1}) / b_j,
 *  driving one operator apply per step. The state owns at most the two live
 *  recurrence vectors plus, when window retention is on, every vector of the
 *  current cycle; all storage is charged to the caller's arena.
 *
 *  Slot ownership: detach_window() hands the cycle's vectors (excluding the
 *  current one) to the caller. The last returned slot doubles as the
 *  recurrence's previous vector; the caller must leave it untouched while it
 *  intends to keep stepping (the next step consumes and reuses it). The
 *  destructor never releases slots; callers release what they hold, and
 *  current_slot()/loose_prev_slot() expose the state's own live slots for
 *  end-of-solve cleanup. */
class LanczosState {
 public:
  LanczosState(const SymmetricOperator& op, const Eigen::VectorXd& c,
               VectorArena& arena, bool retain_window, bool reorth);
  LanczosState(const LanczosState&) = delete;
  LanczosState& operator=(const LanczosState&) = delete;

  /** Runs up to `steps` recurrence steps, stopping early on breakdown.
   *  Returns the number of steps taken; each consumes one operator apply. */
  std::size_t advance(std::size_t steps);

  /** Returns the retained cycle vectors q_start..q_j (excluding the current
   *  vector) and resets the window to the current vector only. See the class
   *  comment for the ownership of the last returned slot. Throws UsageError
   *  when retention is off. */
  std::vector<double*> detach_window();

  /** The retained vectors including the current one (empty when retention is
   *  off). Read-only view for callers that avoid detaching. */
  const std::vector<double*>& window() const { return window_; }

  void set_retain(bool retain);
  void set_reorth(bool reorth) { reorth_ = reorth; }

  bool breakdown() const { return breakdown_; }
  std::size_t steps_done() const { return alphas_.size(); }
  const std::vector<double>& alphas() const { return alphas_; }
  const std::vector<double>& betas() const { return betas_; }
  double beta_last() const { return betas_.empty() ? 0.0 : betas_.back(); }
  TridiagonalMatrix tridiagonal() const;
  double cnorm() const { return cnorm_; }
  std::size_t dim() const { return n_; }

  const double* current() const { return q_curr_; }
  double* current_slot() { return q_curr_; }
  /** The previous recurrence vector when it is held outside the window
   *  (stealable); nullptr otherwise. */
  double* loose_prev_slot() { return prev_loose_ ? q_prev_ : nullptr; }

 private:
  bool step();

  const SymmetricOperator& op_;
  VectorArena& arena_;
  std::size_t n_;
  double cnorm_;
  bool retain_;
  bool reorth_;
  bool breakdown_ = false;
  double norm_est_ = 0.0;
  double* q_prev_ = nullptr;
  double* q_curr_ = nullptr;
  bool prev_loose_ = false;
  std::vector<double*> window_;
  std::vector<double> alphas_;
  std::vector<double> betas_;
};

/** Starts the recurrence at q_1 = c / |c|. Throws InputError when c = 0. */
LanczosState lanczos_start(const SymmetricOperator& op, const Eigen::VectorXd& c,
                           VectorArena& arena, bool retain_window, bool reorth);

inline std::size_t lanczos_advance(LanczosState& state, std::size_t steps) {
  return state.advance(steps);
}

}  // namespace lyap
