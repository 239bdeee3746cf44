#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

namespace lyap {

/** Symmetric tridiagonal matrix by its diagonals, as produced by the
 *  short-recurrence process: diag has M entries, offdiag M-1. */
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  std::size_t order() const { return diag.size(); }
  Eigen::MatrixXd to_dense() const;
};

/** Eigendecomposition of a symmetric matrix, eigenvalues ascending.
 *  The input is symmetrized as (H + H^T)/2 before factoring. Throws
 *  NumericalError when the iteration fails. */
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const Eigen::MatrixXd& h);
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const TridiagonalMatrix& t);

/** Solves H Y + Y H = scale * g g^T for symmetric H via its
 *  eigendecomposition: Y = V [scale * gh_i gh_j / (lam_i + lam_j)] V^T with
 *  gh = V^T g. Throws NumericalError when some lam_i + lam_j is numerically
 *  zero (the equation is singular). */
Eigen::MatrixXd solve_projected_lyapunov(const Eigen::MatrixXd& h,
                                         const Eigen::VectorXd& g,
                                         double scale);

/** Gram-Schmidt with re-orthogonalization. Orthonormalizes the columns of
 *  block against `against` (assumed orthonormal) and against each other,
 *  dropping columns whose remainder falls below 1e-12 of their initial norm.
 *  Returns Q (kept columns), the coefficient matrix R of size
 *  (against.cols + kept) x block.cols with block = [against, Q] * R up to
 *  roundoff, and the number of dropped columns. */
struct OrthoResult {
  Eigen::MatrixXd q;
  Eigen::MatrixXd r;
  std::size_t dropped;
};
OrthoResult orthonormalize(const Eigen::MatrixXd& block,
                           const Eigen::MatrixXd& against = Eigen::MatrixXd());

}  // namespace lyap
