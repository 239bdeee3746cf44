#pragma once

#include "lyapcomp/operators.hpp"
#include "lyapcomp/solvers.hpp"

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace oracle {

/** Dense solution of A X + X A = c c^T through the Kronecker system
 *  (I (x) A + A (x) I) vec(X) = vec(c c^T). Cubic in N^2; test sizes only. */
Eigen::MatrixXd lyapunov_dense(const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& c);

/** |A X + X A - c c^T|_F formed densely. */
double residual_dense(const Eigen::MatrixXd& a, const Eigen::MatrixXd& x,
                      const Eigen::VectorXd& c);

/** Symmetric operator over an explicit dense matrix. */
class DenseOperator : public lyap::SymmetricOperator {
 public:
  explicit DenseOperator(Eigen::MatrixXd a);
  const Eigen::MatrixXd& matrix() const { return a_; }

 protected:
  void apply_impl(const double* x, double* y, bool add) const override;

 private:
  Eigen::MatrixXd a_;
};

/** Symmetric operator over an explicit diagonal. */
class DiagOperator : public lyap::SymmetricOperator {
 public:
  explicit DiagOperator(Eigen::VectorXd d);
  const Eigen::VectorXd& diagonal() const { return d_; }

 protected:
  void apply_impl(const double* x, double* y, bool add) const override;

 private:
  Eigen::VectorXd d_;
};

/** Dense Kronecker sum B (x) I + I (x) B. */
Eigen::MatrixXd kron_sum_dense(const Eigen::MatrixXd& b);

/** Sine of the largest principal angle between the column spans. Columns are
 *  orthonormalized internally; the caller checks dimensions separately. */
double max_principal_angle_sin(const Eigen::MatrixXd& u,
                               const Eigen::MatrixXd& v);

/** Unorthogonalized spanning set q(S)^{-1} [B, S B, ..., S^{k-1} B] of the
 *  rational space with q(z) = prod (z - xi_i), built by one dense solve. */
Eigen::MatrixXd rational_space_direct(const Eigen::MatrixXd& s,
                                      const Eigen::MatrixXd& b,
                                      const std::vector<double>& poles);

/** Complete elliptic integral K(m) by its hypergeometric power series. */
double elliptic_k_series(double m);

/** Reproducible SPD matrix with eigenvalues log-spaced over [1, cond]. */
Eigen::MatrixXd random_spd(std::size_t n, unsigned seed, double cond = 100.0);

/** Reproducible dense vector with entries in (-1, 1). */
Eigen::VectorXd random_vector(std::size_t n, unsigned seed);

/** X = Z Y Z^T. */
Eigen::MatrixXd assemble_dense(const lyap::LowRankSolution& sol);

}  // namespace oracle
