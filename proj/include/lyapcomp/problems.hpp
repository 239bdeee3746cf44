#pragma once

#include "lyapcomp/operators.hpp"
#include "lyapcomp/sparse.hpp"

#include <Eigen/Dense>
#include <memory>
#include <utility>

namespace lyap {

/** Five-point Laplacian on the unit square with an n-by-n interior grid and
 *  zero boundary values, scaled by 1/h^2 with h = 1/(n+1). The matrix is
 *  the Kronecker sum B (+) B of the 1D second-difference matrix, dimension
 *  N = n^2, grid points numbered x-fastest. */
SparseCSR kron_sum_laplacian(std::size_t n);

/** Exact extremal eigenvalues [2*lam_B(1), 2*lam_B(n)] of kron_sum_laplacian(n),
 *  lam_B(l) = (n+1)^2 * (2 - 2 cos(l*pi/(n+1))). */
std::pair<double, double> kron_sum_laplacian_interval(std::size_t n);

/** Separable Gaussian bump sampled on the same grid:
 *  c[j*n+i] = (2/pi) exp(-2 (x_i - 1/2)^2) exp(-2 (y_j - 1/2)^2). */
Eigen::VectorXd gaussian_rhs(std::size_t n);

/** Rescales the pair (A, c) to (A / |c|^2, c / |c|) so both solver inputs are
 *  O(1); the equation solution is invariant under this change. Propagates any
 *  spectral hint. Throws InputError when c = 0. */
std::pair<std::shared_ptr<const SymmetricOperator>, Eigen::VectorXd>
normalize_problem(std::shared_ptr<const SymmetricOperator> op,
                  const Eigen::VectorXd& c);

}  // namespace lyap
