#pragma once

#include "lyapcomp/zolotarev.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace lyap {

/** Orthonormal basis of the rational Krylov space
 *  Q(S, B, xi) = { q(S)^{-1} p(S) B : deg p <= k-1 },  q = prod (z - xi_i).
 *  Note this space excludes span(B) itself in general. Width is
 *  k * block_width minus any rank-deficiency drops. */
struct RationalBasis {
  Eigen::MatrixXd v;
  std::vector<std::complex<double>> poles;
  std::size_t block_width = 0;
  std::size_t source_dim = 0;
  std::size_t dropped = 0;
  std::vector<std::string> warnings;
};

/** Builds the basis by the shifted-solve chain D_j = (S - xi_j I)^{-1} D_{j-1}
 *  with full orthogonalization of every new block against the accepted basis.
 *  S is a small dense symmetric matrix (a projected operator). Poles equal to
 *  an eigenvalue of S are perturbed away with a warning. Conjugate pole pairs
 *  are handled through the real quadratic (S - xi)(S - conj(xi)); a non-closed
 *  complex pole list is rejected. */
RationalBasis rational_block_arnoldi(const Eigen::MatrixXd& s,
                                     const Eigen::MatrixXd& b,
                                     const std::vector<std::complex<double>>& poles);

RationalBasis rational_block_arnoldi(const Eigen::MatrixXd& s,
                                     const Eigen::MatrixXd& b,
                                     const PoleSet& poles);

}  // namespace lyap
