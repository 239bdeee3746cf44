#include "lyapcomp/dense_core.hpp"

#include "lyapcomp/errors.hpp"

#include <cmath>

namespace lyap {

Eigen::MatrixXd TridiagonalMatrix::to_dense() const {
  const auto m = static_cast<Eigen::Index>(order());
  if (offdiag.size() + 1 != diag.size() && !(diag.empty() && offdiag.empty()))
    throw UsageError("TridiagonalMatrix: offdiag must have order-1 entries");
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, i) = diag[static_cast<std::size_t>(i)];
    if (i + 1 < m) {
      t(i, i + 1) = offdiag[static_cast<std::size_t>(i)];
      t(i + 1, i) = offdiag[static_cast<std::size_t>(i)];
    }
  }
  return t;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) throw UsageError("sym_eig: matrix must be square");
  Eigen::MatrixXd sym = 0.5 * (h + h.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success)
    throw NumericalError("symmetric eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const TridiagonalMatrix& t) {
  const auto m = static_cast<Eigen::Index>(t.order());
  Eigen::Map<const Eigen::VectorXd> d(t.diag.data(), m);
  Eigen::Map<const Eigen::VectorXd> e(t.offdiag.data(),
                                      std::max<Eigen::Index>(m - 1, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(d, e);
  if (es.info() != Eigen::Success)
    throw NumericalError("tridiagonal eigensolver failed to converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXd solve_projected_lyapunov(const Eigen::MatrixXd& h,
                                         const Eigen::VectorXd& g,
                                         double scale) {
  if (g.size() != h.rows())
    throw UsageError("solve_projected_lyapunov: size mismatch");
  auto [lam, v] = sym_eig(h);
  const double lmax = lam.size() ? lam.cwiseAbs().maxCoeff() : 0.0;
  const Eigen::VectorXd ghat = v.transpose() * g;
  const auto m = lam.size();
  Eigen::MatrixXd ytil(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double den = lam[i] + lam[j];
      if (std::abs(den) <= 1e-14 * lmax || den == 0.0)
        throw NumericalError("projected equation is singular: eigenvalue sum "
                             "vanishes");
      ytil(i, j) = scale * ghat[i] * ghat[j] / den;
    }
  }
  Eigen::MatrixXd y = v * ytil * v.transpose();
  return 0.5 * (y + y.transpose());
}

OrthoResult orthonormalize(const Eigen::MatrixXd& block,
                           const Eigen::MatrixXd& against) {
  const Eigen::Index n = block.rows();
  const Eigen::Index p = block.cols();
  const Eigen::Index na = against.cols();
  if (na > 0 && against.rows() != n)
    throw UsageError("orthonormalize: row counts differ");

  Eigen::MatrixXd q(n, p);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(na + p, p);
  Eigen::Index kept = 0;
  std::size_t dropped = 0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (Eigen::Index j = 0; j < p; ++j) {
    Eigen::VectorXd v = block.col(j);
    const double pre = v.norm();
    if (pre == 0.0) {
      ++dropped;
      continue;
    }
    const auto sweep = [&] {
      for (Eigen::Index i = 0; i < na; ++i) {
        const double h = against.col(i).dot(v);
        v -= h * against.col(i);
        r(i, j) += h;
      }
      for (Eigen::Index i = 0; i < kept; ++i) {
        const double h = q.col(i).dot(v);
        v -= h * q.col(i);
        r(na + i, j) += h;
      }
    };
    sweep();
    double post = v.norm();
    if (post < pre * inv_sqrt2) {
      sweep();
      post = v.norm();
    }
    if (post <= 1e-12 * pre) {
      ++dropped;
      continue;
    }
    q.col(kept) = v / post;
    r(na + kept, j) = post;
    ++kept;
  }
  q.conservativeResize(n, kept);
  r.conservativeResize(na + kept, p);
  return {std::move(q), std::move(r), dropped};
}

}  // namespace lyap
