#include "oracles.hpp"

#include <cmath>
#include <random>

namespace oracle {

Eigen::MatrixXd lyapunov_dense(const Eigen::MatrixXd& a,
                               const Eigen::VectorXd& c) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    big.block(j * n, j * n, n, n) = a;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index r = 0; r < n; ++r)
        big(j * n + r, i * n + r) += a(j, i);
  const Eigen::MatrixXd rhs = c * c.transpose();
  const Eigen::VectorXd vec =
      Eigen::Map<const Eigen::VectorXd>(rhs.data(), n * n);
  const Eigen::VectorXd sol = big.partialPivLu().solve(vec);
  return Eigen::Map<const Eigen::MatrixXd>(sol.data(), n, n);
}

double residual_dense(const Eigen::MatrixXd& a, const Eigen::MatrixXd& x,
                      const Eigen::VectorXd& c) {
  return (a * x + x * a - c * c.transpose()).norm();
}

DenseOperator::DenseOperator(Eigen::MatrixXd a)
    : lyap::SymmetricOperator(static_cast<std::size_t>(a.rows())),
      a_(std::move(a)) {}

void DenseOperator::apply_impl(const double* x, double* y, bool add) const {
  const Eigen::Index n = a_.rows();
  Eigen::Map<const Eigen::VectorXd> xv(x, n);
  Eigen::Map<Eigen::VectorXd> yv(y, n);
  if (add)
    yv += a_ * xv;
  else
    yv = a_ * xv;
}

DiagOperator::DiagOperator(Eigen::VectorXd d)
    : lyap::SymmetricOperator(static_cast<std::size_t>(d.size())),
      d_(std::move(d)) {}

void DiagOperator::apply_impl(const double* x, double* y, bool add) const {
  const Eigen::Index n = d_.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = d_(i) * x[i];
    y[i] = add ? y[i] + v : v;
  }
}

Eigen::MatrixXd kron_sum_dense(const Eigen::MatrixXd& b) {
  const Eigen::Index n = b.rows();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * n, j * n, n, n) +=
          b(i, j) * Eigen::MatrixXd::Identity(n, n);
      if (i == j) out.block(i * n, j * n, n, n) += b;
    }
  return out;
}

double max_principal_angle_sin(const Eigen::MatrixXd& u,
                               const Eigen::MatrixXd& v) {
  const Eigen::HouseholderQR<Eigen::MatrixXd> qu(u);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qv(v);
  const Eigen::MatrixXd quq =
      qu.householderQ() * Eigen::MatrixXd::Identity(u.rows(), u.cols());
  const Eigen::MatrixXd qvq =
      qv.householderQ() * Eigen::MatrixXd::Identity(v.rows(), v.cols());
  // sqrt(1 - cos^2) squares small angles below sqrt(eps) into noise; the
  // projection residual gives the largest sine directly.
  const Eigen::MatrixXd res = qvq - quq * (quq.transpose() * qvq);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(res);
  return svd.singularValues().maxCoeff();
}

Eigen::MatrixXd rational_space_direct(const Eigen::MatrixXd& s,
                                      const Eigen::MatrixXd& b,
                                      const std::vector<double>& poles) {
  const Eigen::Index n = s.rows();
  const Eigen::Index p = b.cols();
  const Eigen::Index k = static_cast<Eigen::Index>(poles.size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  for (double xi : poles) q = q * (s - xi * Eigen::MatrixXd::Identity(n, n));
  Eigen::MatrixXd powers(n, p * k);
  Eigen::MatrixXd cur = b;
  for (Eigen::Index j = 0; j < k; ++j) {
    powers.middleCols(j * p, p) = cur;
    cur = s * cur;
  }
  // The power block is only a span; replacing it with an orthonormal factor
  // keeps the solve conditioned by q(S) alone.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(powers);
  Eigen::MatrixXd thin_q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, p * k);
  return q.partialPivLu().solve(thin_q);
}

double elliptic_k_series(double m) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 4000; ++n) {
    const double f = (2.0 * n - 1.0) / (2.0 * n);
    term *= f * f * m;
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return 1.5707963267948966 * sum;
}

Eigen::MatrixXd random_spd(std::size_t n, unsigned seed, double cond) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gauss(rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd lam(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    lam(i) = std::pow(cond, t);
  }
  return q * lam.asDiagonal() * q.transpose();
}

Eigen::VectorXd random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = dist(rng);
  return v;
}

Eigen::MatrixXd assemble_dense(const lyap::LowRankSolution& sol) {
  return sol.z * sol.y * sol.z.transpose();
}

}  // namespace oracle
