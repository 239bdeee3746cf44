#include "lyapcomp/problems.hpp"

#include "lyapcomp/errors.hpp"

#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

namespace lyap {

SparseCSR kron_sum_laplacian(std::size_t n) {
  if (n == 0) throw InputError("kron_sum_laplacian: grid side must be positive");
  const std::size_t N = n * n;
  const double h2inv = static_cast<double>((n + 1) * (n + 1));
  std::vector<std::tuple<std::size_t, std::size_t, double>> trip;
  trip.reserve(5 * N);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = j * n + i;
      if (j > 0) trip.emplace_back(p, p - n, -h2inv);
      if (i > 0) trip.emplace_back(p, p - 1, -h2inv);
      trip.emplace_back(p, p, 4.0 * h2inv);
      if (i + 1 < n) trip.emplace_back(p, p + 1, -h2inv);
      if (j + 1 < n) trip.emplace_back(p, p + n, -h2inv);
    }
  }
  return SparseCSR::from_triplets(N, trip);
}

std::pair<double, double> kron_sum_laplacian_interval(std::size_t n) {
  if (n == 0) throw InputError("kron_sum_laplacian_interval: grid side must be positive");
  const double h2inv = static_cast<double>((n + 1) * (n + 1));
  const double pi = std::numbers::pi;
  const auto lam = [&](std::size_t l) {
    return h2inv * (2.0 - 2.0 * std::cos(static_cast<double>(l) * pi /
                                         static_cast<double>(n + 1)));
  };
  return {2.0 * lam(1), 2.0 * lam(n)};
}

Eigen::VectorXd gaussian_rhs(std::size_t n) {
  if (n == 0) throw InputError("gaussian_rhs: grid side must be positive");
  Eigen::VectorXd c(static_cast<Eigen::Index>(n * n));
  const double amp = 2.0 / std::numbers::pi;
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i + 1) / static_cast<double>(n + 1);
    g[i] = std::exp(-2.0 * (x - 0.5) * (x - 0.5));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      c[static_cast<Eigen::Index>(j * n + i)] = amp * g[i] * g[j];
  return c;
}

std::pair<std::shared_ptr<const SymmetricOperator>, Eigen::VectorXd>
normalize_problem(std::shared_ptr<const SymmetricOperator> op,
                  const Eigen::VectorXd& c) {
  if (!op) throw UsageError("normalize_problem: null operator");
  if (static_cast<std::size_t>(c.size()) != op->dim())
    throw InputError("normalize_problem: rhs length does not match operator");
  const double nrm = c.norm();
  if (!(nrm > 0.0) || !std::isfinite(nrm))
    throw InputError("normalize_problem: rhs must be nonzero and finite");
  auto scaled = std::make_shared<ScaledSymmetricOperator>(std::move(op),
                                                          1.0 / (nrm * nrm));
  return {scaled, c / nrm};
}

}  // namespace lyap
