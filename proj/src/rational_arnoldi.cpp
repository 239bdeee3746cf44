#include "lyapcomp/rational_arnoldi.hpp"

#include "lyapcomp/dense_core.hpp"
#include "lyapcomp/errors.hpp"

#include <Eigen/LU>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace lyap {

namespace {

struct PoleStep {
  bool quadratic;
  double re;
  double im;
};

/** Groups the pole list into real steps and conjugate-pair steps, rejecting
 *  lists that are not closed under conjugation. */
std::vector<PoleStep> plan_steps(const std::vector<std::complex<double>>& poles) {
  std::vector<PoleStep> steps;
  std::vector<bool> used(poles.size(), false);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const auto xi = poles[i];
    if (xi.imag() == 0.0 || std::abs(xi.imag()) <= 1e-14 * std::abs(xi)) {
      steps.push_back({false, xi.real(), 0.0});
      continue;
    }
    bool paired = false;
    for (std::size_t j = i + 1; j < poles.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(poles[j] - std::conj(xi)) <= 1e-10 * (1.0 + std::abs(xi))) {
        used[j] = true;
        paired = true;
        break;
      }
    }
    if (!paired)
      throw InputError("rational_block_arnoldi: pole list is not closed under "
                       "conjugation");
    steps.push_back({true, xi.real(), std::abs(xi.imag())});
  }
  return steps;
}

}  // namespace

RationalBasis rational_block_arnoldi(
    const Eigen::MatrixXd& s, const Eigen::MatrixXd& b,
    const std::vector<std::complex<double>>& poles) {
  const Eigen::Index n = s.rows();
  if (s.cols() != n) throw UsageError("rational_block_arnoldi: S must be square");
  if (b.rows() != n)
    throw UsageError("rational_block_arnoldi: block height does not match S");
  if (b.cols() == 0 || poles.empty())
    throw UsageError("rational_block_arnoldi: empty block or pole list");

  RationalBasis out;
  out.block_width = static_cast<std::size_t>(b.cols());
  out.source_dim = static_cast<std::size_t>(n);

  auto steps = plan_steps(poles);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (s + s.transpose()),
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("rational_block_arnoldi: eigenvalue scan failed");
  const Eigen::VectorXd lam = es.eigenvalues();
  const double snorm = lam.size() ? lam.cwiseAbs().maxCoeff() : 0.0;
  const double scale = snorm > 0.0 ? snorm : 1.0;

  for (auto& st : steps) {
    if (st.quadratic) continue;
    int tries = 0;
    while ((lam.array() - st.re).abs().minCoeff() <= 1e-12 * scale) {
      const double old = st.re;
      st.re -= 1e-8 * scale;
      out.warnings.push_back("pole " + std::to_string(old) +
                             " collides with an eigenvalue; perturbed to " +
                             std::to_string(st.re));
      if (++tries > 64)
        throw NumericalError("rational_block_arnoldi: could not move pole off "
                             "the spectrum");
    }
  }
  for (const auto& st : steps) {
    if (st.quadratic) {
      out.poles.emplace_back(st.re, st.im);
      out.poles.emplace_back(st.re, -st.im);
    } else {
      out.poles.emplace_back(st.re, 0.0);
    }
  }

  auto d0 = orthonormalize(b);
  if (d0.q.cols() == 0)
    throw InputError("rational_block_arnoldi: starting block is zero");
  if (d0.dropped)
    out.warnings.push_back("starting block is rank deficient; dropped " +
                           std::to_string(d0.dropped) + " column(s)");

  Eigen::MatrixXd v(n, 0);
  const auto append = [&](const Eigen::MatrixXd& x) {
    auto res = orthonormalize(x, v);
    if (res.dropped) {
      out.dropped += res.dropped;
      out.warnings.push_back("dropped " + std::to_string(res.dropped) +
                             " dependent column(s) from a pole step");
    }
    if (res.q.cols() > 0) {
      v.conservativeResize(n, v.cols() + res.q.cols());
      v.rightCols(res.q.cols()) = res.q;
    }
    return res.q;
  };

  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd d_prev = d0.q;
  for (const auto& st : steps) {
    if (d_prev.cols() == 0) {
      out.warnings.push_back("chain reached an invariant subspace early");
      break;
    }
    if (!st.quadratic) {
      Eigen::MatrixXd x = (s - st.re * eye).partialPivLu().solve(d_prev);
      d_prev = append(x);
    } else {
      const double modsq = st.re * st.re + st.im * st.im;
      Eigen::MatrixXd quad = s * s - 2.0 * st.re * s + modsq * eye;
      Eigen::MatrixXd x1 = quad.partialPivLu().solve(d_prev);
      Eigen::MatrixXd x2 = s * x1;
      append(x1);
      d_prev = append(x2);
    }
  }
  out.v = std::move(v);
  return out;
}

RationalBasis rational_block_arnoldi(const Eigen::MatrixXd& s,
                                     const Eigen::MatrixXd& b,
                                     const PoleSet& poles) {
  std::vector<std::complex<double>> zs;
  zs.reserve(poles.poles.size());
  for (double xi : poles.poles) zs.emplace_back(xi, 0.0);
  return rational_block_arnoldi(s, b, zs);
}

}  // namespace lyap
