#include "lyapcomp/generalized.hpp"

#include "lyapcomp/errors.hpp"
#include "lyapcomp/kernels.hpp"

#include <Eigen/SparseCore>
#include <utility>
#include <vector>

namespace lyap {

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseCSR& a) {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(a.nnz());
  for (std::size_t r = 0; r < a.n; ++r)
    for (std::size_t p = a.row_offsets[r]; p < a.row_offsets[r + 1]; ++p)
      trip.emplace_back(static_cast<int>(r), static_cast<int>(a.col_indices[p]),
                        a.values[p]);
  Eigen::SparseMatrix<double> s(static_cast<Eigen::Index>(a.n),
                                static_cast<Eigen::Index>(a.n));
  s.setFromTriplets(trip.begin(), trip.end());
  return s;
}

}  // namespace

GeneralizedOperator::GeneralizedOperator(SparseCSR m, const SparseCSR& e)
    : SymmetricOperator(m.n), m_(std::move(m)) {
  m_.validate();
  if (e.n != m_.n)
    throw InputError("generalized operator: M and E dimensions differ");
  llt_.compute(to_eigen(e));
  if (llt_.info() != Eigen::Success)
    throw NumericalError("mass matrix Cholesky failed: E is not positive definite");
}

void GeneralizedOperator::apply_impl(const double* x, double* y,
                                     bool add) const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::Map<const Eigen::VectorXd> xm(x, n);
  Eigen::VectorXd w = llt_.permutationPinv() * llt_.matrixU().solve(xm).eval();
  Eigen::VectorXd t(n);
  kern::csr_apply(m_, w.data(), t.data(), false);
  Eigen::VectorXd r =
      llt_.matrixL().solve((llt_.permutationP() * t).eval());
  if (add)
    kern::axpy(-1.0, r.data(), y, dim());
  else
    for (Eigen::Index i = 0; i < n; ++i) y[i] = -r[i];
}

Eigen::VectorXd GeneralizedOperator::transform_rhs(
    const Eigen::VectorXd& b) const {
  if (b.size() != static_cast<Eigen::Index>(dim()))
    throw InputError("transform_rhs: vector length does not match operator");
  return -llt_.matrixL().solve((llt_.permutationP() * b).eval());
}

Eigen::MatrixXd GeneralizedOperator::dense_factor() const {
  Eigen::MatrixXd l = llt_.matrixL();
  return llt_.permutationPinv() * l;
}

std::shared_ptr<GeneralizedOperator> cholesky_transformed_operator(
    SparseCSR m, const SparseCSR& e) {
  return std::make_shared<GeneralizedOperator>(std::move(m), e);
}

}  // namespace lyap
