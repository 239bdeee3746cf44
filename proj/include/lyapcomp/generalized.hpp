#pragma once

#include "lyapcomp/operators.hpp"
#include "lyapcomp/sparse.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <memory>

namespace lyap {

/** Operator v -> -L^{-1} M L^{-T} v built from a symmetric M and an SPD mass
 *  matrix E = L L^T. Turns the generalized equation M X E + E X M = -B B^T
 *  into the standard form handled by the solvers; the right-hand side maps to
 *  -L^{-1} B. Each apply counts as one matvec (two triangular solves plus one
 *  multiply by M). */
class GeneralizedOperator : public SymmetricOperator {
 public:
  GeneralizedOperator(SparseCSR m, const SparseCSR& e);

  /** -L^{-1} b, the right-hand side of the transformed equation. */
  Eigen::VectorXd transform_rhs(const Eigen::VectorXd& b) const;

  /** The factor L the operator actually uses, densely (a row permutation of a
   *  lower-triangular matrix, E = L L^T). Testing aid. */
  Eigen::MatrixXd dense_factor() const;

 protected:
  void apply_impl(const double* x, double* y, bool add) const override;

 private:
  SparseCSR m_;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                       Eigen::AMDOrdering<int>>
      llt_;
};

std::shared_ptr<GeneralizedOperator> cholesky_transformed_operator(
    SparseCSR m, const SparseCSR& e);

}  // namespace lyap
