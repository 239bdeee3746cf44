#pragma once

#include "lyapcomp/sparse.hpp"

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <utility>

namespace lyap {

/** Matrix-free symmetric operator y = A x. Implementations supply
 *  apply_impl; the base class counts applications so solvers can report
 *  and cap matvec work. An operator may carry a spectral hint, an interval
 *  [a, b] containing its spectrum, used for pole selection. */
class SymmetricOperator {
 public:
  explicit SymmetricOperator(std::size_t n) : n_(n) {}
  virtual ~SymmetricOperator() = default;

  /** y = A x. */
  void apply(const double* x, double* y) const {
    apply_impl(x, y, false);
    ++matvecs_;
  }

  /** y += A x. */
  void apply_add(const double* x, double* y) const {
    apply_impl(x, y, true);
    ++matvecs_;
  }

  std::size_t dim() const { return n_; }
  long matvec_count() const { return matvecs_.load(); }
  void reset_matvec_count() const { matvecs_.store(0); }

  std::optional<std::pair<double, double>> spectral_hint() const {
    return hint_;
  }
  void set_spectral_hint(double a, double b) { hint_ = {a, b}; }

 protected:
  virtual void apply_impl(const double* x, double* y, bool add) const = 0;

 private:
  std::size_t n_;
  mutable std::atomic<long> matvecs_{0};
  std::optional<std::pair<double, double>> hint_;
};

/** Sparse symmetric matrix in CSR form. */
class CsrSymOperator : public SymmetricOperator {
 public:
  explicit CsrSymOperator(SparseCSR a);

  const SparseCSR& matrix() const { return a_; }

 protected:
  void apply_impl(const double* x, double* y, bool add) const override;

 private:
  SparseCSR a_;
};

/** Lazy scalar multiple s * A of another operator. Scales any spectral
 *  hint of the base by the same factor. */
class ScaledSymmetricOperator : public SymmetricOperator {
 public:
  ScaledSymmetricOperator(std::shared_ptr<const SymmetricOperator> base,
                          double scale);

  double scale() const { return scale_; }
  const SymmetricOperator& base() const { return *base_; }

 protected:
  void apply_impl(const double* x, double* y, bool add) const override;

 private:
  std::shared_ptr<const SymmetricOperator> base_;
  double scale_;
};

}  // namespace lyap
