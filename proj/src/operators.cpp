#include "lyapcomp/operators.hpp"

#include "lyapcomp/errors.hpp"
#include "lyapcomp/kernels.hpp"

#include <utility>
#include <vector>

namespace lyap {

CsrSymOperator::CsrSymOperator(SparseCSR a)
    : SymmetricOperator(a.n), a_(std::move(a)) {
  a_.validate();
}

void CsrSymOperator::apply_impl(const double* x, double* y, bool add) const {
  kern::csr_apply(a_, x, y, add);
}

ScaledSymmetricOperator::ScaledSymmetricOperator(
    std::shared_ptr<const SymmetricOperator> base, double scale)
    : SymmetricOperator(base ? base->dim() : 0),
      base_(std::move(base)),
      scale_(scale) {
  if (!base_) throw UsageError("ScaledSymmetricOperator: null base");
  if (auto h = base_->spectral_hint()) {
    if (scale_ >= 0.0)
      set_spectral_hint(scale_ * h->first, scale_ * h->second);
    else
      set_spectral_hint(scale_ * h->second, scale_ * h->first);
  }
}

void ScaledSymmetricOperator::apply_impl(const double* x, double* y,
                                         bool add) const {
  if (!add) {
    base_->apply(x, y);
    kern::scal(scale_, y, dim());
    return;
  }
  thread_local std::vector<double> tmp;
  tmp.resize(dim());
  base_->apply(x, tmp.data());
  kern::axpy(scale_, tmp.data(), y, dim());
}

}  // namespace lyap
