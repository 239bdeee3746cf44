#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "lyapcomp/sparse.hpp"

namespace lyap::kern {

/** Vector kernels come in two interchangeable flavors. The OpenMP backend
 *  splits reductions into chunks whose boundaries depend only on the length
 *  and a thread count captured at startup, with partial sums combined in
 *  chunk order, so results are reproducible run to run. The serial backend
 *  is the plain-loop reference used for testing and as the fallback build. */
enum class Backend { serial, openmp };

void set_backend(Backend b);
Backend backend();

/** Thread count the OpenMP backend was pinned to (1 in serial builds). */
int thread_count();

double dot(const double* x, const double* y, std::size_t n);
double nrm2(const double* x, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void copy(const double* x, double* y, std::size_t n);
void copy_scaled(double a, const double* x, double* y, std::size_t n);
void fill(double a, double* x, std::size_t n);

/** y = A x, or y += A x when accumulate is set. Each output entry is a
 *  row-local sum over the stored column order. */
void csr_apply(const SparseCSR& a, const double* x, double* y, bool accumulate);

/** dst[j] = sum_i src[i] * V(i, j) for column vectors of length n.
 *  Works row by row with a per-row scratch, so dst slots may alias src slots;
 *  every dst pointer must either equal one of the src pointers or be disjoint
 *  from all of them. */
void slots_transform(const std::vector<double*>& src,
                     const std::vector<double*>& dst,
                     const Eigen::MatrixXd& v, std::size_t n);

}  // namespace lyap::kern
