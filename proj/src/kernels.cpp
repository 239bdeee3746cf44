#include "lyapcomp/kernels.hpp"

#include <atomic>
#include <cmath>

#include "lyapcomp/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lyap::kern {

namespace {

#ifdef _OPENMP
Backend default_backend() { return Backend::openmp; }
int captured_threads() {
  static const int t = omp_get_max_threads();
  return t;
}
#else
Backend default_backend() { return Backend::serial; }
int captured_threads() { return 1; }
#endif

std::atomic<Backend> g_backend{default_backend()};

// Below this length the parallel paths are pure overhead.
constexpr std::size_t kParGrain = 16384;

bool parallel_for_length(std::size_t n) {
  return g_backend.load(std::memory_order_relaxed) == Backend::openmp &&
         n >= kParGrain && captured_threads() > 1;
}

double dot_serial(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

void set_backend(Backend b) {
#ifndef _OPENMP
  if (b == Backend::openmp) throw UsageError("OpenMP backend not compiled in");
#endif
  g_backend.store(b, std::memory_order_relaxed);
}

Backend backend() { return g_backend.load(std::memory_order_relaxed); }

int thread_count() { return captured_threads(); }

double dot(const double* x, const double* y, std::size_t n) {
  if (!parallel_for_length(n)) return dot_serial(x, y, n);
#ifdef _OPENMP
  const int nch = captured_threads();
  std::vector<double> partial(static_cast<std::size_t>(nch), 0.0);
#pragma omp parallel for schedule(static) num_threads(nch)
  for (int c = 0; c < nch; ++c) {
    const std::size_t lo = n * static_cast<std::size_t>(c) / nch;
    const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / nch;
    partial[static_cast<std::size_t>(c)] = dot_serial(x + lo, y + lo, hi - lo);
  }
  double s = 0.0;
  for (int c = 0; c < nch; ++c) s += partial[static_cast<std::size_t>(c)];
  return s;
#else
  return dot_serial(x, y, n);
#endif
}

double nrm2(const double* x, std::size_t n) { return std::sqrt(dot(x, x, n)); }

void axpy(double a, const double* x, double* y, std::size_t n) {
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void copy(const double* x, double* y, std::size_t n) {
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i];
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i];
}

void copy_scaled(double a, const double* x, double* y, std::size_t n) {
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

void fill(double a, double* x, std::size_t n) {
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) x[i] = a;
    return;
#endif
  }
  for (std::size_t i = 0; i < n; ++i) x[i] = a;
}

void csr_apply(const SparseCSR& a, const double* x, double* y, bool accumulate) {
  const std::size_t n = a.n;
  auto row = [&](std::size_t r) {
    double acc = 0.0;
    for (std::size_t idx = a.row_offsets[r]; idx < a.row_offsets[r + 1]; ++idx)
      acc += a.values[idx] * x[a.col_indices[idx]];
    y[r] = accumulate ? y[r] + acc : acc;
  };
  if (parallel_for_length(n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < n; ++r) row(r);
    return;
#endif
  }
  for (std::size_t r = 0; r < n; ++r) row(r);
}

void slots_transform(const std::vector<double*>& src,
                     const std::vector<double*>& dst,
                     const Eigen::MatrixXd& v, std::size_t n) {
  const std::size_t ns = src.size();
  const std::size_t nd = dst.size();
  if (static_cast<std::size_t>(v.rows()) != ns ||
      static_cast<std::size_t>(v.cols()) != nd)
    throw UsageError("slots_transform: coefficient shape mismatch");
  auto rows = [&](std::size_t lo, std::size_t hi, double* tmp) {
    for (std::size_t r = lo; r < hi; ++r) {
      for (std::size_t j = 0; j < nd; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < ns; ++i) acc += src[i][r] * v(i, j);
        tmp[j] = acc;
      }
      for (std::size_t j = 0; j < nd; ++j) dst[j][r] = tmp[j];
    }
  };
  if (parallel_for_length(n)) {
#ifdef _OPENMP
    const int nch = captured_threads();
#pragma omp parallel num_threads(nch)
    {
      std::vector<double> tmp(nd);
#pragma omp for schedule(static)
      for (int c = 0; c < nch; ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / nch;
        const std::size_t hi = n * (static_cast<std::size_t>(c) + 1) / nch;
        rows(lo, hi, tmp.data());
      }
    }
    return;
#endif
  }
  std::vector<double> tmp(nd);
  rows(0, n, tmp.data());
}

}  // namespace lyap::kern
