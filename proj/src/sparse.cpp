#include "lyapcomp/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lyapcomp/errors.hpp"

namespace lyap {

SparseCSR SparseCSR::from_triplets(
    std::size_t n,
    std::vector<std::tuple<std::size_t, std::size_t, double>> triplets) {
  for (const auto& [r, c, v] : triplets) {
    (void)v;
    if (r >= n || c >= n) {
      throw InputError("triplet index out of range for a " + std::to_string(n) +
                       "-dimensional matrix");
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& lhs, const auto& rhs) {
              return std::tie(std::get<0>(lhs), std::get<1>(lhs)) <
                     std::tie(std::get<0>(rhs), std::get<1>(rhs));
            });

  SparseCSR out;
  out.n = n;
  out.row_offsets.assign(n + 1, 0);
  out.col_indices.reserve(triplets.size());
  out.values.reserve(triplets.size());

  std::size_t i = 0;
  for (std::size_t row = 0; row < n; ++row) {
    out.row_offsets[row] = out.values.size();
    while (i < triplets.size() && std::get<0>(triplets[i]) == row) {
      const std::size_t col = std::get<1>(triplets[i]);
      double sum = 0.0;
      while (i < triplets.size() && std::get<0>(triplets[i]) == row &&
             std::get<1>(triplets[i]) == col) {
        sum += std::get<2>(triplets[i]);
        ++i;
      }
      out.col_indices.push_back(col);
      out.values.push_back(sum);
    }
  }
  out.row_offsets[n] = out.values.size();

  for (std::size_t row = 0; row < n; ++row) {
    out.max_row_nnz = std::max(out.max_row_nnz,
                               out.row_offsets[row + 1] - out.row_offsets[row]);
  }
  return out;
}

SparseCSR SparseCSR::identity(std::size_t n) {
  SparseCSR out;
  out.n = n;
  out.row_offsets.resize(n + 1);
  out.col_indices.resize(n);
  out.values.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    out.row_offsets[i] = i;
    out.col_indices[i] = i;
  }
  out.row_offsets[n] = n;
  out.max_row_nnz = n > 0 ? 1 : 0;
  return out;
}

void SparseCSR::validate() const {
  if (row_offsets.size() != n + 1) {
    throw InputError("row offset array has the wrong length");
  }
  if (row_offsets.front() != 0 || row_offsets.back() != values.size() ||
      col_indices.size() != values.size()) {
    throw InputError("row offsets do not cover the stored entries");
  }
  for (std::size_t row = 0; row < n; ++row) {
    if (row_offsets[row] > row_offsets[row + 1]) {
      throw InputError("row offsets are not monotone");
    }
    for (std::size_t p = row_offsets[row]; p < row_offsets[row + 1]; ++p) {
      if (col_indices[p] >= n) {
        throw InputError("column index out of range at row " +
                         std::to_string(row));
      }
      if (p > row_offsets[row] && col_indices[p - 1] >= col_indices[p]) {
        throw InputError("column indices are not strictly increasing in row " +
                         std::to_string(row));
      }
    }
  }
}

Eigen::MatrixXd SparseCSR::to_dense() const {
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t p = row_offsets[row]; p < row_offsets[row + 1]; ++p) {
      dense(static_cast<Eigen::Index>(row),
            static_cast<Eigen::Index>(col_indices[p])) += values[p];
    }
  }
  return dense;
}

double SparseCSR::abs_norm_estimate(int iterations) const {
  if (n == 0 || values.empty()) return 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  x.normalize();
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  double norm = 0.0;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t row = 0; row < n; ++row) {
      double acc = 0.0;
      for (std::size_t p = row_offsets[row]; p < row_offsets[row + 1]; ++p) {
        acc += std::abs(values[p]) * x[static_cast<Eigen::Index>(col_indices[p])];
      }
      y[static_cast<Eigen::Index>(row)] = acc;
    }
    norm = y.norm();
    if (norm == 0.0) return 0.0;
    x = y / norm;
  }
  return norm;
}

}  // namespace lyap
