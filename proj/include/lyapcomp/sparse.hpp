#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace lyap {

/** Square sparse matrix in compressed-sparse-row form.
 *  Column indices are sorted within each row and duplicates are summed
 *  during assembly. max_row_nnz is the densest row, used by the
 *  finite-precision diagnostics. */
struct SparseCSR {
  std::size_t n = 0;
  std::vector<std::size_t> row_offsets;
  std::vector<std::size_t> col_indices;
  std::vector<double> values;
  std::size_t max_row_nnz = 0;

  static SparseCSR from_triplets(
      std::size_t n,
      std::vector<std::tuple<std::size_t, std::size_t, double>> triplets);

  static SparseCSR identity(std::size_t n);

  std::size_t nnz() const { return values.size(); }

  /** Throws InputError when offsets are not monotone or an index is out of range. */
  void validate() const;

  Eigen::MatrixXd to_dense() const;

  /** 2-norm of the entrywise absolute-value matrix, estimated by a few power
   *  iterations; enters the finite-precision constants. */
  double abs_norm_estimate(int iterations = 30) const;
};

}  // namespace lyap
