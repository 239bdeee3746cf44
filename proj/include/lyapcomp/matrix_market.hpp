#pragma once

#include "lyapcomp/sparse.hpp"

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

namespace lyap {

/** Reads a Matrix Market coordinate file holding a real square matrix.
 *  Symmetric files are expanded to full storage; general files are accepted
 *  only when the stored entries are numerically symmetric. Duplicate entries
 *  are summed. Throws InputError with a line number on malformed input. */
SparseCSR load_matrix_market(const std::string& path);
SparseCSR load_matrix_market(std::istream& in, const std::string& name);

/** Reads a dense vector: whitespace-separated numbers, '%' starts a comment
 *  line. Throws InputError when empty or malformed. */
Eigen::VectorXd read_vector_file(const std::string& path);

}  // namespace lyap
