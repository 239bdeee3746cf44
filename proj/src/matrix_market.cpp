#include "lyapcomp/matrix_market.hpp"

#include "lyapcomp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace lyap {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& name, std::size_t line,
                       const std::string& what) {
  throw InputError(name + ":" + std::to_string(line) + ": " + what);
}

/** Reads the next line that carries data, skipping blanks and % comments.
 *  Returns false at end of stream. */
bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '%') continue;
    return true;
  }
  return false;
}

void check_numeric_symmetry(const SparseCSR& a, const std::string& name) {
  double maxabs = 0.0;
  for (double v : a.values) maxabs = std::max(maxabs, std::abs(v));
  const double tol = 1e-12 * maxabs;
  for (std::size_t r = 0; r < a.n; ++r) {
    for (std::size_t p = a.row_offsets[r]; p < a.row_offsets[r + 1]; ++p) {
      const std::size_t c = a.col_indices[p];
      const auto lo = a.col_indices.begin() + static_cast<std::ptrdiff_t>(a.row_offsets[c]);
      const auto hi = a.col_indices.begin() + static_cast<std::ptrdiff_t>(a.row_offsets[c + 1]);
      const auto it = std::lower_bound(lo, hi, r);
      const double mirror =
          (it != hi && *it == r)
              ? a.values[static_cast<std::size_t>(it - a.col_indices.begin())]
              : 0.0;
      if (std::abs(a.values[p] - mirror) > tol)
        throw InputError(name + ": matrix declared general is not symmetric (entry (" +
                         std::to_string(r + 1) + "," + std::to_string(c + 1) + "))");
    }
  }
}

}  // namespace

SparseCSR load_matrix_market(std::istream& in, const std::string& name) {
  std::size_t lineno = 0;
  std::string line;
  if (!std::getline(in, line)) fail(name, 1, "empty file");
  ++lineno;

  std::istringstream hdr(line);
  std::string banner, object, format, field, symmetry;
  hdr >> banner >> object >> format >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket")
    fail(name, lineno, "missing MatrixMarket banner");
  if (lower(object) != "matrix")
    fail(name, lineno, "unsupported object '" + object + "'");
  format = lower(format);
  if (format != "coordinate")
    fail(name, lineno, "unsupported format '" + format + "' (coordinate only)");
  field = lower(field);
  if (field != "real" && field != "integer")
    fail(name, lineno, "unsupported field '" + field + "' (real only)");
  symmetry = lower(symmetry);
  if (symmetry != "general" && symmetry != "symmetric")
    fail(name, lineno, "unsupported symmetry '" + symmetry + "'");

  if (!next_data_line(in, line, lineno)) fail(name, lineno, "missing size line");
  long long rows = -1, cols = -1, entries = -1;
  {
    std::istringstream ls(line);
    if (!(ls >> rows >> cols >> entries) || rows < 0 || cols < 0 || entries < 0)
      fail(name, lineno, "malformed size line");
    std::string extra;
    if (ls >> extra) fail(name, lineno, "trailing tokens on size line");
  }
  if (rows != cols)
    fail(name, lineno, "matrix must be square, got " + std::to_string(rows) +
                           "x" + std::to_string(cols));
  const std::size_t n = static_cast<std::size_t>(rows);
  if (n == 0) fail(name, lineno, "matrix dimension is zero");

  std::vector<std::tuple<std::size_t, std::size_t, double>> trip;
  trip.reserve(static_cast<std::size_t>(entries) * (symmetry == "symmetric" ? 2 : 1));
  for (long long e = 0; e < entries; ++e) {
    if (!next_data_line(in, line, lineno))
      fail(name, lineno, "file ends after " + std::to_string(e) + " of " +
                             std::to_string(entries) + " entries");
    std::istringstream ls(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(ls >> i >> j >> v)) fail(name, lineno, "malformed entry line");
    std::string extra;
    if (ls >> extra) fail(name, lineno, "trailing tokens on entry line");
    if (i < 1 || j < 1 || i > rows || j > cols)
      fail(name, lineno, "entry index out of range");
    if (!std::isfinite(v)) fail(name, lineno, "entry value is not finite");
    const std::size_t r = static_cast<std::size_t>(i - 1);
    const std::size_t c = static_cast<std::size_t>(j - 1);
    trip.emplace_back(r, c, v);
    if (symmetry == "symmetric" && r != c) trip.emplace_back(c, r, v);
  }
  if (next_data_line(in, line, lineno))
    fail(name, lineno, "trailing data after declared entry count");

  SparseCSR a = SparseCSR::from_triplets(n, trip);
  if (symmetry == "general") check_numeric_symmetry(a, name);
  return a;
}

SparseCSR load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  return load_matrix_market(in, path);
}

Eigen::VectorXd read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open vector file '" + path + "'");
  std::vector<double> vals;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto cut = line.find('%');
    if (cut != std::string::npos) line.erase(cut);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        vals.push_back(v);
      } catch (const std::exception&) {
        throw InputError(path + ":" + std::to_string(lineno) +
                         ": not a number: '" + tok + "'");
      }
    }
  }
  if (vals.empty()) throw InputError(path + ": no numbers found");
  return Eigen::Map<const Eigen::VectorXd>(vals.data(),
                                           static_cast<Eigen::Index>(vals.size()));
}

}  // namespace lyap
