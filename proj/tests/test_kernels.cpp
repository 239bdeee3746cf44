#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "lyapcomp/errors.hpp"
#include "lyapcomp/kernels.hpp"
#include "lyapcomp/problems.hpp"
#include "lyapcomp/sparse.hpp"

namespace kern = lyap::kern;

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(n);
  for (auto& v : out) v = dist(gen);
  return out;
}

struct BackendGuard {
  kern::Backend saved = kern::backend();
  ~BackendGuard() { kern::set_backend(saved); }
};

}  // namespace

TEST_CASE("vector kernels match Eigen on random data") {
  BackendGuard guard;
  kern::set_backend(kern::Backend::serial);
  const std::size_t n = 1537;
  auto xs = random_values(n, 1);
  auto ys = random_values(n, 2);
  Eigen::Map<Eigen::VectorXd> x(xs.data(), static_cast<Eigen::Index>(n));
  Eigen::Map<Eigen::VectorXd> y(ys.data(), static_cast<Eigen::Index>(n));

  CHECK(kern::dot(xs.data(), ys.data(), n) ==
        doctest::Approx(x.dot(y)).epsilon(1e-14));
  CHECK(kern::nrm2(xs.data(), n) == doctest::Approx(x.norm()).epsilon(1e-14));

  Eigen::VectorXd expect = y + 0.37 * x;
  kern::axpy(0.37, xs.data(), ys.data(), n);
  CHECK((y - expect).norm() <= 1e-14 * expect.norm());

  expect = 2.5 * x;
  kern::scal(2.5, xs.data(), n);
  CHECK((x - expect).norm() <= 1e-14 * expect.norm());

  std::vector<double> zs(n);
  kern::copy(xs.data(), zs.data(), n);
  CHECK(std::memcmp(zs.data(), xs.data(), n * sizeof(double)) == 0);

  kern::copy_scaled(-1.5, xs.data(), zs.data(), n);
  Eigen::Map<Eigen::VectorXd> z(zs.data(), static_cast<Eigen::Index>(n));
  CHECK((z + 1.5 * x).norm() <= 1e-14 * x.norm());

  kern::fill(3.25, zs.data(), n);
  for (double v : zs) REQUIRE(v == 3.25);
}

TEST_CASE("openmp backend agrees with serial and is run-to-run deterministic") {
  BackendGuard guard;
  const std::size_t n = 100003;
  auto xs = random_values(n, 3);
  auto ys = random_values(n, 4);

  kern::set_backend(kern::Backend::serial);
  const double dot_serial = kern::dot(xs.data(), ys.data(), n);
  const double nrm_serial = kern::nrm2(xs.data(), n);

  kern::set_backend(kern::Backend::openmp);
  const double dot_omp = kern::dot(xs.data(), ys.data(), n);
  const double nrm_omp = kern::nrm2(xs.data(), n);
  CHECK(std::abs(dot_omp - dot_serial) <= 1e-12 * std::abs(dot_serial));
  CHECK(std::abs(nrm_omp - nrm_serial) <= 1e-12 * nrm_serial);

  for (int rep = 0; rep < 5; ++rep) {
    CHECK(kern::dot(xs.data(), ys.data(), n) == dot_omp);
    CHECK(kern::nrm2(xs.data(), n) == nrm_omp);
  }

  auto y1 = ys;
  auto y2 = ys;
  kern::axpy(0.77, xs.data(), y1.data(), n);
  kern::set_backend(kern::Backend::serial);
  kern::axpy(0.77, xs.data(), y2.data(), n);
  CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);
}

TEST_CASE("csr_apply matches the dense product and honors accumulate") {
  BackendGuard guard;
  auto a = lyap::kron_sum_laplacian(7);
  const std::size_t n = a.n;
  auto xs = random_values(n, 5);
  Eigen::Map<Eigen::VectorXd> x(xs.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd expect = a.to_dense() * x;

  for (auto backend : {kern::Backend::serial, kern::Backend::openmp}) {
    kern::set_backend(backend);
    std::vector<double> ys(n, 7.0);
    kern::csr_apply(a, xs.data(), ys.data(), false);
    Eigen::Map<Eigen::VectorXd> y(ys.data(), static_cast<Eigen::Index>(n));
    CHECK((y - expect).norm() <= 1e-13 * expect.norm());

    kern::csr_apply(a, xs.data(), ys.data(), true);
    CHECK((y - 2.0 * expect).norm() <= 1e-13 * expect.norm());
  }
}

TEST_CASE("csr_apply is bitwise identical between backends") {
  BackendGuard guard;
  auto a = lyap::kron_sum_laplacian(9);
  auto xs = random_values(a.n, 6);
  std::vector<double> y1(a.n), y2(a.n);

  kern::set_backend(kern::Backend::serial);
  kern::csr_apply(a, xs.data(), y1.data(), false);
  kern::set_backend(kern::Backend::openmp);
  kern::csr_apply(a, xs.data(), y2.data(), false);
  CHECK(std::memcmp(y1.data(), y2.data(), a.n * sizeof(double)) == 0);
}

TEST_CASE("slots_transform applies the coefficient matrix columnwise") {
  BackendGuard guard;
  kern::set_backend(kern::Backend::serial);
  const std::size_t n = 64;
  const std::size_t cols_in = 5, cols_out = 3;
  std::vector<std::vector<double>> store;
  std::vector<double*> src;
  Eigen::MatrixXd dense(n, cols_in);
  for (std::size_t i = 0; i < cols_in; ++i) {
    store.push_back(random_values(n, 10 + static_cast<unsigned>(i)));
    src.push_back(store.back().data());
    dense.col(static_cast<Eigen::Index>(i)) =
        Eigen::Map<Eigen::VectorXd>(src.back(), static_cast<Eigen::Index>(n));
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Random(cols_in, cols_out);
  Eigen::MatrixXd expect = dense * v;

  std::vector<std::vector<double>> out_store(cols_out, std::vector<double>(n));
  std::vector<double*> dst;
  for (auto& s : out_store) dst.push_back(s.data());
  kern::slots_transform(src, dst, v, n);

  for (std::size_t j = 0; j < cols_out; ++j) {
    Eigen::Map<Eigen::VectorXd> got(dst[j], static_cast<Eigen::Index>(n));
    CHECK((got - expect.col(static_cast<Eigen::Index>(j))).norm() <=
          1e-13 * expect.norm());
  }
}

TEST_CASE("slots_transform works in place when dst aliases a src prefix") {
  BackendGuard guard;
  for (auto backend : {kern::Backend::serial, kern::Backend::openmp}) {
    kern::set_backend(backend);
    const std::size_t n = 97;
    const std::size_t cols_in = 6, cols_out = 4;
    std::vector<std::vector<double>> store;
    std::vector<double*> src;
    Eigen::MatrixXd dense(n, cols_in);
    for (std::size_t i = 0; i < cols_in; ++i) {
      store.push_back(random_values(n, 20 + static_cast<unsigned>(i)));
      src.push_back(store.back().data());
      dense.col(static_cast<Eigen::Index>(i)) =
          Eigen::Map<Eigen::VectorXd>(src.back(), static_cast<Eigen::Index>(n));
    }
    Eigen::MatrixXd v = Eigen::MatrixXd::Random(cols_in, cols_out);
    Eigen::MatrixXd expect = dense * v;

    std::vector<double*> dst(src.begin(),
                             src.begin() + static_cast<std::ptrdiff_t>(cols_out));
    kern::slots_transform(src, dst, v, n);

    for (std::size_t j = 0; j < cols_out; ++j) {
      Eigen::Map<Eigen::VectorXd> got(dst[j], static_cast<Eigen::Index>(n));
      CHECK((got - expect.col(static_cast<Eigen::Index>(j))).norm() <=
            1e-13 * expect.norm());
    }
  }
}

TEST_CASE("sparse assembly sums duplicates and validates indices") {
  auto a = lyap::SparseCSR::from_triplets(
      3, {{0, 0, 1.0}, {0, 0, 2.0}, {2, 1, 4.0}, {1, 2, 4.0}, {2, 2, 5.0}});
  CHECK(a.nnz() == 4);
  CHECK(a.max_row_nnz == 2);
  Eigen::MatrixXd d = a.to_dense();
  CHECK(d(0, 0) == 3.0);
  CHECK(d(2, 1) == 4.0);
  CHECK(d(1, 2) == 4.0);
  CHECK(d(2, 2) == 5.0);
  CHECK_NOTHROW(a.validate());

  CHECK_THROWS_AS(lyap::SparseCSR::from_triplets(2, {{0, 2, 1.0}}),
                  lyap::InputError);

  auto id = lyap::SparseCSR::identity(4);
  CHECK(id.nnz() == 4);
  CHECK(id.to_dense().isApprox(Eigen::MatrixXd::Identity(4, 4)));

  auto bad = a;
  bad.col_indices[1] = 9;
  CHECK_THROWS_AS(bad.validate(), lyap::InputError);
}

TEST_CASE("abs_norm_estimate tracks the two-norm of the absolute matrix") {
  auto a = lyap::SparseCSR::from_triplets(
      3, {{0, 0, 2.0}, {0, 1, -1.0}, {1, 0, -1.0}, {1, 1, 2.0}, {1, 2, -1.0},
          {2, 1, -1.0}, {2, 2, 2.0}});
  Eigen::MatrixXd absd = a.to_dense().cwiseAbs();
  const double exact =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(absd).eigenvalues().maxCoeff();
  CHECK(a.abs_norm_estimate() == doctest::Approx(exact).epsilon(1e-8));
}
