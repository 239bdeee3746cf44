#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lyapcomp/errors.hpp"
#include "lyapcomp/zolotarev.hpp"
#include "oracles.hpp"

TEST_CASE("complete elliptic integral matches reference values") {
  CHECK(lyap::elliptic_kernel(0.5).quarter_period() ==
        doctest::Approx(1.8540746773013719184338503472).epsilon(1e-15));
  CHECK(lyap::elliptic_kernel(0.0).quarter_period() ==
        doctest::Approx(std::acos(-1.0) / 2.0).epsilon(1e-15));

  for (double m : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    CHECK(lyap::elliptic_kernel(m).quarter_period() ==
          doctest::Approx(oracle::elliptic_k_series(m)).epsilon(1e-13));
  }
}

TEST_CASE("jacobi elliptic functions match reference values") {
  auto v1 = lyap::EllipticKernel::from_complement(0.25).jacobi(0.3);
  CHECK(v1.sn == doctest::Approx(0.292361752989028675894290549332).epsilon(1e-14));
  CHECK(v1.cn == doctest::Approx(0.956307798456742787058094448964).epsilon(1e-14));
  CHECK(v1.dn == doctest::Approx(0.967415864063581829255738580685).epsilon(1e-14));

  auto v2 = lyap::EllipticKernel::from_complement(0.01).jacobi(1.1);
  CHECK(v2.sn == doctest::Approx(0.801511527776414633853437796532).epsilon(1e-14));
  CHECK(v2.cn == doctest::Approx(0.597979323088614588985795187739).epsilon(1e-14));
  CHECK(v2.dn == doctest::Approx(0.603327007627789306370376380214).epsilon(1e-14));

  auto v3 = lyap::EllipticKernel::from_complement(1e-6).jacobi(0.7);
  CHECK(v3.sn == doctest::Approx(0.604367817129679391058742838338).epsilon(1e-13));
  CHECK(v3.cn == doctest::Approx(0.796705429640031014904393289601).epsilon(1e-13));
  CHECK(v3.dn == doctest::Approx(0.796705658871809942228740065279).epsilon(1e-13));
}

TEST_CASE("jacobi values satisfy the pythagorean identities") {
  for (double m : {0.05, 0.5, 0.95}) {
    auto kernel = lyap::EllipticKernel::from_parameter(m);
    for (double u : {0.0, 0.2, 0.8, 1.4}) {
      auto v = kernel.jacobi(u);
      CHECK(v.sn * v.sn + v.cn * v.cn == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(v.dn * v.dn == doctest::Approx(1.0 - m * v.sn * v.sn).epsilon(1e-13));
    }
  }
  auto kernel = lyap::EllipticKernel::from_parameter(0.5);
  auto at0 = kernel.jacobi(0.0);
  CHECK(at0.sn == doctest::Approx(0.0));
  CHECK(at0.cn == doctest::Approx(1.0));
  CHECK(at0.dn == doctest::Approx(1.0));
  auto atk = kernel.jacobi(kernel.quarter_period());
  CHECK(atk.sn == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(atk.cn) <= 1e-13);
  CHECK(atk.dn == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("elliptic kernel rejects out-of-range parameters") {
  CHECK_THROWS_AS(lyap::EllipticKernel::from_parameter(1.0), lyap::InputError);
  CHECK_THROWS_AS(lyap::EllipticKernel::from_parameter(-0.1), lyap::InputError);
  CHECK_THROWS_AS(lyap::EllipticKernel::from_complement(0.0), lyap::InputError);
  CHECK_THROWS_AS(lyap::EllipticKernel::from_complement(1.5), lyap::InputError);
}

TEST_CASE("pole sets match reference values") {
  auto p = lyap::zolotarev_poles(2, 1.0, 10.0);
  REQUIRE(p.k() == 2);
  CHECK(p.poles[0] ==
        doctest::Approx(-6.88935509926035498392843377088).epsilon(1e-12));
  CHECK(p.poles[1] ==
        doctest::Approx(-1.45151467095571914882528802393).epsilon(1e-12));
  CHECK(p.a == 1.0);
  CHECK(p.b == 10.0);

  auto single = lyap::zolotarev_poles(1, 1.0, 4.0);
  CHECK(single.poles[0] == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("poles are ascending, negative, and inside the reflected interval") {
  for (std::size_t k : {1u, 3u, 6u}) {
    auto p = lyap::zolotarev_poles(k, 0.5, 5000.0);
    REQUIRE(p.k() == k);
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(p.poles[i] < 0.0);
      CHECK(-p.poles[i] >= 0.5);
      CHECK(-p.poles[i] <= 5000.0);
      if (i > 0) CHECK(p.poles[i] > p.poles[i - 1]);
    }
  }
}

TEST_CASE("pole sets scale with the interval") {
  auto base = lyap::zolotarev_poles(4, 1.0, 1e4);
  auto scaled = lyap::zolotarev_poles(4, 7.5, 7.5e4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(scaled.poles[i] ==
          doctest::Approx(7.5 * base.poles[i]).epsilon(1e-12));
  }
}

TEST_CASE("degenerate interval collapses every pole to -a") {
  auto p = lyap::zolotarev_poles(2, 5.0, 5.0);
  CHECK(p.poles[0] == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(p.poles[1] == doctest::Approx(-5.0).epsilon(1e-12));
  CHECK(lyap::raterr(p, 5.0, 5.0) <= 1e-12);
}

TEST_CASE("approximation error bound has the closed form") {
  const double rho = std::exp(std::acos(-1.0) * std::acos(-1.0) /
                              (2.0 * std::log(4.0 * 1e4)));
  CHECK(lyap::zolotarev_bound(8, 1.0, 1e4) ==
        doctest::Approx(4.0 * std::pow(rho, -16.0)).epsilon(1e-13));
  CHECK(lyap::zolotarev_bound(8, 1.0, 1e4) ==
        doctest::Approx(0.0023231546701691790724536906086).epsilon(1e-13));
  CHECK(lyap::zolotarev_bound(0, 1.0, 100.0) == doctest::Approx(4.0));
  CHECK(lyap::zolotarev_bound(3, 2.0, 200.0) ==
        doctest::Approx(lyap::zolotarev_bound(3, 1.0, 100.0)).epsilon(1e-13));
}

TEST_CASE("measured approximation error stays within the bound") {
  for (std::size_t k : {1u, 2u, 4u, 7u}) {
    for (double ratio : {10.0, 1e3, 1e5}) {
      auto p = lyap::zolotarev_poles(k, 1.0, ratio);
      const double err = lyap::raterr(p, 1.0, ratio);
      CHECK(err <= lyap::zolotarev_bound(k, 1.0, ratio));
      CHECK(err > 0.0);
    }
  }
}

TEST_CASE("single pole at the geometric mean gives error 1/9 on [1, 4]") {
  auto p = lyap::zolotarev_poles(1, 1.0, 4.0);
  CHECK(lyap::raterr(p, 1.0, 4.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-6));
}

TEST_CASE("raterr equioscillates at both endpoints for the optimal poles") {
  auto p = lyap::zolotarev_poles(3, 1.0, 1000.0);
  auto eval = [&](double z) {
    double prod = 1.0;
    for (double xi : p.poles) prod *= (z + xi) / (z - xi);
    return prod * prod;
  };
  const double err = lyap::raterr(p, 1.0, 1000.0);
  CHECK(eval(1.0) == doctest::Approx(err).epsilon(1e-6));
  CHECK(eval(1000.0) == doctest::Approx(err).epsilon(1e-6));
}

TEST_CASE("choose_pole_count picks the smallest satisfying k") {
  CHECK(lyap::choose_pole_count(1e-8, 3.0, 3.0) == 3);

  const double tol = 1e-7, a = 1.0, b = 1e4;
  const std::size_t k = lyap::choose_pole_count(tol, a, b);
  CHECK((b / a) * lyap::zolotarev_bound(k, a, b) <= tol / 2.0);
  REQUIRE(k >= 1);
  if (k > 1) CHECK((b / a) * lyap::zolotarev_bound(k - 1, a, b) > tol / 2.0);
}

TEST_CASE("interval validation rejects nonsense") {
  CHECK_THROWS_AS(lyap::zolotarev_poles(2, -1.0, 4.0), lyap::InputError);
  CHECK_THROWS_AS(lyap::zolotarev_poles(2, 4.0, 1.0), lyap::InputError);
  CHECK_THROWS_AS(lyap::zolotarev_poles(0, 1.0, 4.0), lyap::InputError);
  CHECK_THROWS_AS(lyap::choose_pole_count(0.0, 1.0, 4.0), lyap::InputError);
}
