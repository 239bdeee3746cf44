#pragma once

#include <cstddef>
#include <vector>

namespace lyap {

/** Jacobi elliptic function values at one argument. */
struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/** Complete elliptic integral K and Jacobi sn/cn/dn for one modulus,
 *  parameterized internally by the complementary parameter 1 - m so that
 *  moduli extremely close to 1 (which arise for huge interval ratios) lose
 *  no precision. */
class EllipticKernel {
 public:
  /** From the parameter m in [0, 1). */
  static EllipticKernel from_parameter(double m);
  /** From the complementary parameter 1 - m in (0, 1]. */
  static EllipticKernel from_complement(double emmc);

  double quarter_period() const { return k_; }
  JacobiValues jacobi(double u) const;

 private:
  EllipticKernel(double emmc, double k) : emmc_(emmc), k_(k) {}
  double emmc_;
  double k_;
};

/** Convenience matching the classical ellipke/ellipj pairing. */
EllipticKernel elliptic_kernel(double m);

/** Optimal poles for the rational approximation problem on
 *  [-b,-a] u [a,b], with the interval they were built for. */
struct PoleSet {
  std::vector<double> poles;
  double a = 0.0;
  double b = 0.0;

  std::size_t k() const { return poles.size(); }
};

/** k optimal poles, ascending (closest to -b first). All real. */
PoleSet zolotarev_poles(std::size_t k, double a, double b);

/** Grid maximum over [a, b] of prod ((z + xi)/(z - xi))^2, sampled at
 *  grid_points Chebyshev nodes plus both endpoints, with local refinement
 *  around the best sample. */
double raterr(const PoleSet& poles, double a, double b,
              std::size_t grid_points = 4096);

/** 4 * rho^(-2k) with rho = exp(pi^2 / (2 log(4 b/a))); k = 0 gives 4. */
double zolotarev_bound(std::size_t k, double a, double b);

/** Smallest k >= 1 with (b/a) * zolotarev_bound(k, a, b) <= tol / 2. */
std::size_t choose_pole_count(double tol, double a, double b);

}  // namespace lyap
