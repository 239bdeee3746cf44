#include "lyapcomp/zolotarev.hpp"

#include "lyapcomp/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace lyap {

namespace {

/** Stops the Landen ladder when the remaining correction squares to below
 *  machine precision. */
constexpr double kLandenTol = 1e-8;

double agm(double x, double y) {
  for (int i = 0; i < 64 && std::abs(x - y) > 4.0 * std::numeric_limits<double>::epsilon() * x; ++i) {
    const double an = 0.5 * (x + y);
    const double gn = std::sqrt(x * y);
    x = an;
    y = gn;
  }
  return 0.5 * (x + y);
}

/** Jacobi sn, cn, dn via the descending Landen ladder, complementary
 *  parameter emmc = 1 - m. emmc = 0 is the hyperbolic limit. */
JacobiValues sncndn(double u, double emmc) {
  if (emmc == 0.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  bool flipped = false;
  double d = 1.0;
  double emc = emmc;
  double uu = u;
  if (emc < 0.0) {
    flipped = true;
    d = 1.0 - emc;
    emc = -emc / d;
    d = std::sqrt(d);
    uu *= d;
  }
  double a = 1.0;
  double dn = 1.0;
  std::array<double, 16> em{};
  std::array<double, 16> en{};
  int last = 0;
  double c = 0.5 * (a + std::sqrt(emc));
  for (int i = 0; i < 16; ++i) {
    last = i;
    em[static_cast<std::size_t>(i)] = a;
    emc = std::sqrt(emc);
    en[static_cast<std::size_t>(i)] = emc;
    c = 0.5 * (a + emc);
    if (std::abs(a - emc) <= kLandenTol * a) break;
    emc *= a;
    a = c;
  }
  uu *= c;
  double sn = std::sin(uu);
  double cn = std::cos(uu);
  if (sn != 0.0) {
    a = cn / sn;
    c *= a;
    for (int i = last; i >= 0; --i) {
      const double b = em[static_cast<std::size_t>(i)];
      a *= c;
      c *= dn;
      dn = (en[static_cast<std::size_t>(i)] + a) / (b + a);
      a = c / b;
    }
    a = 1.0 / std::sqrt(c * c + 1.0);
    sn = (sn >= 0.0) ? a : -a;
    cn = c * sn;
  }
  if (flipped) {
    std::swap(cn, dn);
    sn /= d;
  }
  return {sn, cn, dn};
}

void check_interval(double a, double b, const char* who) {
  if (!(a > 0.0) || !(b >= a) || !std::isfinite(b))
    throw InputError(std::string(who) + ": need 0 < a <= b");
}

}  // namespace

EllipticKernel EllipticKernel::from_parameter(double m) {
  if (!(m >= 0.0) || m >= 1.0)
    throw InputError("elliptic kernel: parameter must lie in [0, 1)");
  return from_complement(1.0 - m);
}

EllipticKernel EllipticKernel::from_complement(double emmc) {
  if (!(emmc > 0.0) || emmc > 1.0)
    throw InputError("elliptic kernel: complementary parameter must lie in (0, 1]");
  const double k = std::numbers::pi / (2.0 * agm(1.0, std::sqrt(emmc)));
  return EllipticKernel(emmc, k);
}

JacobiValues EllipticKernel::jacobi(double u) const { return sncndn(u, emmc_); }

EllipticKernel elliptic_kernel(double m) {
  return EllipticKernel::from_parameter(m);
}

PoleSet zolotarev_poles(std::size_t k, double a, double b) {
  check_interval(a, b, "zolotarev_poles");
  if (k == 0) throw InputError("zolotarev_poles: k must be at least 1");
  const double ratio = a / b;
  const auto kernel = EllipticKernel::from_complement(ratio * ratio);
  const double quarter = kernel.quarter_period();
  PoleSet set;
  set.a = a;
  set.b = b;
  set.poles.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    const double u =
        (2.0 * static_cast<double>(j) - 1.0) * quarter / (2.0 * static_cast<double>(k));
    set.poles.push_back(-b * kernel.jacobi(u).dn);
  }
  return set;
}

namespace {

double log_raterr_at(const std::vector<double>& poles, double z) {
  double acc = 0.0;
  for (double xi : poles)
    acc += 2.0 * (std::log(std::abs(z + xi)) - std::log(std::abs(z - xi)));
  return acc;
}

}  // namespace

double raterr(const PoleSet& poles, double a, double b,
              std::size_t grid_points) {
  check_interval(a, b, "raterr");
  for (double xi : poles.poles)
    if (xi >= a && xi <= b)
      throw InputError("raterr: a pole lies inside the evaluation interval");

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::size_t g = std::max<std::size_t>(grid_points, 2);
  std::vector<double> zs;
  zs.reserve(g + 2);
  zs.push_back(a);
  zs.push_back(b);
  for (std::size_t i = 0; i < g; ++i) {
    const double t = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) /
                              static_cast<double>(g));
    zs.push_back(mid + half * t);
  }
  std::sort(zs.begin(), zs.end());

  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double v = log_raterr_at(poles.poles, zs[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }

  double lo = zs[best_i == 0 ? 0 : best_i - 1];
  double hi = zs[std::min(best_i + 1, zs.size() - 1)];
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = log_raterr_at(poles.poles, x1);
  double f2 = log_raterr_at(poles.poles, x2);
  for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = log_raterr_at(poles.poles, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = log_raterr_at(poles.poles, x1);
    }
    best = std::max(best, std::max(f1, f2));
  }
  return std::exp(best);
}

double zolotarev_bound(std::size_t k, double a, double b) {
  check_interval(a, b, "zolotarev_bound");
  if (k == 0) return 4.0;
  const double pi = std::numbers::pi;
  return 4.0 * std::exp(-static_cast<double>(k) * pi * pi / std::log(4.0 * b / a));
}

std::size_t choose_pole_count(double tol, double a, double b) {
  check_interval(a, b, "choose_pole_count");
  if (!(tol > 0.0)) throw InputError("choose_pole_count: tol must be positive");
  const double ratio = b / a;
  for (std::size_t k = 1; k <= 10000; ++k)
    if (ratio * zolotarev_bound(k, a, b) <= 0.5 * tol) return k;
  throw NumericalError("choose_pole_count: no k under 10000 satisfied the bound");
}

}  // namespace lyap
