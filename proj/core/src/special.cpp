#include "colehopf/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace colehopf {

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955126;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTan80Deg = 5.671281819617709;  // continued fraction stalls past ~80 deg

bool finite(std::complex<double> v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

const char* erf_method_name(ErfMethod m) {
  switch (m) {
    case ErfMethod::taylor: return "taylor";
    case ErfMethod::continued_fraction: return "continued_fraction";
    case ErfMethod::reflection: return "reflection";
  }
  return "unknown";
}

ErfResult erf_complex_taylor(std::complex<double> z, int max_terms) {
  // erf(z) = 2/sqrt(pi) sum_{n>=0} (-1)^n z^{2n+1} / (n! (2n+1))
  const std::complex<double> zz = z * z;
  std::complex<double> powterm = z;  // (-1)^n z^{2n+1} / n!
  std::complex<double> sum{0.0, 0.0};
  double max_abs = 0.0;
  double last_add = 0.0;
  int used = 0;
  bool converged = false;
  for (int n = 0; n < max_terms; ++n) {
    const std::complex<double> add = powterm / static_cast<double>(2 * n + 1);
    sum += add;
    ++used;
    last_add = std::abs(add);
    max_abs = std::max(max_abs, std::abs(sum));
    if (n >= 2 && last_add < 1e-17 * std::abs(sum)) {
      converged = true;
      break;
    }
    powterm *= -zz / static_cast<double>(n + 1);
  }

  ErfResult r;
  r.method = ErfMethod::taylor;
  r.value = kTwoOverSqrtPi * sum;
  const double rounding = kEps * (max_abs + last_add) * std::sqrt(static_cast<double>(used));
  r.est_abs_error = kTwoOverSqrtPi * (converged ? rounding : last_add + rounding);
  if (!finite(r.value)) r.est_abs_error = std::numeric_limits<double>::infinity();
  return r;
}

ErfResult erf_complex_cf(std::complex<double> z, int max_iter) {
  // A&S 7.1.14 S-fraction, Re z > 0:
  //   sqrt(pi) e^{z^2} erfc(z) = 1/(z+ (1/2)/(z+ 1/(z+ (3/2)/(z+ 2/(z+ ...)))))
  // evaluated with the modified Lentz algorithm.
  const std::complex<double> tiny{1e-300, 0.0};
  std::complex<double> f = tiny, C = tiny, D{0.0, 0.0};
  double delta_dist = 1.0;
  for (int j = 1; j <= max_iter; ++j) {
    const double a = (j == 1) ? 1.0 : 0.5 * static_cast<double>(j - 1);
    D = z + a * D;
    if (D == std::complex<double>(0.0, 0.0)) D = tiny;
    C = z + a / C;
    if (C == std::complex<double>(0.0, 0.0)) C = tiny;
    D = 1.0 / D;
    const std::complex<double> delta = C * D;
    f *= delta;
    delta_dist = std::abs(delta - 1.0);
    if (delta_dist < 1e-16) break;
  }
  const std::complex<double> erfc = std::exp(-z * z) / std::sqrt(std::numbers::pi) * f;

  ErfResult r;
  r.method = ErfMethod::continued_fraction;
  r.value = 1.0 - erfc;
  r.est_abs_error =
      std::abs(erfc) * (delta_dist + (8.0 + 2.0 * std::abs(z * z)) * kEps) + kEps;
  if (!finite(r.value)) r.est_abs_error = std::numeric_limits<double>::infinity();
  return r;
}

ErfResult erf_complex(std::complex<double> z) {
  if (std::isnan(z.real()) || std::isnan(z.imag())) {
    return {std::complex<double>(std::nan(""), std::nan("")),
            std::numeric_limits<double>::infinity(), ErfMethod::taylor};
  }
  const double r = std::abs(z);
  if (r <= 3.0) return erf_complex_taylor(z, 120);

  if (z.real() < 0.0) {
    ErfResult res = erf_complex(-z);
    res.value = -res.value;
    res.method = ErfMethod::reflection;
    return res;
  }

  const double x = z.real(), y = std::abs(z.imag());
  if (r > 30.0) {
    if (x > y) {  // |arg z| < pi/4: plateau, tail ~ e^{-Re z^2}/(sqrt(pi) |z|)
      ErfResult res;
      res.value = 1.0;
      res.method = ErfMethod::reflection;
      const double log_tail = -(x * x - y * y) - std::log(std::sqrt(std::numbers::pi) * r);
      res.est_abs_error = std::exp(std::min(log_tail, 0.0));
      return res;
    }
    return erf_complex_taylor(z, 4000);
  }
  if (x * kTan80Deg < y && r < 5.5) {
    // near the imaginary axis the series terms share a sign: no cancellation
    return erf_complex_taylor(z, 1600);
  }
  return erf_complex_cf(z, 400);
}

std::complex<double> erf_paper_convention(std::complex<double> z) {
  return std::sqrt(std::numbers::pi) / 2.0 * erf_complex(z).value;
}

}  // namespace colehopf
