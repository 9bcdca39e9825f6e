#include <cmath>
#include <numbers>

#include "colehopf/errors.hpp"
#include "colehopf/heat.hpp"
#include "colehopf/io.hpp"
#include "colehopf/special.hpp"

namespace colehopf {

std::complex<double> delta_eta_closed_form(double N, double x, double t, ComplexDiffusion eps) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "closed form requires t > 0");
  const std::complex<double> s = std::sqrt(4.0 * eps.epsilon * t);
  const ErfResult er = erf_complex(std::complex<double>(x, 0.0) / s);
  if (!(er.est_abs_error < 1e-6)) {
    throw Error("erf-evaluation-failure", "erf did not converge for this argument",
                {{"z", format_double(x) + "/sqrt(4 eps t)"}});
  }
  const std::complex<double> A = std::exp(-N / (2.0 * eps.epsilon));
  return 0.5 * (1.0 - er.value) + A * 0.5 * (1.0 + er.value);
}

std::complex<double> psi_delta_closed_form(double N, double x, double t, ComplexDiffusion eps) {
  const std::complex<double> eta = delta_eta_closed_form(N, x, t, eps);
  const std::complex<double> A = std::exp(-N / (2.0 * eps.epsilon));
  if (std::abs(eta) < 1e-13 * (1.0 + std::abs(A))) {
    throw Error("denominator-underflow", "eta vanished at this point",
                {{"x", format_double(x)}, {"t", format_double(t)}});
  }
  // eta' = (A - 1) (4 pi eps t)^{-1/2} e^{-x^2/(4 eps t)}; psi = -2 eps eta'/eta
  const std::complex<double> g =
      std::exp(-(x * x) / (4.0 * eps.epsilon * t)) /
      std::sqrt(4.0 * std::numbers::pi * eps.epsilon * t);
  return -2.0 * eps.epsilon * (A - 1.0) * g / eta;
}

std::complex<double> psi_delta_literal_ratio(double N, double x, double t, ComplexDiffusion eps) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "closed form requires t > 0");
  const std::complex<double> den = std::sqrt(4.0 * std::numbers::pi * eps.epsilon * t);
  return (x / t) * N * heat_kernel(x, 0.0, t, eps) / den;
}

std::complex<double> psi_delta_alt_closed_form(double N, double x, double t, double hbar,
                                               double m, ErfConvention convention) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "closed form requires t > 0");
  if (!(hbar > 0.0) || !(m > 0.0)) throw Error("invalid-params", "hbar and m must be positive");
  if (N == 0.0) return {0.0, 0.0};  // empty source: the denominator diverges, value -> 0

  const std::complex<double> I{0.0, 1.0};
  const std::complex<double> q = std::exp(-I * (m * N / hbar));
  // m N / hbar within ~1e-9 of 2 pi Z: the division below is noise-dominated
  if (std::abs(q - 1.0) < 1e-9) {
    throw Error("formula-singularity", "exp(-i m N/hbar) = 1: the denominator divides by zero",
                {{"mN_over_hbar", format_double(m * N / hbar)}});
  }

  const double pi = std::numbers::pi;
  const std::complex<double> pref = std::sqrt(2.0 * I * hbar / (m * pi * t));
  const std::complex<double> phase = std::exp(I * (m * x * x) / (2.0 * hbar * t));
  const std::complex<double> earg = x * std::sqrt(m) / std::sqrt(2.0 * I * hbar * t);
  const std::complex<double> e = convention == ErfConvention::standard
                                     ? erf_complex(earg).value
                                     : erf_paper_convention(earg);
  const std::complex<double> den =
      2.0 / (q - 1.0) + std::sqrt(pi) / 2.0 * (1.0 - e);
  if (std::abs(den) < 1e-280) {
    throw Error("denominator-underflow", "denominator vanished at this point",
                {{"x", format_double(x)}});
  }
  return pref * phase / den;
}

}  // namespace colehopf
