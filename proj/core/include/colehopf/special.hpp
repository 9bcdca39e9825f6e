#pragma once

#include <complex>

namespace colehopf {

enum class ErfMethod { taylor, continued_fraction, reflection };

const char* erf_method_name(ErfMethod m);

struct ErfResult {
  std::complex<double> value{0.0, 0.0};
  double est_abs_error = 0.0;
  ErfMethod method = ErfMethod::taylor;
};

/// Complex error function, standard normalization:
///   erf(z) = (2/sqrt(pi)) Integral_0^z exp(-s^2) ds.
///
/// Regimes: power series inside |z| <= 3; Lentz-evaluated continued fraction
/// for the complementary function when Re z > 0 away from the imaginary
/// axis; odd reflection erf(-z) = -erf(z) for Re z < 0. Within roughly ten
/// degrees of the imaginary axis (where the continued fraction stalls) the
/// series is kept instead: its terms have a common sign there, so it stays
/// accurate to all representable magnitudes. Beyond |z| = 30 the plateau
/// values +-1 are returned for |arg(+-z)| < pi/4.
///
/// Never throws; nonconvergence is reported through est_abs_error.
ErfResult erf_complex(std::complex<double> z);

/// Unnormalized variant Integral_0^z exp(-s^2) ds = (sqrt(pi)/2) erf(z).
std::complex<double> erf_paper_convention(std::complex<double> z);

/// Single-regime evaluators, public so that each regime can be validated
/// against the other in the overlap annulus.
ErfResult erf_complex_taylor(std::complex<double> z, int max_terms = 120);
ErfResult erf_complex_cf(std::complex<double> z, int max_iter = 400);

}  // namespace colehopf
