#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "colehopf/field.hpp"
#include "colehopf/params.hpp"

namespace colehopf {

// ---------------------------------------------------------------------------
// Initial conditions
// ---------------------------------------------------------------------------

/// Point source N delta(x). Symbolic: never sampled on a grid.
struct DeltaIC {
  double strength = 1.0;
};

/// psi0(x) = amplitude * exp(-((x - center)/width)^2).
struct GaussianIC {
  double amplitude = 1.0;
  double center = 0.0;
  double width = 1.0;
};

/// psi0(x) = -2 eps k sigma(k x): the exact traveling front at t = 0.
struct TanhFrontIC {
  double k = 1.0;
};

/// Tabulated psi0 samples.
struct SamplesIC {
  ComplexField field;
};

using InitialCondition = std::variant<DeltaIC, GaussianIC, TanhFrontIC, SamplesIC>;

/// Gaussian of integral strength_N and shape exp(-(x/sigma)^2), i.e.
/// amplitude strength_N / (sigma sqrt(pi)): the computable stand-in for the
/// point source that converges to it as sigma -> 0.
GaussianIC mollified_delta(double strength_N, double sigma);

/// Validates IC parameters (gaussian width > 0, samples finite).
void validate_ic(const InitialCondition& ic);

/// Overflow-safe logistic e^z / (1 + e^z) for complex z.
std::complex<double> logistic(std::complex<double> z);

/// Pointwise psi0. Throws Error("delta-not-sampleable") for the point source.
std::complex<double> psi0_eval(const InitialCondition& ic, ComplexDiffusion eps, double x);

ComplexField sample_psi0(const InitialCondition& ic, ComplexDiffusion eps, const Grid1D& grid);

/// derived: the ratio solution that follows from the transformation chain
/// (initial-potential weight in both integrals). paper_literal: the ratio
/// with psi0 itself as the numerator weight and a bare-kernel denominator,
/// kept verbatim for the discrepancy report.
enum class SolutionMode { derived, paper_literal };

const char* solution_mode_name(SolutionMode m);

// ---------------------------------------------------------------------------
// Line profiles: integrand data with analytic tail models
// ---------------------------------------------------------------------------

/// profile(y) = coeff * exp(rate * y) past the tail start.
struct ExpTail {
  std::complex<double> coeff{0.0, 0.0};
  std::complex<double> rate{0.0, 0.0};
};

/// Pointwise values plus optional constant/exponential tail models and known
/// jump locations. Tails let the kernel integrals run to infinity in closed
/// form; breakpoints pre-split quadrature panels across jumps.
struct Profile {
  std::function<std::complex<double>(double)> eval;
  std::vector<double> breakpoints;
  std::optional<ExpTail> left_tail;   // valid for y <= left_start
  std::optional<ExpTail> right_tail;  // valid for y >= right_start
  double left_start = 0.0;
  double right_start = 0.0;
};

/// eta0(y) = exp(-(1/2 eps) Integral_0^y psi0), in closed form per IC kind.
/// For the point source this is the two-plateau step with the jump at 0.
Profile eta0_profile(const InitialCondition& ic, ComplexDiffusion eps);

/// psi0 itself as a Profile (numerator weight of the literal mode). Throws
/// Error("delta-not-sampleable") for the point source.
Profile psi0_profile(const InitialCondition& ic, ComplexDiffusion eps);

// ---------------------------------------------------------------------------
// Kernel and quadrature evolution
// ---------------------------------------------------------------------------

/// Unnormalized kernel exp(-(x-y)^2 / (4 eps t)).
std::complex<double> heat_kernel(double x, double y, double t, ComplexDiffusion eps);

struct QuadratureOptions {
  /// Core window half-width = window_factor * sqrt(|4 eps t|); the Gaussian
  /// tail beyond the default factor 8 is below e^-64.
  double window_factor = 8.0;
  double min_window_spacings = 10.0;
  double rel_tol = 1e-12;
  double abs_tol = 1e-15;
  int initial_panels = 8;
  int max_panels_per_node = 4000;
};

struct QuadratureStats {
  long total_panels = 0;
  int max_node_panels = 0;
};

/// eta(x,t) = (4 pi eps t)^(-1/2) Integral eta0(y) exp(-(x-y)^2/(4 eps t)) dy
/// by adaptive composite Gauss-Legendre over a truncated window around each
/// node, plus closed-form tail contributions where the profile declares
/// them. Requires Re eps > 0 or tail models on both sides
/// (Error("oscillatory-divergence") otherwise); panel refinement beyond the
/// limit raises Error("quadrature-nonconvergence").
ComplexField evolve_heat_quadrature(const Profile& eta0, const Grid1D& grid, double t,
                                    ComplexDiffusion eps, const QuadratureOptions& opts = {},
                                    QuadratureStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Crank-Nicolson evolution
// ---------------------------------------------------------------------------

struct CnOptions {
  enum class Boundary { neumann, dirichlet };
  /// Zero-Neumann suits plateau initial data; the Dirichlet variant pins the
  /// boundary values (used by the Fourier-decay check).
  Boundary boundary = Boundary::neumann;
};

/// Advances eta' = eps eta'' by trapezoidal-in-time, centered-in-space steps;
/// one complex tridiagonal solve per step (Thomas algorithm). Unconditionally
/// stable for Re eps >= 0; a vanishing pivot raises
/// Error("singular-tridiagonal").
ComplexField evolve_heat_cn(const ComplexField& eta0, double t_final, int steps,
                            ComplexDiffusion eps, const CnOptions& opts = {});

// ---------------------------------------------------------------------------
// Ratio-of-integrals Burgers solution
// ---------------------------------------------------------------------------

/// psi(x,t) as the ratio of kernel integrals; see SolutionMode for the two
/// weightings. The point source runs through its analytic step profile in
/// derived mode and through the closed-form literal ratio in literal mode.
/// Throws Error("tail-condition-violated") / Error("denominator-underflow").
ComplexField solve_burgers_colehopf(const InitialCondition& ic, const Grid1D& grid, double t,
                                    ComplexDiffusion eps,
                                    SolutionMode mode = SolutionMode::derived,
                                    const QuadratureOptions& opts = {},
                                    QuadratureStats* stats = nullptr);

/// Growth-bound admissibility |x^-2 Integral_1^x psi0| evaluated at
/// +-x_probe and +-2 x_probe: true iff the value at 2 x_probe is smaller and
/// below 1e-6 on both sides.
bool tail_condition_check(const InitialCondition& ic, ComplexDiffusion eps, double x_probe);

/// Probe used by solve_burgers_colehopf, scaled so that the extension the
/// quadrature integrates drops below the admissibility threshold.
double default_tail_probe(const InitialCondition& ic, ComplexDiffusion eps);

// ---------------------------------------------------------------------------
// Point-source closed forms
// ---------------------------------------------------------------------------

/// Exact heat evolution of the point-source step:
///   eta(x,t) = (1 - erf(u))/2 + e^{-N/(2 eps)} (1 + erf(u))/2,
///   u = x / sqrt(4 eps t),
/// oriented so eta(-inf) = 1 and eta(+inf) = e^{-N/(2 eps)}.
std::complex<double> delta_eta_closed_form(double N, double x, double t, ComplexDiffusion eps);

/// psi = -2 eps eta'/eta with eta above; a Gaussian prefactor over an
/// erf-containing denominator. Throws Error("denominator-underflow") where
/// eta vanishes (possible for complex eps at isolated points).
std::complex<double> psi_delta_closed_form(double N, double x, double t, ComplexDiffusion eps);

/// Literal-mode ratio for the point source:
///   (x/t) N K(x,0;t) / sqrt(4 pi eps t).
std::complex<double> psi_delta_literal_ratio(double N, double x, double t, ComplexDiffusion eps);

enum class ErfConvention { standard, paper };

/// Alternate closed form of the point-source wavefunction, evaluated exactly
/// as printed:
///   sqrt(2 i hbar/(m pi t)) exp(i m x^2/(2 hbar t)) /
///     [ 2 (exp(-i m N/hbar) - 1)^{-1} + (sqrt(pi)/2)(1 - erf(x sqrt(m)/sqrt(2 i hbar t))) ]
/// with erf read in the chosen convention. It is compared against
/// psi_delta_closed_form by the compare-eq13 report; agreement is not
/// implied. N = 0 returns 0 (the empty-source limit); other N with
/// m N / hbar in 2 pi Z raise Error("formula-singularity").
std::complex<double> psi_delta_alt_closed_form(double N, double x, double t, double hbar,
                                               double m, ErfConvention convention);

}  // namespace colehopf
