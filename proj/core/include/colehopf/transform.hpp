#pragma once

#include "colehopf/field.hpp"
#include "colehopf/params.hpp"

namespace colehopf {

/// Velocity potential: phi' = -psi with the gauge phi(x_min) = 0, by a
/// sequential left-to-right cumulative trapezoid (bit-reproducible; exactly
/// linear in psi).
ComplexField potential_from_velocity(const ComplexField& psi);

struct EtaDiagnostics {
  double max_abs_exponent = 0.0;  // max |phi / (2 eps)|
  double max_re_exponent = 0.0;   // max Re phi / (2 eps)
  bool overflow_risk = false;     // exponent beyond double range; magnitudes saturated
};

/// Pointwise eta = exp(phi / (2 eps)). Where Re phi/(2 eps) exceeds 700 the
/// magnitude is saturated at e^700 and overflow_risk is flagged instead of
/// emitting Inf.
ComplexField eta_from_potential(const ComplexField& phi, ComplexDiffusion eps,
                                EtaDiagnostics* diag = nullptr);

/// psi = -2 eps d/dx log eta, with the centered 3-point stencil (one-sided
/// 3-point at the boundaries) acting on the branch-continuous logarithm
/// accumulated from principal logs of adjacent-node ratios. Working in log
/// space keeps the stencil exact on exponential eta (linear phi) and immune
/// to phase winding of complex eta.
/// Throws Error("eta-underflow") when any |eta| <= eta_floor.
ComplexField velocity_from_eta(const ComplexField& eta, ComplexDiffusion eps,
                               double eta_floor = 1e-300);

/// velocity_from_eta(eta_from_potential(potential_from_velocity(psi))).
/// Reproduces psi up to O(spacing^2) discretization error.
ComplexField roundtrip(const ComplexField& psi, ComplexDiffusion eps);

/// Discrete L2 norm (sqrt of h-weighted sum, interior nodes only) of
///   (psi_b - psi_a)/dt - eps psi'' + psi psi'
/// evaluated at the midpoint field (psi_a + psi_b)/2, dt from the fields'
/// time stamps. Throws Error("grid-mismatch") / Error("nonpositive-dt").
double burgers_residual(const ComplexField& psi_a, const ComplexField& psi_b,
                        ComplexDiffusion eps);

}  // namespace colehopf
