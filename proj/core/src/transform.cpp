#include "colehopf/transform.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "colehopf/errors.hpp"

namespace colehopf {

ComplexField potential_from_velocity(const ComplexField& psi) {
  require_finite(psi, "potential_from_velocity");
  ComplexField phi = make_field(psi.grid, psi.time);
  const double h = psi.grid.spacing;
  std::complex<double> acc{0.0, 0.0};  // sequential prefix sum: bit-reproducible
  phi.values[0] = acc;
  for (int i = 1; i < psi.grid.n; ++i) {
    acc -= 0.5 * h * (psi.values[i - 1] + psi.values[i]);
    phi.values[i] = acc;
  }
  return phi;
}

ComplexField eta_from_potential(const ComplexField& phi, ComplexDiffusion eps,
                                EtaDiagnostics* diag) {
  require_finite(phi, "eta_from_potential");
  const std::complex<double> inv2e = 1.0 / (2.0 * eps.epsilon);
  ComplexField eta = make_field(phi.grid, phi.time);
  EtaDiagnostics d;
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    const std::complex<double> w = phi.values[i] * inv2e;
    d.max_abs_exponent = std::max(d.max_abs_exponent, std::abs(w));
    d.max_re_exponent = std::max(d.max_re_exponent, w.real());
    if (w.real() > 700.0) {
      d.overflow_risk = true;  // saturate the magnitude instead of emitting Inf
      eta.values[i] = std::exp(std::complex<double>(700.0, w.imag()));
    } else {
      eta.values[i] = std::exp(w);
    }
  }
  if (diag) *diag = d;
  return eta;
}

ComplexField velocity_from_eta(const ComplexField& eta, ComplexDiffusion eps, double eta_floor) {
  require_finite(eta, "velocity_from_eta");
  const int n = eta.grid.n;
  if (n < 3) throw Error("too-few-nodes", "velocity_from_eta needs at least 3 nodes");
  for (int i = 0; i < n; ++i) {
    if (std::abs(eta.values[static_cast<std::size_t>(i)]) <= eta_floor) {
      throw Error("eta-underflow", "|eta| at or below eta_floor; the transform is numerically invalid there",
                  {{"node", std::to_string(i)}});
    }
  }

  // Branch-safe increments of log eta: adjacent-node ratios stay close to 1
  // on resolved fields, so the principal log never jumps a branch.
  std::vector<std::complex<double>> L(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) {
    L[static_cast<std::size_t>(j)] =
        std::log(eta.values[static_cast<std::size_t>(j)] / eta.values[static_cast<std::size_t>(j - 1)]);
  }

  const double h = eta.grid.spacing;
  const std::complex<double> scale = -2.0 * eps.epsilon / (2.0 * h);
  ComplexField psi = make_field(eta.grid, eta.time);
  psi.values[0] = scale * (3.0 * L[1] - L[2]);
  for (int i = 1; i + 1 < n; ++i) {
    psi.values[static_cast<std::size_t>(i)] =
        scale * (L[static_cast<std::size_t>(i)] + L[static_cast<std::size_t>(i + 1)]);
  }
  psi.values[static_cast<std::size_t>(n - 1)] =
      scale * (3.0 * L[static_cast<std::size_t>(n - 1)] - L[static_cast<std::size_t>(n - 2)]);
  return psi;
}

ComplexField roundtrip(const ComplexField& psi, ComplexDiffusion eps) {
  return velocity_from_eta(eta_from_potential(potential_from_velocity(psi), eps), eps);
}

double burgers_residual(const ComplexField& psi_a, const ComplexField& psi_b,
                        ComplexDiffusion eps) {
  require_finite(psi_a, "burgers_residual");
  require_finite(psi_b, "burgers_residual");
  if (!(psi_a.grid == psi_b.grid)) {
    throw Error("grid-mismatch", "burgers_residual requires a shared grid");
  }
  const double dt = psi_b.time - psi_a.time;
  if (!(dt > 0.0)) {
    throw Error("nonpositive-dt", "burgers_residual requires psi_b.time > psi_a.time");
  }

  const int n = psi_a.grid.n;
  const double h = psi_a.grid.spacing;
  double sum = 0.0;
  for (int i = 1; i + 1 < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const std::complex<double> m = 0.5 * (psi_a.values[idx] + psi_b.values[idx]);
    const std::complex<double> ml = 0.5 * (psi_a.values[idx - 1] + psi_b.values[idx - 1]);
    const std::complex<double> mr = 0.5 * (psi_a.values[idx + 1] + psi_b.values[idx + 1]);
    const std::complex<double> dpsi_dt = (psi_b.values[idx] - psi_a.values[idx]) / dt;
    const std::complex<double> d2 = (mr - 2.0 * m + ml) / (h * h);
    const std::complex<double> d1 = (mr - ml) / (2.0 * h);
    sum += std::norm(dpsi_dt - eps.epsilon * d2 + m * d1);
  }
  return std::sqrt(h * sum);
}

}  // namespace colehopf
