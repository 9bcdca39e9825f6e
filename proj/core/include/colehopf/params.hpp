#pragma once

#include <complex>
#include <string>

namespace colehopf {

/// Physical inputs shared by every solver. hbar and mass set the dispersive
/// part of the complex diffusion, nu_reg adds an artificial real viscosity
/// for regularized runs, strength_N weighs the point initial condition.
/// c and l are unit conventions and default to 1.
struct PhysicalParams {
  double hbar = 1.0;
  double mass = 1.0;
  double c = 1.0;
  double l = 1.0;
  double strength_N = 1.0;
  double nu_reg = 0.0;

  /// Throws Error("invalid-params") unless hbar, mass, c, l > 0 and nu_reg >= 0.
  void validate() const;
};

/// Complex diffusion coefficient of the generalized Burgers equation.
/// Re epsilon >= 0 is required for well-posed heat evolution.
struct ComplexDiffusion {
  std::complex<double> epsilon{0.0, 0.0};
};

/// Validating constructor; throws Error("invalid-diffusion").
ComplexDiffusion make_diffusion(std::complex<double> epsilon);

/// epsilon = nu_reg + i hbar / (2 mass). With nu_reg = 0 this is the purely
/// dispersive coefficient i hbar / (2 m).
ComplexDiffusion epsilon_of(const PhysicalParams& p);

/// Uniform 1-D grid. Node i sits at x_min + i * spacing; both endpoints are
/// pinned exactly so positions are bit-reproducible across runs.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n = 2;
  double spacing = 1.0;

  double node(int i) const {
    return i == n - 1 ? x_max : x_min + static_cast<double>(i) * spacing;
  }

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

/// Throws Error("invalid-range") for x_min >= x_max and
/// Error("too-few-nodes") for n < 2.
Grid1D make_uniform_grid(double x_min, double x_max, int n);

struct ParamsConfig {
  PhysicalParams params;
  Grid1D grid = {-8.0, 8.0, 2048, 16.0 / 2047.0};
};

/// Parses {hbar, mass, c, l, strength_N, nu_reg, grid: {x_min, x_max, n}}
/// from JSON text. Every key is optional and falls back to the defaults
/// above. Throws Error("config-parse") on malformed input.
ParamsConfig parse_params_json(const std::string& json_text);

}  // namespace colehopf
