#pragma once

#include <complex>
#include <string>
#include <vector>

#include "colehopf/field.hpp"
#include "colehopf/heat.hpp"
#include "colehopf/params.hpp"

namespace colehopf {

/// Direct finite-difference solver configuration.
struct FDConfig {
  double cfl_target = 0.9;  // in (0, 1]
  enum class TimeScheme { rk4_explicit, imex };
  TimeScheme time_scheme = TimeScheme::rk4_explicit;
  enum class FluxForm { conservative, advective };
  FluxForm flux_form = FluxForm::conservative;

  void validate() const;
};

/// Advances psi' = eps psi'' - psi psi' directly (no transformation), with
/// zero-Neumann boundaries. Conservative flux d/dx(psi^2/2) by default. The
/// time step comes from min(advective dx/max|psi|, diffusive dx^2/(2|eps|))
/// scaled by cfl_target for explicit runs; imex (implicit diffusion,
/// explicit advection) is required when Re eps = 0. Throws
/// Error("invalid-scheme") and Error("blow-up") (max|psi| > 1e6).
ComplexField solve_burgers_fd(const ComplexField& psi0, double t_final, ComplexDiffusion eps,
                              const FDConfig& cfg = {});

/// Exact solution psi(x,t) = -2 eps k e^z/(1 + e^z), z = k x + eps k^2 t,
/// built from the heat solution eta = 1 + e^z. Satisfies the PDE identically.
std::complex<double> traveling_front_exact(double k, ComplexDiffusion eps, double x, double t);

ComplexField sample_traveling_front(double k, ComplexDiffusion eps, const Grid1D& grid, double t);

struct GridRunResult {
  int n = 0;
  double h = 0.0;
  double fd_error = -1.0;  // relative L2 vs the reference; -1 marks "is the reference"
  double ch_error = -1.0;
  double fd_seconds = 0.0;
  double ch_seconds = 0.0;
};

struct ConvergenceReport {
  std::vector<GridRunResult> runs;
  std::vector<double> fd_orders;  // log2(e_h / e_{h/2}) between consecutive grids
  std::vector<double> ch_orders;
  std::string reference;           // "exact-front" or "finest-grid-fd"
  bool exact = false;              // all errors at rounding level; orders undefined
  bool resolution_limited = false; // some fitted order fell below 1
};

/// Runs the direct solver and the ratio solver on each grid and fits
/// observed orders against the exact front (tanh IC) or the finest-grid
/// direct solution. Grid sizes must be ascending, at least 3.
ConvergenceReport convergence_study(const InitialCondition& ic, ComplexDiffusion eps, double t,
                                    double x_min, double x_max,
                                    const std::vector<int>& grid_sizes, const FDConfig& cfg = {},
                                    SolutionMode mode = SolutionMode::derived);

}  // namespace colehopf
