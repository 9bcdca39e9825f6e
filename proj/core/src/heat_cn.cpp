#include <complex>
#include <vector>

#include "colehopf/errors.hpp"
#include "colehopf/heat.hpp"
#include "tridiag.hpp"

namespace colehopf {

ComplexField evolve_heat_cn(const ComplexField& eta0, double t_final, int steps,
                            ComplexDiffusion eps, const CnOptions& opts) {
  require_finite(eta0, "evolve_heat_cn");
  if (!(t_final > 0.0)) throw Error("nonpositive-dt", "evolution requires t_final > 0");
  if (steps < 1) throw Error("invalid-argument", "steps must be >= 1");
  const int n = eta0.grid.n;
  if (n < 3) throw Error("too-few-nodes", "evolve_heat_cn needs at least 3 nodes");

  const double h = eta0.grid.spacing;
  const double dt = t_final / static_cast<double>(steps);
  const std::complex<double> r = eps.epsilon * dt / (2.0 * h * h);
  const bool dirichlet = opts.boundary == CnOptions::Boundary::dirichlet;

  // (I - r L) with L the centered Laplacian; zero-Neumann rows use the
  // mirror ghost (second order), Dirichlet rows pin the boundary values.
  const auto nsz = static_cast<std::size_t>(n);
  std::vector<std::complex<double>> sub(nsz), diag(nsz), sup(nsz);
  for (std::size_t i = 1; i + 1 < nsz; ++i) {
    sub[i] = -r;
    diag[i] = 1.0 + 2.0 * r;
    sup[i] = -r;
  }
  if (dirichlet) {
    diag[0] = 1.0;
    sup[0] = 0.0;
    sub[nsz - 1] = 0.0;
    diag[nsz - 1] = 1.0;
  } else {
    diag[0] = 1.0 + 2.0 * r;
    sup[0] = -2.0 * r;
    sub[nsz - 1] = -2.0 * r;
    diag[nsz - 1] = 1.0 + 2.0 * r;
  }
  const detail::TridiagFactor solver(sub, diag, sup);

  std::vector<std::complex<double>> eta = eta0.values;
  std::vector<std::complex<double>> rhs(nsz);
  for (int step = 0; step < steps; ++step) {
    for (std::size_t i = 1; i + 1 < nsz; ++i) {
      rhs[i] = r * eta[i - 1] + (1.0 - 2.0 * r) * eta[i] + r * eta[i + 1];
    }
    if (dirichlet) {
      rhs[0] = eta[0];
      rhs[nsz - 1] = eta[nsz - 1];
    } else {
      rhs[0] = (1.0 - 2.0 * r) * eta[0] + 2.0 * r * eta[1];
      rhs[nsz - 1] = 2.0 * r * eta[nsz - 2] + (1.0 - 2.0 * r) * eta[nsz - 1];
    }
    solver.solve(rhs);
    eta.swap(rhs);
  }

  ComplexField out;
  out.grid = eta0.grid;
  out.values = std::move(eta);
  out.time = eta0.time + t_final;
  return out;
}

}  // namespace colehopf
