#pragma once

#include <complex>
#include <string>
#include <vector>

#include "colehopf/params.hpp"

namespace colehopf {

/// Complex samples on a grid at a fixed time. Whether the field plays the
/// velocity psi, the potential phi or the heat variable eta is contextual.
struct ComplexField {
  Grid1D grid;
  std::vector<std::complex<double>> values;
  double time = 0.0;
};

/// Zero field on the given grid.
ComplexField make_field(const Grid1D& grid, double time = 0.0);

/// Throws Error("nonfinite-field") if any sample is NaN/Inf or the value
/// count does not match the grid.
void require_finite(const ComplexField& f, const char* where);

double linf_norm(const ComplexField& f);

/// Grid-weighted norm sqrt(h * sum |v_i|^2).
double l2_norm(const ComplexField& f);

/// ||a - b||_2 / ||b||_2 (plain node-wise norms; the spacing cancels).
double rel_l2_gap(const ComplexField& a, const ComplexField& b);

/// ||a - b||_inf / (1 + ||b||_inf).
double rel_linf_gap(const ComplexField& a, const ComplexField& b);

/// Trapezoid rule over the whole grid.
std::complex<double> trapezoid_integral(const ComplexField& f);

}  // namespace colehopf
