#include "colehopf/field.hpp"

#include <algorithm>
#include <cmath>

#include "colehopf/errors.hpp"

namespace colehopf {

ComplexField make_field(const Grid1D& grid, double time) {
  ComplexField f;
  f.grid = grid;
  f.values.assign(static_cast<std::size_t>(grid.n), {0.0, 0.0});
  f.time = time;
  return f;
}

void require_finite(const ComplexField& f, const char* where) {
  if (f.values.size() != static_cast<std::size_t>(f.grid.n)) {
    throw Error("nonfinite-field", std::string(where) + ": value count does not match grid");
  }
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const auto& v = f.values[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error("nonfinite-field", std::string(where) + ": field has NaN/Inf samples",
                  {{"node", std::to_string(i)}});
    }
  }
}

double linf_norm(const ComplexField& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm(const ComplexField& f) {
  double s = 0.0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(f.grid.spacing * s);
}

double rel_l2_gap(const ComplexField& a, const ComplexField& b) {
  double num = 0.0, den = 0.0;
  const std::size_t n = std::min(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    num += std::norm(a.values[i] - b.values[i]);
    den += std::norm(b.values[i]);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

double rel_linf_gap(const ComplexField& a, const ComplexField& b) {
  double num = 0.0;
  const std::size_t n = std::min(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    num = std::max(num, std::abs(a.values[i] - b.values[i]));
  }
  return num / (1.0 + linf_norm(b));
}

std::complex<double> trapezoid_integral(const ComplexField& f) {
  if (f.values.empty()) return {0.0, 0.0};
  std::complex<double> s{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < f.values.size(); ++i) {
    s += 0.5 * (f.values[i] + f.values[i + 1]);
  }
  return s * f.grid.spacing;
}

}  // namespace colehopf
