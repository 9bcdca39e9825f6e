#include <algorithm>
#include <cmath>
#include <numbers>

#include "colehopf/errors.hpp"
#include "colehopf/heat.hpp"
#include "colehopf/transform.hpp"

namespace colehopf {

namespace {

// Linear interpolation with constant extension past the sampled range.
std::complex<double> interp_field(const ComplexField& f, double x) {
  const Grid1D& g = f.grid;
  if (x <= g.x_min) return f.values.front();
  if (x >= g.x_max) return f.values.back();
  const double s = (x - g.x_min) / g.spacing;
  const int i = std::min(static_cast<int>(s), g.n - 2);
  const double frac = s - static_cast<double>(i);
  const auto idx = static_cast<std::size_t>(i);
  return (1.0 - frac) * f.values[idx] + frac * f.values[idx + 1];
}

double log1pexp(double u) { return u > 40.0 ? u : std::log1p(std::exp(u)); }

// Integral_1^x psi0 for the tabulated kind: trapezoid over the samples with
// interpolated partial cells, constant edge-value extension beyond the
// range (the same extension the quadrature integrates).
std::complex<double> samples_integral_from_one(const ComplexField& f, double x) {
  const Grid1D& g = f.grid;
  const double a = std::min(1.0, x), b = std::max(1.0, x);
  std::complex<double> s{0.0, 0.0};
  if (a < g.x_min) s += f.values.front() * (std::min(b, g.x_min) - a);
  if (b > g.x_max) s += f.values.back() * (b - std::max(a, g.x_max));

  const double ca = std::clamp(a, g.x_min, g.x_max);
  const double cb = std::clamp(b, g.x_min, g.x_max);
  if (ca < cb) {
    const int ia = static_cast<int>(std::ceil((ca - g.x_min) / g.spacing));
    const int ib = static_cast<int>(std::floor((cb - g.x_min) / g.spacing));
    if (ia > ib) {
      s += 0.5 * (interp_field(f, ca) + interp_field(f, cb)) * (cb - ca);
    } else {
      s += 0.5 * (interp_field(f, ca) + f.values[static_cast<std::size_t>(ia)]) * (g.node(ia) - ca);
      for (int i = ia; i < ib; ++i) {
        s += 0.5 *
             (f.values[static_cast<std::size_t>(i)] + f.values[static_cast<std::size_t>(i + 1)]) *
             g.spacing;
      }
      s += 0.5 * (f.values[static_cast<std::size_t>(ib)] + interp_field(f, cb)) * (cb - g.node(ib));
    }
  }
  return x < 1.0 ? -s : s;
}

}  // namespace

GaussianIC mollified_delta(double strength_N, double sigma) {
  if (!(sigma > 0.0)) throw Error("invalid-argument", "mollified_delta requires sigma > 0");
  return GaussianIC{strength_N / (sigma * std::sqrt(std::numbers::pi)), 0.0, sigma};
}

void validate_ic(const InitialCondition& ic) {
  if (const auto* g = std::get_if<GaussianIC>(&ic)) {
    if (!(g->width > 0.0) || !std::isfinite(g->amplitude) || !std::isfinite(g->center)) {
      throw Error("invalid-argument", "gaussian IC requires finite parameters and width > 0");
    }
  } else if (const auto* s = std::get_if<SamplesIC>(&ic)) {
    require_finite(s->field, "validate_ic");
  } else if (const auto* d = std::get_if<DeltaIC>(&ic)) {
    if (!std::isfinite(d->strength)) throw Error("invalid-argument", "delta strength must be finite");
  } else if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    if (!std::isfinite(t->k) || t->k == 0.0) {
      throw Error("invalid-argument", "tanh front requires finite nonzero k");
    }
  }
}

std::complex<double> logistic(std::complex<double> z) {
  if (z.real() >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const std::complex<double> e = std::exp(z);
  return e / (1.0 + e);
}

std::complex<double> psi0_eval(const InitialCondition& ic, ComplexDiffusion eps, double x) {
  if (std::holds_alternative<DeltaIC>(ic)) {
    throw Error("delta-not-sampleable",
                "the point source is symbolic; use mollified_delta to sample it");
  }
  if (const auto* g = std::get_if<GaussianIC>(&ic)) {
    const double q = (x - g->center) / g->width;
    return {g->amplitude * std::exp(-q * q), 0.0};
  }
  if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    return -2.0 * eps.epsilon * t->k * logistic(std::complex<double>(t->k * x, 0.0));
  }
  return interp_field(std::get<SamplesIC>(ic).field, x);
}

ComplexField sample_psi0(const InitialCondition& ic, ComplexDiffusion eps, const Grid1D& grid) {
  validate_ic(ic);
  ComplexField f = make_field(grid, 0.0);
  for (int i = 0; i < grid.n; ++i) {
    f.values[static_cast<std::size_t>(i)] = psi0_eval(ic, eps, grid.node(i));
  }
  return f;
}

const char* solution_mode_name(SolutionMode m) {
  return m == SolutionMode::derived ? "derived" : "paper-literal";
}

Profile eta0_profile(const InitialCondition& ic, ComplexDiffusion eps) {
  validate_ic(ic);
  const std::complex<double> inv2e = 1.0 / (2.0 * eps.epsilon);
  Profile p;

  if (const auto* d = std::get_if<DeltaIC>(&ic)) {
    // phi jumps down by N across 0, so eta0 steps from 1 to e^{-N/(2 eps)}.
    const std::complex<double> A = std::exp(-d->strength * inv2e);
    p.eval = [A](double y) -> std::complex<double> {
      if (y < 0.0) return {1.0, 0.0};
      if (y > 0.0) return A;
      return 0.5 * (1.0 + A);
    };
    p.breakpoints = {0.0};
    p.left_tail = ExpTail{{1.0, 0.0}, {0.0, 0.0}};
    p.left_start = 0.0;
    p.right_tail = ExpTail{A, {0.0, 0.0}};
    p.right_start = 0.0;
    return p;
  }

  if (const auto* g = std::get_if<GaussianIC>(&ic)) {
    // Integral_0^y psi0 = m2 (erf((y-c)/w) + erf(c/w)), m2 = a w sqrt(pi)/2
    const double m2 = g->amplitude * g->width * std::sqrt(std::numbers::pi) / 2.0;
    const double c = g->center, w = g->width;
    const double base = std::erf(c / w);
    p.eval = [=](double y) {
      return std::exp(-(m2 * (std::erf((y - c) / w) + base)) * inv2e);
    };
    p.breakpoints = {c};
    p.left_tail = ExpTail{std::exp(-(m2 * (-1.0 + base)) * inv2e), {0.0, 0.0}};
    p.left_start = c - 7.5 * w;
    p.right_tail = ExpTail{std::exp(-(m2 * (1.0 + base)) * inv2e), {0.0, 0.0}};
    p.right_start = c + 7.5 * w;
    return p;
  }

  if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    // eta0 = (1 + e^{k y})/2, independent of eps.
    const double k = t->k;
    p.eval = [k](double y) -> std::complex<double> { return {0.5 * (1.0 + std::exp(k * y)), 0.0}; };
    const double reach = 36.0 / std::abs(k);
    if (k > 0.0) {
      p.left_tail = ExpTail{{0.5, 0.0}, {0.0, 0.0}};
      p.left_start = -reach;
      p.right_tail = ExpTail{{0.5, 0.0}, {k, 0.0}};
      p.right_start = reach;
    } else {
      p.left_tail = ExpTail{{0.5, 0.0}, {k, 0.0}};
      p.left_start = -reach;
      p.right_tail = ExpTail{{0.5, 0.0}, {0.0, 0.0}};
      p.right_start = reach;
    }
    return p;
  }

  const auto& samples = std::get<SamplesIC>(ic).field;
  ComplexField eta = eta_from_potential(potential_from_velocity(samples), eps);
  p.eval = [eta](double y) { return interp_field(eta, y); };
  // Continue past the range with the constant-psi0 extension: eta'/eta =
  // -psi0/(2 eps) makes the tail exponential with rate -psi_edge/(2 eps).
  const std::complex<double> rate_l = -samples.values.front() * inv2e;
  const std::complex<double> rate_r = -samples.values.back() * inv2e;
  p.left_tail = ExpTail{eta.values.front() * std::exp(-rate_l * samples.grid.x_min), rate_l};
  p.left_start = eta.grid.x_min;
  p.right_tail = ExpTail{eta.values.back() * std::exp(-rate_r * samples.grid.x_max), rate_r};
  p.right_start = eta.grid.x_max;
  return p;
}

Profile psi0_profile(const InitialCondition& ic, ComplexDiffusion eps) {
  validate_ic(ic);
  Profile p;

  if (std::holds_alternative<DeltaIC>(ic)) {
    throw Error("delta-not-sampleable", "the point source has no pointwise psi0 profile");
  }

  if (const auto* g = std::get_if<GaussianIC>(&ic)) {
    const double a = g->amplitude, c = g->center, w = g->width;
    p.eval = [=](double y) -> std::complex<double> {
      const double q = (y - c) / w;
      return {a * std::exp(-q * q), 0.0};
    };
    p.breakpoints = {c};
    p.left_tail = ExpTail{{0.0, 0.0}, {0.0, 0.0}};
    p.left_start = c - 8.6 * w;
    p.right_tail = ExpTail{{0.0, 0.0}, {0.0, 0.0}};
    p.right_start = c + 8.6 * w;
    return p;
  }

  if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    const double k = t->k;
    const std::complex<double> plateau = -2.0 * eps.epsilon * k;
    p.eval = [k, e = eps.epsilon](double y) {
      return -2.0 * e * k * logistic(std::complex<double>(k * y, 0.0));
    };
    const double reach = 40.0 / std::abs(k);
    if (k > 0.0) {
      p.left_tail = ExpTail{{0.0, 0.0}, {0.0, 0.0}};
      p.right_tail = ExpTail{plateau, {0.0, 0.0}};
    } else {
      p.left_tail = ExpTail{plateau, {0.0, 0.0}};
      p.right_tail = ExpTail{{0.0, 0.0}, {0.0, 0.0}};
    }
    p.left_start = -reach;
    p.right_start = reach;
    return p;
  }

  const auto& samples = std::get<SamplesIC>(ic).field;
  p.eval = [f = samples](double y) { return interp_field(f, y); };
  p.left_tail = ExpTail{samples.values.front(), {0.0, 0.0}};
  p.left_start = samples.grid.x_min;
  p.right_tail = ExpTail{samples.values.back(), {0.0, 0.0}};
  p.right_start = samples.grid.x_max;
  return p;
}

// The probe reflects the extension the quadrature actually integrates, far
// enough out that admissible tails drop below the 1e-6 threshold.
double default_tail_probe(const InitialCondition& ic, ComplexDiffusion eps) {
  if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
    return std::max(1e6, 1e7 * std::abs(2.0 * eps.epsilon * t->k));
  }
  if (const auto* s = std::get_if<SamplesIC>(&ic)) {
    const double edge =
        std::max(std::abs(s->field.values.front()), std::abs(s->field.values.back()));
    return 1e6 * std::max(1.0, edge);
  }
  return 1e6;
}

bool tail_condition_check(const InitialCondition& ic, ComplexDiffusion eps, double x_probe) {
  validate_ic(ic);
  if (!(x_probe > 0.0)) throw Error("invalid-argument", "x_probe must be positive");

  // Integral_1^x psi0, closed form per kind (a = 1).
  auto integral_from_one = [&](double x) -> std::complex<double> {
    if (const auto* d = std::get_if<DeltaIC>(&ic)) {
      return {x < 0.0 ? -d->strength : 0.0, 0.0};
    }
    if (const auto* g = std::get_if<GaussianIC>(&ic)) {
      const double m2 = g->amplitude * g->width * std::sqrt(std::numbers::pi) / 2.0;
      return {m2 * (std::erf((x - g->center) / g->width) - std::erf((1.0 - g->center) / g->width)),
              0.0};
    }
    if (const auto* t = std::get_if<TanhFrontIC>(&ic)) {
      // antiderivative of -2 eps k sigma(k y) is -2 eps log(1 + e^{k y})
      const double k = t->k;
      return -2.0 * eps.epsilon * (log1pexp(k * x) - log1pexp(k));
    }
    return samples_integral_from_one(std::get<SamplesIC>(ic).field, x);
  };

  auto ratio = [&](double x) { return std::abs(integral_from_one(x)) / (x * x); };

  bool ok = true;
  for (double sgn : {1.0, -1.0}) {
    const double v1 = ratio(sgn * x_probe);
    const double v2 = ratio(sgn * 2.0 * x_probe);
    if (!(v2 <= v1 && v2 < 1e-6)) ok = false;
  }
  return ok;
}

}  // namespace colehopf
