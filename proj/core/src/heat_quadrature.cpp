#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "colehopf/errors.hpp"
#include "colehopf/heat.hpp"
#include "colehopf/special.hpp"

namespace colehopf {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlNode[15] = {
    -0.9879925180204854, -0.937273392400706,   -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388,  -0.3941513470775634,
    -0.20119409399743451, 0.0,                  0.20119409399743451,
    0.3941513470775634,   0.5709721726085388,   0.7244177313601701,
    0.8482065834104272,   0.937273392400706,    0.9879925180204854};
constexpr double kGlWeight[15] = {
    0.030753241996118647, 0.07036604748810807, 0.10715922046717177,
    0.1395706779261539,   0.16626920581699378, 0.18616100001556188,
    0.19843148532711125,  0.2025782419255609,  0.19843148532711125,
    0.18616100001556188,  0.16626920581699378, 0.1395706779261539,
    0.10715922046717177,  0.07036604748810807, 0.030753241996118647};

struct PairVal {
  std::complex<double> den{0.0, 0.0};
  std::complex<double> num{0.0, 0.0};
};

// f(y) -> {denominator integrand, numerator integrand}
using PairFn = std::function<PairVal(double)>;

PairVal gl15(const PairFn& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  PairVal s;
  for (int i = 0; i < 15; ++i) {
    const PairVal v = f(mid + half * kGlNode[i]);
    s.den += kGlWeight[i] * v.den;
    s.num += kGlWeight[i] * v.num;
  }
  s.den *= half;
  s.num *= half;
  return s;
}

struct AdaptiveResult {
  std::complex<double> den{0.0, 0.0};
  std::complex<double> num{0.0, 0.0};
  double den_abs_scale = 0.0;  // sum of |panel| magnitudes: cancellation gauge
  int panels = 0;
};

// Bisection-adaptive composite GL over [lo, hi], pre-split at breakpoints.
// A panel is accepted when the whole-panel estimate agrees with the sum of
// its halves to the width-proportional share of the tolerance, for both
// integrand components. Left-first stack order keeps the accumulation order
// (and therefore every emitted byte) deterministic.
AdaptiveResult integrate_pair(const PairFn& f, double lo, double hi,
                              const std::vector<double>& breakpoints,
                              const QuadratureOptions& opts) {
  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double b : breakpoints) {
    if (b > lo && b < hi) cuts.push_back(b);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  const double total_width = hi - lo;
  const double seed_width = total_width / static_cast<double>(opts.initial_panels);

  struct Item {
    double lo, hi;
    PairVal whole;
  };
  std::vector<Item> stack;
  // seed panels, rightmost pushed first so the leftmost is processed first
  std::vector<Item> seeds;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double a = cuts[c], b = cuts[c + 1];
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / seed_width)));
    for (int p = 0; p < pieces; ++p) {
      const double plo = a + (b - a) * static_cast<double>(p) / pieces;
      const double phi = a + (b - a) * static_cast<double>(p + 1) / pieces;
      seeds.push_back({plo, phi, gl15(f, plo, phi)});
    }
  }
  double den_scale = 0.0, num_scale = 0.0;
  for (const Item& s : seeds) {
    den_scale += std::abs(s.whole.den);
    num_scale += std::abs(s.whole.num);
  }
  const double tol_den = opts.rel_tol * den_scale + opts.abs_tol;
  const double tol_num = opts.rel_tol * num_scale + opts.abs_tol;

  for (auto it = seeds.rbegin(); it != seeds.rend(); ++it) stack.push_back(*it);

  AdaptiveResult out;
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (item.lo + item.hi);
    const PairVal left = gl15(f, item.lo, mid);
    const PairVal right = gl15(f, mid, item.hi);
    const std::complex<double> den2 = left.den + right.den;
    const std::complex<double> num2 = left.num + right.num;
    const double share = (item.hi - item.lo) / total_width;
    const bool den_ok = std::abs(item.whole.den - den2) <= tol_den * share;
    const bool num_ok = std::abs(item.whole.num - num2) <= tol_num * share;
    const bool too_narrow = (item.hi - item.lo) < 1e-14 * total_width;
    if ((den_ok && num_ok) || too_narrow) {
      out.den += den2;
      out.num += num2;
      out.den_abs_scale += std::abs(den2);
      out.panels += 2;
      if (out.panels > opts.max_panels_per_node) {
        throw Error("quadrature-nonconvergence", "panel refinement exceeded the limit",
                    {{"max_panels", std::to_string(opts.max_panels_per_node)}});
      }
    } else {
      if (static_cast<int>(stack.size()) + out.panels > opts.max_panels_per_node) {
        throw Error("quadrature-nonconvergence", "panel refinement exceeded the limit",
                    {{"max_panels", std::to_string(opts.max_panels_per_node)}});
      }
      stack.push_back({mid, item.hi, right});
      stack.push_back({item.lo, mid, left});
    }
  }
  return out;
}

// Integral_a^inf e^{kappa v - v^2/s^2} dv and its first moment
// Integral_a^inf v e^{kappa v - v^2/s^2} dv, s^2 = 4 eps t (principal sqrt).
struct TailMoments {
  std::complex<double> i0{0.0, 0.0};
  std::complex<double> i1{0.0, 0.0};
};

TailMoments tail_moments(std::complex<double> kappa, double a, std::complex<double> s) {
  const std::complex<double> s2 = s * s;
  const std::complex<double> center = 0.5 * kappa * s2;
  const std::complex<double> pref = std::exp(0.25 * kappa * kappa * s2);
  const std::complex<double> u = (a - center) / s;
  const std::complex<double> erfc_u = 1.0 - erf_complex(u).value;
  TailMoments m;
  m.i0 = pref * (s * std::sqrt(std::numbers::pi) / 2.0) * erfc_u;
  m.i1 = center * m.i0 + pref * (0.5 * s2) * std::exp(-u * u);
  return m;
}

struct NodeIntegral {
  std::complex<double> den{0.0, 0.0};
  std::complex<double> num{0.0, 0.0};
  double den_abs_scale = 0.0;
  int panels = 0;
};

// Kernel integrals of a profile against exp(-(x-y)^2/(4 eps t)), with the
// (x-y)/t-weighted companion accumulated alongside. Tail models extend the
// integrals to the whole line in closed form.
NodeIntegral node_integrals(const Profile& prof, double x, double t, std::complex<double> eps,
                            double window, const QuadratureOptions& opts, bool want_num) {
  const std::complex<double> inv_e4t = 1.0 / (4.0 * eps * t);
  const std::complex<double> s = std::sqrt(4.0 * eps * t);

  double core_lo = x - window;
  double core_hi = x + window;
  if (prof.left_tail) core_lo = std::min(core_lo, prof.left_start);
  if (prof.right_tail) core_hi = std::max(core_hi, prof.right_start);

  PairFn f = [&](double y) -> PairVal {
    const double d = x - y;
    const std::complex<double> k = std::exp(-(d * d) * inv_e4t);
    const std::complex<double> g = prof.eval(y) * k;
    PairVal v;
    v.den = g;
    if (want_num) v.num = (d / t) * g;
    return v;
  };

  AdaptiveResult core = integrate_pair(f, core_lo, core_hi, prof.breakpoints, opts);

  NodeIntegral out;
  out.den = core.den;
  out.num = core.num;
  out.den_abs_scale = core.den_abs_scale;
  out.panels = core.panels;

  if (prof.right_tail) {
    const ExpTail& tail = *prof.right_tail;
    if (tail.coeff != std::complex<double>(0.0, 0.0)) {
      // y = x + u, u >= core_hi - x: profile = coeff e^{rate x} e^{rate u}
      const TailMoments m = tail_moments(tail.rate, core_hi - x, s);
      const std::complex<double> base = tail.coeff * std::exp(tail.rate * x);
      out.den += base * m.i0;
      out.den_abs_scale += std::abs(base * m.i0);
      if (want_num) out.num += -(base / t) * m.i1;
    }
  }
  if (prof.left_tail) {
    const ExpTail& tail = *prof.left_tail;
    if (tail.coeff != std::complex<double>(0.0, 0.0)) {
      // y = x - v, v >= x - core_lo: profile = coeff e^{rate x} e^{-rate v}
      const TailMoments m = tail_moments(-tail.rate, x - core_lo, s);
      const std::complex<double> base = tail.coeff * std::exp(tail.rate * x);
      out.den += base * m.i0;
      out.den_abs_scale += std::abs(base * m.i0);
      if (want_num) out.num += (base / t) * m.i1;
    }
  }
  return out;
}

void record_stats(QuadratureStats* stats, int panels) {
  if (!stats) return;
  stats->total_panels += panels;
  stats->max_node_panels = std::max(stats->max_node_panels, panels);
}

}  // namespace

std::complex<double> heat_kernel(double x, double y, double t, ComplexDiffusion eps) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "heat_kernel requires t > 0");
  const double d = x - y;
  return std::exp(-(d * d) / (4.0 * eps.epsilon * t));
}

ComplexField evolve_heat_quadrature(const Profile& eta0, const Grid1D& grid, double t,
                                    ComplexDiffusion eps, const QuadratureOptions& opts,
                                    QuadratureStats* stats) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "evolution requires t > 0");
  if (!eta0.eval) throw Error("invalid-argument", "profile has no evaluator");
  if (eps.epsilon.real() == 0.0 && (!eta0.left_tail || !eta0.right_tail)) {
    throw Error("oscillatory-divergence",
                "Re eps = 0 requires analytically integrable tails on both sides");
  }

  const double window =
      std::max(opts.window_factor * std::sqrt(std::abs(4.0 * eps.epsilon * t)),
               opts.min_window_spacings * grid.spacing);
  const std::complex<double> norm =
      1.0 / std::sqrt(4.0 * std::numbers::pi * eps.epsilon * t);

  ComplexField eta = make_field(grid, t);
  for (int i = 0; i < grid.n; ++i) {
    const NodeIntegral ni =
        node_integrals(eta0, grid.node(i), t, eps.epsilon, window, opts, /*want_num=*/false);
    record_stats(stats, ni.panels);
    eta.values[static_cast<std::size_t>(i)] = norm * ni.den;
  }
  return eta;
}

ComplexField solve_burgers_colehopf(const InitialCondition& ic, const Grid1D& grid, double t,
                                    ComplexDiffusion eps, SolutionMode mode,
                                    const QuadratureOptions& opts, QuadratureStats* stats) {
  if (!(t > 0.0)) throw Error("nonpositive-dt", "solve requires t > 0");
  validate_ic(ic);
  if (!tail_condition_check(ic, eps, default_tail_probe(ic, eps))) {
    throw Error("tail-condition-violated",
                "initial data fails the growth bound x^-2 Integral_1^x psi0 -> 0");
  }

  ComplexField psi = make_field(grid, t);

  if (mode == SolutionMode::paper_literal && std::holds_alternative<DeltaIC>(ic)) {
    const double N = std::get<DeltaIC>(ic).strength;
    for (int i = 0; i < grid.n; ++i) {
      psi.values[static_cast<std::size_t>(i)] = psi_delta_literal_ratio(N, grid.node(i), t, eps);
    }
    return psi;
  }

  const Profile weight = mode == SolutionMode::derived ? eta0_profile(ic, eps)
                                                       : psi0_profile(ic, eps);
  if (eps.epsilon.real() == 0.0 && (!weight.left_tail || !weight.right_tail)) {
    throw Error("oscillatory-divergence",
                "Re eps = 0 requires analytically integrable tails on both sides");
  }

  const double window =
      std::max(opts.window_factor * std::sqrt(std::abs(4.0 * eps.epsilon * t)),
               opts.min_window_spacings * grid.spacing);
  // literal mode: bare-kernel denominator Integral K dy = s sqrt(pi)
  const std::complex<double> s = std::sqrt(4.0 * eps.epsilon * t);
  const std::complex<double> literal_den = s * std::sqrt(std::numbers::pi);

  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    const NodeIntegral ni = node_integrals(weight, x, t, eps.epsilon, window, opts,
                                           /*want_num=*/true);
    record_stats(stats, ni.panels);

    std::complex<double> den, num;
    double den_scale;
    if (mode == SolutionMode::derived) {
      den = ni.den;
      num = ni.num;
      den_scale = ni.den_abs_scale;
    } else {
      den = literal_den;
      num = ni.num;
      den_scale = std::abs(literal_den);
    }
    if (std::abs(den) < 1e-290 || std::abs(den) < 1e-11 * den_scale) {
      throw Error("denominator-underflow", "kernel integral of eta0 vanished",
                  {{"x", std::to_string(x)}});
    }
    psi.values[static_cast<std::size_t>(i)] = num / den;
  }
  return psi;
}

}  // namespace colehopf
