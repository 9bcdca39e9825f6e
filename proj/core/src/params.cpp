#include "colehopf/params.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "colehopf/errors.hpp"

namespace colehopf {

void PhysicalParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(hbar) || !positive(mass) || !positive(c) || !positive(l)) {
    throw Error("invalid-params", "hbar, mass, c and l must be finite and positive");
  }
  if (!std::isfinite(strength_N)) {
    throw Error("invalid-params", "strength_N must be finite");
  }
  if (!std::isfinite(nu_reg) || nu_reg < 0.0) {
    throw Error("invalid-params", "nu_reg must be finite and nonnegative");
  }
}

ComplexDiffusion make_diffusion(std::complex<double> epsilon) {
  if (!std::isfinite(epsilon.real()) || !std::isfinite(epsilon.imag())) {
    throw Error("invalid-diffusion", "epsilon must be finite");
  }
  if (epsilon.real() < 0.0) {
    throw Error("invalid-diffusion", "Re epsilon must be nonnegative");
  }
  if (epsilon == std::complex<double>(0.0, 0.0)) {
    throw Error("invalid-diffusion", "epsilon must be nonzero");
  }
  return ComplexDiffusion{epsilon};
}

ComplexDiffusion epsilon_of(const PhysicalParams& p) {
  p.validate();
  return make_diffusion({p.nu_reg, p.hbar / (2.0 * p.mass)});
}

Grid1D make_uniform_grid(double x_min, double x_max, int n) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max) {
    throw Error("invalid-range", "grid requires x_min < x_max",
                {{"x_min", std::to_string(x_min)}, {"x_max", std::to_string(x_max)}});
  }
  if (n < 2) {
    throw Error("too-few-nodes", "grid requires at least 2 nodes", {{"n", std::to_string(n)}});
  }
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n = n;
  g.spacing = (x_max - x_min) / static_cast<double>(n - 1);
  return g;
}

ParamsConfig parse_params_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("config-parse", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error("config-parse", "config root must be a JSON object");
  }

  ParamsConfig cfg;
  auto number = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) {
      throw Error("config-parse", std::string("key '") + key + "' must be a number");
    }
    return j[key].get<double>();
  };
  cfg.params.hbar = number("hbar", cfg.params.hbar);
  cfg.params.mass = number("mass", cfg.params.mass);
  cfg.params.c = number("c", cfg.params.c);
  cfg.params.l = number("l", cfg.params.l);
  cfg.params.strength_N = number("strength_N", cfg.params.strength_N);
  cfg.params.nu_reg = number("nu_reg", cfg.params.nu_reg);
  cfg.params.validate();

  double x_min = cfg.grid.x_min, x_max = cfg.grid.x_max;
  int n = cfg.grid.n;
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object()) throw Error("config-parse", "key 'grid' must be an object");
    if (g.contains("x_min")) x_min = g["x_min"].get<double>();
    if (g.contains("x_max")) x_max = g["x_max"].get<double>();
    if (g.contains("n")) {
      if (!g["n"].is_number_integer()) throw Error("config-parse", "grid.n must be an integer");
      n = g["n"].get<int>();
    }
  }
  cfg.grid = make_uniform_grid(x_min, x_max, n);
  return cfg;
}

}  // namespace colehopf
