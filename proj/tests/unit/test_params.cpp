#include <doctest.h>

#include "colehopf/errors.hpp"
#include "colehopf/params.hpp"

using namespace colehopf;

TEST_CASE("uniform grid: spacing and node placement") {
  const Grid1D g = make_uniform_grid(0.0, 1.0, 5);
  CHECK(g.spacing == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(1) == doctest::Approx(0.25));
  CHECK(g.node(2) == doctest::Approx(0.5));
  CHECK(g.node(3) == doctest::Approx(0.75));
  CHECK(g.node(4) == 1.0);

  const Grid1D wide = make_uniform_grid(-10.0, 10.0, 2001);
  CHECK(wide.spacing == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("uniform grid: endpoints are pinned and nodes reproducible bit-for-bit") {
  const Grid1D g = make_uniform_grid(-8.0, 8.0, 2048);
  CHECK(g.node(0) == -8.0);
  CHECK(g.node(g.n - 1) == 8.0);  // exactly, not just approximately
  for (int i : {1, 17, 1000, 2046}) {
    // node i must be the single expression x_min + i*spacing, no accumulation
    CHECK(g.node(i) == -8.0 + static_cast<double>(i) * g.spacing);
  }
}

TEST_CASE("uniform grid: degenerate inputs") {
  CHECK_THROWS_WITH_AS(make_uniform_grid(1.0, 1.0, 5), doctest::Contains("x_min < x_max"), Error);
  try {
    make_uniform_grid(5.0, 1.0, 9);
    FAIL("expected invalid-range");
  } catch (const Error& e) {
    CHECK(e.code() == "invalid-range");
  }
  try {
    make_uniform_grid(0.0, 1.0, 1);
    FAIL("expected too-few-nodes");
  } catch (const Error& e) {
    CHECK(e.code() == "too-few-nodes");
  }
}

TEST_CASE("epsilon map: nu_reg + i hbar/(2 mass)") {
  PhysicalParams p;
  p.hbar = 1.0;
  p.mass = 0.5;
  CHECK(epsilon_of(p).epsilon == std::complex<double>(0.0, 1.0));

  p.mass = 1.0;
  CHECK(epsilon_of(p).epsilon == std::complex<double>(0.0, 0.5));

  p.nu_reg = 0.1;
  CHECK(epsilon_of(p).epsilon == std::complex<double>(0.1, 0.5));
}

TEST_CASE("epsilon map is homogeneous in hbar") {
  PhysicalParams p;
  p.mass = 0.7;
  for (double hbar : {0.25, 1.0, 3.5, 11.0}) {
    p.hbar = hbar;
    const double base = epsilon_of(p).epsilon.imag();
    p.hbar = 2.0 * hbar;
    CHECK(epsilon_of(p).epsilon.imag() == 2.0 * base);  // scaling by 2 is exact in binary
    p.hbar = hbar;
  }
}

TEST_CASE("parameter validation") {
  PhysicalParams p;
  p.mass = -1.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.mass = 1.0;
  p.nu_reg = -0.5;
  CHECK_THROWS_AS(p.validate(), Error);

  CHECK_THROWS_AS(make_diffusion({-0.1, 0.5}), Error);
  CHECK_THROWS_AS(make_diffusion({0.0, 0.0}), Error);
}

TEST_CASE("params JSON: all keys optional, defaults applied") {
  const ParamsConfig defaults = parse_params_json("{}");
  CHECK(defaults.params.hbar == 1.0);
  CHECK(defaults.params.mass == 1.0);
  CHECK(defaults.params.c == 1.0);
  CHECK(defaults.params.l == 1.0);
  CHECK(defaults.params.nu_reg == 0.0);
  CHECK(defaults.grid.n == 2048);

  const ParamsConfig cfg = parse_params_json(
      R"({"hbar": 2.0, "mass": 0.25, "nu_reg": 0.01,
          "grid": {"x_min": -4.0, "x_max": 4.0, "n": 101}})");
  CHECK(cfg.params.hbar == 2.0);
  CHECK(epsilon_of(cfg.params).epsilon == std::complex<double>(0.01, 4.0));
  CHECK(cfg.grid.n == 101);
  CHECK(cfg.grid.x_min == -4.0);

  try {
    parse_params_json("{not json");
    FAIL("expected config-parse");
  } catch (const Error& e) {
    CHECK(e.code() == "config-parse");
  }
  CHECK_THROWS_AS(parse_params_json(R"({"hbar": -1})"), Error);
  CHECK_THROWS_AS(parse_params_json(R"({"grid": {"x_min": 2, "x_max": 1}})"), Error);
}
