#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "colehopf/special.hpp"

using namespace colehopf;
using cplx = std::complex<double>;

namespace {

// Reference values from a 40-digit series/continued-fraction oracle computed
// before the build; erf(1) additionally cross-checked against the 200-term
// exact-rational Taylor sum.
struct Ref {
  cplx z;
  cplx value;
};
const Ref kRefs[] = {
    {{1.0, 0.0}, {0.84270079294971486934, 0.0}},
    {{2.0, 0.0}, {0.99532226501895273416, 0.0}},
    {{6.0, 0.0}, {0.99999999999999997848, 0.0}},
    {{1.0, 1.0}, {1.3161512816979476449, 0.19045346923783468628}},
    {{0.5, -0.3}, {0.56156518852421316022, -0.26760586495760358257}},
    {{2.9, 0.1}, {0.99996602048586133367, 2.3811811058063842874e-5}},
    {{4.0, -1.0}, {1.00000001509629525, -3.7940329690890710501e-8}},
    {{-1.5, 2.0}, {0.10504928977401753266, 0.69951168616312445695}},
    {{0.0, 2.0}, {0.0, 18.564802414575552599}},
    {{0.0, 4.0}, {0.0, 1296959.7307176392315}},
    {{0.3, 3.3}, {8372.7350742299607467, -2657.0482203823534625}},
    {{3.2, 3.2}, {1.0910868471318837525, 0.08485474321838647686}},
};

double rel_gap(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("erf: z = 0 gives exactly 0") {
  const ErfResult r = erf_complex({0.0, 0.0});
  CHECK(r.value == cplx{0.0, 0.0});
}

TEST_CASE("erf: oracle reference points") {
  for (const Ref& ref : kRefs) {
    const ErfResult r = erf_complex(ref.z);
    INFO("z = ", ref.z.real(), " + ", ref.z.imag(), "i, method ", erf_method_name(r.method));
    CHECK(rel_gap(r.value, ref.value) < 1e-13);
  }
}

TEST_CASE("erf(1) matches the rational-Taylor oracle to 1e-13") {
  CHECK(std::abs(erf_complex({1.0, 0.0}).value.real() - 0.842700792949715) < 1e-13);
}

TEST_CASE("unnormalized convention is (sqrt(pi)/2) times the standard value") {
  CHECK(erf_paper_convention({0.0, 0.0}) == cplx{0.0, 0.0});
  // limit along the real axis is the Gaussian integral sqrt(pi)/2
  CHECK(std::abs(erf_paper_convention({6.0, 0.0}).real() - 0.88622692545275801365) < 1e-13);
  CHECK(std::abs(erf_paper_convention({1.0, 0.0}).real() - 0.7468241328124270254) < 1e-13);
}

TEST_CASE("erf: oddness over 1000 random points, |z| <= 5") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  int tested = 0;
  while (tested < 1000) {
    const cplx z{coord(rng), coord(rng)};
    if (std::abs(z) > 5.0) continue;
    ++tested;
    const cplx a = erf_complex(z).value;
    const cplx b = erf_complex(-z).value;
    CHECK(std::abs(a + b) <= 1e-14 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("erf: conjugate symmetry over 1000 random points") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    const cplx z{coord(rng), coord(rng)};
    const cplx a = erf_complex(std::conj(z)).value;
    const cplx b = std::conj(erf_complex(z).value);
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("erf: centered difference matches (2/sqrt(pi)) e^{-z^2} in the strip |Im z| <= 2") {
  // tolerance is relative to the derivative scale, which spans e^{(Im z)^2}
  const double h = 1e-5;
  const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
  for (double x = -3.0; x <= 3.0 + 1e-9; x += 0.5) {
    for (double y = -2.0; y <= 2.0 + 1e-9; y += 0.4) {
      const cplx z{x, y};
      const cplx diff = (erf_complex(z + h).value - erf_complex(z - h).value) / (2.0 * h);
      const cplx exact = two_over_sqrt_pi * std::exp(-z * z);
      CHECK(std::abs(diff - exact) <= 1e-8 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("erf: Taylor and continued fraction agree in the overlap annulus") {
  // 2.5 <= |z| <= 3.5, Re z > 0, away from the imaginary axis where the
  // fraction is defined; agreement relative to the value scale
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> rad(2.5, 3.5);
  std::uniform_real_distribution<double> ang(-1.39, 1.39);  // ~80 deg
  for (int i = 0; i < 300; ++i) {
    const double r = rad(rng), th = ang(rng);
    const cplx z{r * std::cos(th), r * std::sin(th)};
    const ErfResult taylor = erf_complex_taylor(z, 300);
    const ErfResult cf = erf_complex_cf(z, 400);
    INFO("z = ", z.real(), " + ", z.imag(), "i");
    CHECK(std::abs(taylor.value - cf.value) <=
          1e-12 * std::max(1.0, std::abs(taylor.value)));
  }
}

TEST_CASE("erf: reported error estimate stays below 1e-12 where the value is order one") {
  // |z| <= 6 sample away from the imaginary axis (on it the value itself
  // grows like e^{|z|^2} and no absolute promise is representable)
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> re(-6.0, 6.0);
  std::uniform_real_distribution<double> im(-2.5, 2.5);
  for (int i = 0; i < 500; ++i) {
    const cplx z{re(rng), im(rng)};
    if (std::abs(z) > 6.0) continue;
    const ErfResult r = erf_complex(z);
    INFO("z = ", z.real(), " + ", z.imag(), "i, method ", erf_method_name(r.method));
    CHECK(r.est_abs_error <= 1e-12 * std::max(1.0, std::abs(r.value)));
  }
}

TEST_CASE("erf: plateau beyond |z| = 30 inside the sector |arg z| < pi/4") {
  const ErfResult plus = erf_complex({31.0, 0.0});
  CHECK(plus.value == cplx{1.0, 0.0});
  CHECK(plus.method == ErfMethod::reflection);
  CHECK(plus.est_abs_error < 1e-300);

  const ErfResult minus = erf_complex({-31.0, 2.0});
  CHECK(minus.value == cplx{-1.0, 0.0});

  const ErfResult diag = erf_complex({25.0, 20.0});
  CHECK(std::abs(diag.value - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("erf: methods are tagged") {
  CHECK(erf_complex({1.0, 0.5}).method == ErfMethod::taylor);
  CHECK(erf_complex({4.0, 1.0}).method == ErfMethod::continued_fraction);
  CHECK(erf_complex({-4.0, 1.0}).method == ErfMethod::reflection);
  CHECK(erf_complex({0.0, 4.0}).method == ErfMethod::taylor);  // axis fallback
}
