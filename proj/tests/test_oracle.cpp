#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include "oracles.hpp"
#include "relgas/oracle.hpp"

namespace oc = relgas::oracle;
using relgas::Statistics;

namespace {
constexpr double kPi = ref::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("massless constants") {
    CHECK(rel(oc::pressure_quad(0.0, 0.0, Statistics::fermion).value, 7.0 * kPi * kPi / 720.0) < 1e-12);
    CHECK(rel(oc::pressure_quad(0.0, 0.0, Statistics::boson).value, kPi * kPi / 90.0) < 1e-12);
    CHECK(rel(oc::number_quad(0.0, 0.0, Statistics::fermion).value,
              3.0 * 1.2020569031595942854 / (4.0 * kPi * kPi)) < 1e-12);
    CHECK(oc::scalar_quad(0.0, 0.4, Statistics::fermion).value == 0.0);
  }

  TEST_CASE("heavy particle") {
    const double l = 50.0;
    const double p = oc::pressure_quad(l, 0.0, Statistics::fermion).value;
    CHECK(p < 1e-18);
    CHECK(rel(p, l * l / (2 * kPi * kPi) * boost::math::cyl_bessel_k(2, l)) < 1e-12);
  }

  TEST_CASE("derivatives by finite differences") {
    for (Statistics s : {Statistics::fermion, Statistics::boson}) {
      const double h = 1e-4;
      auto p = [&](double l, double n) { return oc::pressure_quad(l, n, s, {1e-14}).value; };
      const double dn = (p(0.7, 0.3 + h) - p(0.7, 0.3 - h)) / (2 * h);
      const double dl = (p(0.7 + h, 0.3) - p(0.7 - h, 0.3)) / (2 * h);
      CHECK(std::abs(oc::number_quad(0.7, 0.3, s).value - dn) < 1e-8);
      CHECK(std::abs(oc::scalar_quad(0.7, 0.3, s).value + dl) < 1e-8);
    }
  }

  TEST_CASE("independent quadrature") {
    for (Statistics s : {Statistics::fermion, Statistics::boson}) {
      for (double l : {0.3, 2.0, 9.0}) {
        for (double n : {-2.0, 0.0, 0.25}) {
          const double a = relgas::alpha(s);
          CHECK(rel(oc::pressure_quad(l, n, s).value, ref::integral(ref::Kind::pressure, l, n, a)) < 1e-11);
          CHECK(rel(oc::number_quad(l, n, s).value, ref::integral(ref::Kind::number, l, n, a)) < 1e-11);
          CHECK(rel(oc::scalar_quad(l, n, s).value, ref::integral(ref::Kind::scalar, l, n, a)) < 1e-11);
        }
      }
    }
    CHECK(rel(oc::pressure_quad(1.0, 30.0, Statistics::fermion).value,
              ref::integral(ref::Kind::pressure, 1.0, 30.0, -1.0)) < 1e-11);
  }

  TEST_CASE("tolerance refinement and monotonicity") {
    const relgas::EvalOutcome a = oc::pressure_quad(1.3, 0.4, Statistics::fermion, {1e-8});
    const relgas::EvalOutcome b = oc::pressure_quad(1.3, 0.4, Statistics::fermion, {0.5e-8});
    CHECK(std::abs(a.value - b.value) <= a.error_estimate);
    double prev = 0.0;
    for (double n = -3.0; n <= 1.0; n += 0.25) {
      const double v = oc::pressure_quad(1.0, n, Statistics::boson).value;
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("boson pole and edge") {
    CHECK_THROWS_AS(oc::pressure_quad(1.0, 1.1, Statistics::boson), relgas::PoleError);
    const relgas::EvalOutcome e = oc::pressure_quad(1.0, 1.0, Statistics::boson);
    CHECK(e.flags.has(relgas::Flags::boson_edge));
    CHECK(rel(e.value, ref::integral(ref::Kind::pressure, 1.0, 1.0, 1.0)) < 1e-10);
  }
}
