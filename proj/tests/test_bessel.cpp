#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include "oracles.hpp"
#include "relgas/bessel.hpp"

namespace bs = relgas::bessel;
using relgas::Statistics;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("bessel") {
  TEST_CASE("K2 branches against Boost") {
    CHECK(rel(bs::k2_small(1.0).value, 1.6248388986351774828) < 1e-14);
    CHECK(rel(bs::k2_small(1e-4).value * 1e-8, 2.0) < 1e-7);
    CHECK(rel(bs::k2_asym(500.0).value * std::exp(500.0) * std::sqrt(1000.0 / ref::pi), 1.0) < 1e-2);
    for (double z : {2.0, 5.0, 10.0, 15.0}) {
      const relgas::EvalOutcome a = bs::k2_asym(z);
      CHECK(std::abs(a.value - boost::math::cyl_bessel_k(2, z)) <= a.error_estimate);
    }
    for (double z : {1e-3, 0.1, 0.7, 1.5, 2.0, 3.0, 8.0, 19.0, 20.0, 35.0, 120.0, 600.0}) {
      CHECK(rel(bs::k2(z), boost::math::cyl_bessel_k(2, z)) < 1e-13);
      CHECK(rel(bs::k1(z), boost::math::cyl_bessel_k(1, z)) < 1e-13);
      CHECK(rel(bs::k2_scaled(z), std::exp(z) * boost::math::cyl_bessel_k(2, z)) < 1e-12);
      CHECK(rel(bs::k1_scaled(z), std::exp(z) * boost::math::cyl_bessel_k(1, z)) < 1e-12);
    }
    for (double z : {2.0, 5.0, 12.0}) {
      CHECK(rel(bs::kn_scaled_trapezoid(2, z).value, std::exp(z) * boost::math::cyl_bessel_k(2, z)) < 1e-14);
    }
    CHECK_THROWS_AS(bs::k2_small(0.0), relgas::DomainError);
  }

  // The truncated asymptotic series cannot get below about e^{-2z}, which is
  // why K2 has a middle band between z_cross and z_asym.
  TEST_CASE("asymptotic K2 at z = 10 and z = 2" * doctest::may_fail()) {
    CHECK(rel(bs::k2_asym(10.0).value, boost::math::cyl_bessel_k(2, 10.0)) < 1e-12);
    CHECK(rel(bs::k2_asym(2.0).value, boost::math::cyl_bessel_k(2, 2.0)) < 1e-8);
  }

  TEST_CASE("small and asymptotic series overlap near the crossover") {
    const relgas::EvalOutcome a = bs::k2_small(2.0), b = bs::k2_asym(2.0);
    CHECK(std::abs(a.value - b.value) <= std::max(a.error_estimate, b.error_estimate));
    CHECK(rel(a.value, boost::math::cyl_bessel_k(2, 2.0)) < 1e-13);
    CHECK(rel(bs::k2_asym(20.0).value, boost::math::cyl_bessel_k(2, 20.0)) < 1e-13);
  }

  TEST_CASE("pressure series") {
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      const double a = st == Statistics::fermion ? -1.0 : 1.0;
      for (double l : {2.0, 5.0, 20.0}) {
        for (double n : {-3.0, 0.0, 0.5 * l}) {
          const bs::BesselSeriesParams p{l, n, st, {}};
          CHECK(rel(bs::pressure_bessel(p).value, ref::integral(ref::Kind::pressure, l, n, a)) < 1e-11);
          CHECK(rel(bs::density_bessel(p).value, ref::integral(ref::Kind::number, l, n, a)) < 1e-11);
          CHECK(rel(bs::scalar_density_bessel(p).value, ref::integral(ref::Kind::scalar, l, n, a)) < 1e-11);
        }
      }
    }
    const bs::BesselSeriesParams f{5.0, 0.0, Statistics::fermion, {}}, b{5.0, 0.0, Statistics::boson, {}};
    CHECK(bs::pressure_bessel(b).value > bs::pressure_bessel(f).value);
    CHECK(bs::pressure_bessel({3.0, -800.0, Statistics::fermion, {}}).value == 0.0);
    CHECK_THROWS_AS(bs::pressure_bessel({2.0, 2.0, Statistics::fermion, {}}), relgas::DomainError);
    CHECK(bs::pressure_bessel({2.0, 1.95, Statistics::boson, {}}).flags.has(relgas::Flags::slow_convergence));
  }

  TEST_CASE("pressure increases with nu") {
    double prev = 0.0;
    for (double n = -4.0; n < 4.0; n += 0.4) {
      const double v = bs::pressure_bessel({5.0, n, Statistics::fermion, {}}).value;
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("nonrelativistic series") {
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      for (double nt : {-1.0, -5.0}) {
        const bs::BesselSeriesParams p{20.0, 20.0 + nt, st, {}};
        CHECK(rel(bs::pressure_nonrel(p).value, bs::pressure_bessel(p).value) < 1e-8);
      }
    }
    const bs::BesselSeriesParams deg{20.0, 23.0, Statistics::fermion, {}};
    CHECK(rel(bs::pressure_nonrel(deg).value, ref::integral(ref::Kind::pressure, 20.0, 23.0, -1.0)) < 1e-8);
    CHECK_THROWS_AS(bs::pressure_nonrel({5.0, 0.0, Statistics::fermion, {}}), relgas::DomainError);
    CHECK_THROWS_AS(bs::pressure_nonrel({20.0, 20.1, Statistics::boson, {}}), relgas::DomainError);
  }
}
