#include <cmath>
#include <cstdlib>

#include <doctest.h>

#include "oracles.hpp"
#include "relgas/eos.hpp"
#include "relgas/hightemp.hpp"

namespace eos = relgas::eos;
using relgas::Method;
using relgas::Statistics;

namespace {
constexpr double kPi = ref::pi;
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_SUITE("eos") {
  TEST_CASE("validation") {
    CHECK_THROWS_AS(eos::validate({0.0, 0.0, 1.0, Statistics::fermion}), relgas::DomainError);
    CHECK_THROWS_AS(eos::validate({1.0, 0.0, -1.0, Statistics::fermion}), relgas::DomainError);
    CHECK_THROWS_AS(eos::validate({1.0, 2.0, 1.0, Statistics::boson}), relgas::DomainError);
    CHECK_THROWS_AS(eos::validate({1.0, NAN, 1.0, Statistics::fermion}), relgas::DomainError);
    CHECK_NOTHROW(eos::validate({1.0, 1.0, 1.0, Statistics::boson}));
  }

  TEST_CASE("method selection") {
    CHECK(eos::select_method(0.0, 5.0, Statistics::fermion) == Method::massless);
    CHECK(eos::select_method(0.5, 0.3, Statistics::fermion) == Method::high_t);
    CHECK(eos::select_method(2.5, 0.3, Statistics::fermion) == Method::bessel);
    CHECK(eos::select_method(1.0, 3.0, Statistics::fermion) == Method::quadrature);
    CHECK(eos::select_method(4.0, 1.0, Statistics::boson) == Method::high_t);
    CHECK(eos::select_method(1.0, -2.0, Statistics::boson) == Method::quadrature);
    CHECK(eos::select_method(100.0, 0.0, Statistics::boson) == Method::bessel);
    CHECK(eos::select_method(5.0, 6.0, Statistics::fermion) == Method::quadrature);
  }

  TEST_CASE("examples") {
    const eos::ThermoSet a = eos::evaluate({200.0, 0.0, 0.0, Statistics::fermion});
    CHECK(rel(a.P, 7.0 * kPi * kPi / 720.0 * std::pow(200.0, 4)) < 1e-14);

    const eos::ThermoSet b = eos::evaluate({10.0, 0.0, 1000.0, Statistics::fermion});
    CHECK(b.reduced.method == Method::bessel);
    CHECK(rel(b.P, eos::evaluate({10.0, 0.0, 1000.0, Statistics::fermion}, Method::quadrature).P) < 1e-9);

    const eos::ThermoSet c = eos::evaluate({100.0, 50.0, 50.0, Statistics::boson});
    CHECK(c.reduced.method == Method::high_t);
    CHECK(std::abs(c.eps - (c.state.T * c.s + c.state.mu * c.n - c.P)) < 1e-10 * c.eps);
  }

  TEST_CASE("first law and positivity across regimes") {
    for (Statistics st : {Statistics::fermion, Statistics::boson}) {
      for (double T : {0.05, 0.4, 3.0, 50.0}) {
        for (double mu : {-2.0, 0.0, 0.9, 4.0}) {
          if (st == Statistics::boson && mu > 1.0) continue;
          const eos::ThermoSet t = eos::evaluate({T, mu, 1.0, st});
          CHECK(t.s >= 0.0);
          CHECK(std::abs(t.eps - (T * t.s + mu * t.n - t.P)) <= 1e-10 * std::abs(t.eps) + 1e-300);
        }
      }
    }
  }

  TEST_CASE("scaling covariance") {
    const eos::PhysicalState s{1.3, 0.4, 0.9, Statistics::fermion};
    const eos::ThermoSet base = eos::evaluate(s);
    for (double c : {0.5, 2.0}) {
      const eos::ThermoSet t = eos::evaluate({c * s.T, c * s.mu, c * s.mass, s.stat});
      CHECK(rel(t.P, std::pow(c, 4) * base.P) < 1e-13);
      CHECK(rel(t.eps, std::pow(c, 4) * base.eps) < 1e-13);
      CHECK(rel(t.n, std::pow(c, 3) * base.n) < 1e-13);
      CHECK(rel(t.rho_sc, std::pow(c, 3) * base.rho_sc) < 1e-13);
      CHECK(rel(t.s, std::pow(c, 3) * base.s) < 1e-13);
    }
  }

  TEST_CASE("methods agree within their estimates") {
    for (Method m : {Method::high_t, Method::polylog_form, Method::quadrature}) {
      const eos::ReducedSet r = eos::evaluate_reduced(0.3, 0.1, Statistics::fermion, m);
      const eos::ReducedSet q = eos::evaluate_reduced(0.3, 0.1, Statistics::fermion, Method::quadrature);
      CHECK(std::abs(r.pressure.value - q.pressure.value) <=
            r.pressure.error_estimate + q.pressure.error_estimate + 1e-15);
    }
    CHECK_THROWS_AS(eos::evaluate_reduced(3.1, 0.1, Statistics::fermion, Method::high_t), relgas::DomainError);
    CHECK_THROWS_AS(eos::evaluate_reduced(1.0, 3.0, Statistics::fermion, Method::bessel), relgas::DomainError);
    CHECK_THROWS_AS(eos::evaluate_reduced(1.0, 0.0, Statistics::fermion, Method::massless), relgas::DomainError);
  }

  TEST_CASE("particle and antiparticle") {
    CHECK(eos::pair_evaluate({1.0, 0.0, 0.5, Statistics::fermion}).net_density == 0.0);
    const eos::PairSet p = eos::pair_evaluate({1.0, 0.4, 0.5, Statistics::fermion});
    const double odd = relgas::hightemp::density_ht(relgas::hightemp::make_state(0.5, 0.4, Statistics::fermion),
                                                    relgas::hightemp::Part::odd)
                           .value;
    CHECK(rel(p.net_density, 2.0 * odd) < 1e-12);
    const double quad = ref::integral(ref::Kind::number, 0.5, 0.4, -1.0) - ref::integral(ref::Kind::number, 0.5, -0.4, -1.0);
    CHECK(rel(p.net_density, quad) < 1e-9);
    const double nu = 0.01, l = 0.5;
    const double lead = 2.0 * nu * (1.0 / 12.0 + nu * nu / (12 * kPi * kPi) - l * l / (8 * kPi * kPi));
    CHECK(rel(eos::pair_evaluate({1.0, nu, l, Statistics::fermion}).net_density, lead) < 5e-3);
    CHECK_THROWS_AS(eos::pair_evaluate({1.0, -2.0, 1.0, Statistics::boson}), relgas::DomainError);
  }

  TEST_CASE("tolerance from the environment") {
    setenv("RELGAS_RTOL", "1e-7", 1);
    CHECK(eos::config_from_env().rtol == 1e-7);
    unsetenv("RELGAS_RTOL");
    CHECK(eos::config_from_env().rtol == 1e-10);
  }
}
