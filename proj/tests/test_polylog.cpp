#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "relgas/polylog.hpp"

namespace pl = relgas::polylog;
using relgas::Flags;
using relgas::Method;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
constexpr double kPi = ref::pi;
}  // namespace

TEST_SUITE("polylog") {
  TEST_CASE("direct series") {
    CHECK(pl::li_direct(3.0, 0.0).value == 0.0);
    CHECK(rel(pl::li_direct(1.0, 0.5).value, std::log(2.0)) < 1e-15);
    CHECK(std::abs(pl::li_direct(4.0, -1.0 + 1e-9).value + 7.0 * std::pow(kPi, 4) / 720.0) < 1e-8);
    CHECK_THROWS_AS(pl::li_direct(2.0, 1.0), relgas::DomainError);
    for (double s : {-2.5, 0.5, 2.0, 3.3}) {
      for (double x : {-0.8, 0.2, 0.6}) CHECK(rel(pl::li_direct(s, x).value, ref::li_direct(s, x)) < 1e-12);
    }
  }

  TEST_CASE("z d/dz Li_s(z) = Li_{s-1}(z)") {
    const double h = 1e-5;
    for (double s : {2.0, 3.0, 4.0}) {
      for (double x : {-0.7, -0.3, 0.3, 0.7}) {
        const double d = (pl::li_direct(s, x + h).value - pl::li_direct(s, x - h).value) / (2.0 * h);
        CHECK(std::abs(x * d - pl::li_direct(s - 1.0, x).value) < 1e-7);
      }
    }
  }

  TEST_CASE("expansion of Li_s(e^z)") {
    CHECK(rel(pl::li_exp_expansion(2.5, -0.3).value, ref::li_direct(2.5, std::exp(-0.3))) < 1e-12);
    CHECK(rel(pl::li_exp_expansion(1.5, -1.0).value, ref::li_direct(1.5, std::exp(-1.0))) < 1e-12);
    // zeta(5/2) as z -> 0-
    CHECK(rel(pl::li_exp_expansion(2.5, -1e-12).value, 1.3414872572509171798) < 1e-9);
    CHECK(rel(pl::li_exp_integer(4, -0.5).value, ref::li_direct(4.0, std::exp(-0.5))) < 1e-12);
    CHECK(rel(pl::li_exp_integer(1, -0.5).value, -std::log1p(-std::exp(-0.5))) < 1e-12);
    const double edge = -2.0 * kPi + 0.1;
    const relgas::EvalOutcome e = pl::li_exp_integer(2, edge);
    CHECK(rel(e.value, ref::li_direct(2.0, std::exp(edge))) < 1e-9);
    CHECK(e.flags.has(Flags::near_domain_edge));
    CHECK_THROWS_AS(pl::li_exp_expansion(2.0, -0.3), relgas::DomainError);
    CHECK_THROWS_AS(pl::li_exp_expansion(2.5, 0.3), relgas::DomainError);
    CHECK_THROWS_AS(pl::li_exp_expansion(2.5, -7.0), relgas::DomainError);
  }

  TEST_CASE("expansion of Li_s(-e^z)") {
    const double eta4 = 7.0 * std::pow(kPi, 4) / 720.0;
    CHECK(rel(pl::li_minus_exp(4.0, 0.0).value, -eta4) < 1e-14);
    CHECK(rel(-pl::li_minus_exp(4.0, 0.8).value, ref::fermi_dirac(4.0, 0.8)) < 1e-11);
    for (double s : {-1.5, 0.5, 2.5, 3.0, 4.7}) {
      CHECK(rel(pl::li_minus_exp(s, -0.5).value, ref::li_direct(s, -std::exp(-0.5))) < 1e-12);
    }
    for (int n = 1; n <= 6; ++n) {
      for (double z : {-2.0, 0.4, 2.5}) {
        CHECK(rel(pl::li_minus_exp_integer(n, z).value, pl::li_minus_exp(n, z).value) < 1e-13);
      }
    }
    for (double s : {2.0, 2.5, 3.0, 4.0}) CHECK(rel(pl::li_minus_exp(s, 0.0).value, -ref::eta(s)) < 1e-13);
    CHECK_THROWS_AS(pl::li_minus_exp(2.0, kPi), relgas::DomainError);
  }

  TEST_CASE("representations agree where domains overlap") {
    for (double s : {0.5, 2.5, 3.5}) {
      for (double z : {-0.9, -0.5, -0.2}) {
        const double direct = pl::li_direct(s, std::exp(z)).value;
        CHECK(rel(pl::li_exp_expansion(s, z).value, direct) < 1e-11);
        CHECK(rel(pl::li_minus_exp(s, z).value, pl::li_direct(s, -std::exp(z)).value) < 1e-11);
      }
    }
  }

  TEST_CASE("negative even orders") {
    CHECK(pl::li_neg_even_minus_exp(0, 0.0).value == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(pl::li_neg_even_minus_exp(1, 0.0).value) < 1e-15);
    CHECK(rel(pl::li_neg_even_exp(0, -0.3).value, ref::li_direct(0.0, std::exp(-0.3))) < 1e-12);
    CHECK_THROWS_AS(pl::li_neg_even_exp(1, 0.0), relgas::PoleError);
    for (int m : {1, 2, 3}) {
      for (double z : {-0.7, 0.4, 1.9}) {
        CHECK(rel(pl::li_neg_even_minus_exp(m, z).value, ref::li_eulerian(2 * m, -std::exp(z))) < 1e-11);
      }
    }
  }

  TEST_CASE("index derivatives at s = -2m") {
    const double h = 1e-4;
    for (int m : {0, 1, 2}) {
      const double s = -2.0 * m;
      for (double z : {0.2, -0.2, 0.5, -0.5}) {
        const double fd = (pl::li_minus_exp(s + h, z).value - pl::li_minus_exp(s - h, z).value) / (2.0 * h);
        CHECK(std::abs(pl::dli_ds_neg_even_minus_exp(m, z).value - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
        if (z < 0.0) {
          const double fdp =
              (pl::li_exp_expansion(s + h, z).value - pl::li_exp_expansion(s - h, z).value) / (2.0 * h);
          CHECK(std::abs(pl::dli_ds_neg_even_exp(m, z).value - fdp) < 1e-7 * std::max(1.0, std::abs(fdp)));
        }
      }
    }
    CHECK(rel(pl::dli_ds_neg_even_minus_exp(0, 0.0).value, -0.5 * std::log(kPi / 2.0)) < 1e-14);
    // Both z^{-3} pieces psi(3) Gamma(3)/z^3 - Gamma(3) ln(-z)/z^3 are present:
    // removing them leaves a function regular at z = 0.
    auto regular = [](double z) {
      const double psi3 = 1.5 - 0.57721566490153286061;
      return pl::dli_ds_neg_even_exp(1, z).value - 2.0 * psi3 / (z * z * z) + 2.0 * std::log(-z) / (z * z * z);
    };
    CHECK(std::abs(regular(-1e-3) - regular(-2e-3)) < 1e-3);
  }

  TEST_CASE("large-z expansion") {
    CHECK(rel(-pl::li_asymptotic(4.0, 20.0).value, ref::fermi_dirac(4.0, 20.0)) < 1e-12);
    CHECK(rel(-pl::li_asymptotic(2.5, 20.0).value, ref::fermi_dirac(2.5, 20.0)) < 1e-10);
    CHECK(rel(-pl::li_asymptotic(2.5, 15.0).value, ref::fermi_dirac(2.5, 15.0)) < 1e-9);
    const double z = 1e4;
    CHECK(rel(pl::li_asymptotic(3.5, z).value, -std::pow(z, 3.5) / std::tgamma(4.5)) < 1e-6);
    CHECK_THROWS_AS(pl::li_asymptotic(2.0, -1.0), relgas::DomainError);
    CHECK(pl::li_asymptotic(2.5, 4.0).flags.has(Flags::asymptotic_warning));
  }

  TEST_CASE("router") {
    for (int m : {0, 1, 2, 4, 8}) {
      for (double z : {-3.0, -0.5, 0.5, 3.0, 6.0}) {
        const relgas::EvalOutcome v = pl::evaluate({-2.0 * m, z, pl::ExpSign::minus, {}});
        const double want = ref::li_eulerian(2 * m, -std::exp(z));
        CHECK(std::abs(v.value - want) <= 1e-11 * std::abs(want) + 1e-15);
      }
    }
    CHECK(pl::evaluate({2.5, 30.0, pl::ExpSign::minus, {}}).method == Method::asymptotic);
    CHECK(rel(pl::evaluate({4.0, 6.0, pl::ExpSign::minus, {}}).value, -ref::fermi_dirac(4.0, 6.0)) < 1e-12);
    CHECK_THROWS_AS(pl::evaluate({2.5, 0.5, pl::ExpSign::plus, {}}), relgas::DomainError);
  }
}
