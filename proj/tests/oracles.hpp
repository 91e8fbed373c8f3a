// Reference values for the tests, built only on Boost.Math and long double
// arithmetic so that they share no code with the library.
#ifndef RELGAS_TESTS_ORACLES_HPP
#define RELGAS_TESTS_ORACLES_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

namespace ref {

inline constexpr double pi = std::numbers::pi;

enum class Kind { pressure, number, scalar, energy };

// 1/(e^y - alpha) for y = x - nu, alpha = -1 (fermion) or +1 (boson).
inline double occupation(double y, double alpha) {
  if (alpha > 0.0) return 1.0 / std::expm1(y);
  if (y > 0.0) {
    const double e = std::exp(-y);
    return e / (1.0 + e);
  }
  return 1.0 / (std::exp(y) + 1.0);
}

// Reduced integrals with x = lambda + t^2, so that k = sqrt(x^2 - lambda^2) = t sqrt(t^2 + 2 lambda):
//   pressure  1/(6 pi^2) int k^3 f dx
//   number    1/(2 pi^2) int x k f dx
//   scalar    lambda/(2 pi^2) int k f dx
//   energy    1/(2 pi^2) int x^2 k f dx
inline double integral(Kind kind, double lambda, double nu, double alpha) {
  auto g = [=](double t) {
    const double x = lambda + t * t;
    if (t == 0.0 || x - nu > 745.0 || (alpha > 0.0 && x - nu <= 0.0)) return 0.0;
    const double k = t * std::sqrt(t * t + 2.0 * lambda);
    const double f = occupation(x - nu, alpha);
    double w = 0.0;
    switch (kind) {
      case Kind::pressure: w = k * k * k / 3.0; break;
      case Kind::number: w = x * k; break;
      case Kind::scalar: w = lambda * k; break;
      case Kind::energy: w = x * x * k; break;
    }
    return w * f * 2.0 * t / (2.0 * pi * pi);
  };
  const double edge = std::sqrt(std::max(nu - lambda, 0.0) + 2.0);
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double tol = 1e-15;
  return ts.integrate(g, 0.0, edge, tol) + es.integrate([&](double u) { return g(edge + u); }, tol);
}

// -Li_s(-e^z) = (1/Gamma(s)) int_0^inf x^{s-1} / (e^{x-z} + 1) dx, s > 0.
inline double fermi_dirac(double s, double z) {
  auto g = [=](double x) {
    if (x == 0.0 || x - z > 745.0) return 0.0;
    return std::pow(x, s - 1.0) * occupation(x - z, -1.0);
  };
  boost::math::quadrature::tanh_sinh<double> ts;
  boost::math::quadrature::exp_sinh<double> es;
  const double edge = std::max(z, 0.0) + 1.0;
  const double v = ts.integrate(g, 0.0, edge, 1e-15) + es.integrate([&](double u) { return g(edge + u); }, 1e-15);
  return v / boost::math::tgamma(s);
}

// Li_s(x) = sum_k x^k / k^s for |x| < 1, summed in long double.
inline double li_direct(double s, double x) {
  long double sum = 0.0L, xk = 1.0L;
  int small = 0;
  for (int k = 1; k < 2000000; ++k) {
    xk *= x;
    const long double term = xk / std::pow(static_cast<long double>(k), static_cast<long double>(s));
    sum += term;
    if (std::fabs(term) < 1e-21L * std::fabs(sum) && k > 3) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  return static_cast<double>(sum);
}

// Li_{-n}(x) = x A_n(x) / (1 - x)^{n+1} with the Eulerian polynomial A_n.
inline double li_eulerian(int n, double x) {
  std::vector<long double> a{1.0L};
  for (int k = 1; k <= n; ++k) {
    std::vector<long double> b(static_cast<std::size_t>(k), 0.0L);
    for (int j = 0; j < k; ++j) {
      const long double hi = j < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(j)] : 0.0L;
      const long double lo = j > 0 ? a[static_cast<std::size_t>(j - 1)] : 0.0L;
      b[static_cast<std::size_t>(j)] = (j + 1) * hi + (k - j) * lo;
    }
    a = b;
  }
  long double poly = 0.0L;
  for (std::size_t j = a.size(); j-- > 0;) poly = poly * x + a[j];
  return static_cast<double>(x * poly / std::pow(1.0L - x, n + 1));
}

// Dirichlet eta from Boost's zeta, any real s != 1.
inline double eta(double s) {
  if (s == 1.0) return std::numbers::ln2;
  return -std::expm1((1.0 - s) * std::numbers::ln2) * boost::math::zeta(s);
}

// Li_s(-e^z) = -sum_k eta(s-k) z^k / k!, |z| < pi, with eta from Boost.
inline double li_minus_taylor(double s, double z) {
  if (std::abs(z) >= 2.0) throw std::domain_error("li_minus_taylor needs |z| < 2");
  long double sum = 0.0L, zk = 1.0L;
  int small = 0;
  for (int k = 0; k < 150; ++k) {
    if (k > 0) zk *= z / k;
    const long double term = eta(s - k) * zk;
    sum += term;
    if (std::fabs(term) < 1e-20L * std::fabs(sum)) {
      if (++small == 3) break;
    } else {
      small = 0;
    }
  }
  return static_cast<double>(-sum);
}

}  // namespace ref

#endif  // RELGAS_TESTS_ORACLES_HPP
