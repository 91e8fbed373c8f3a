#include "relgas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "relgas/specfun.hpp"

namespace relgas::oracle {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

// Occupation factor written so that neither branch overflows.
double occupation(double y, Statistics stat) {
  if (y > 700.0) return 0.0;
  if (stat == Statistics::boson) return 1.0 / std::expm1(y);
  if (y > 0.0) {
    const double e = std::exp(-y);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(y));
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel panel(const auto& f, double a, double b) {
  double err = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

// Closed-form bound on int_{x_c}^inf x^p e^{-(x - nu)} dx times the largest
// occupation correction; p = 3 covers every kernel here.
double tail_bound(double x_c, double nu, Statistics stat, double scale) {
  const double y = x_c - nu;
  double g = 1.0;
  if (stat == Statistics::boson) g = 1.0 / (-std::expm1(-y));
  const double poly = x_c * x_c * x_c + 3.0 * x_c * x_c + 6.0 * x_c + 6.0;
  return scale * g * poly * std::exp(-y);
}

}  // namespace

std::string_view to_string(Integrand i) noexcept {
  switch (i) {
    case Integrand::pressure: return "pressure";
    case Integrand::number: return "number";
    case Integrand::scalar: return "scalar";
  }
  return "pressure";
}

EvalOutcome integrate(Integrand which, double lambda, double nu, Statistics stat,
                      const QuadratureSpec& spec) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda) || !std::isfinite(nu)) {
    throw DomainError("oracle: requires finite lambda >= 0 and finite nu");
  }
  if (stat == Statistics::boson && nu > lambda) {
    throw PoleError("oracle: mu exceeds mass for boson (occupation pole inside the range)");
  }
  const double rtol = std::clamp(spec.rtol, min_rtol, max_rtol);
  const double pi2 = specfun::pi * specfun::pi;
  Flags flags;
  if (stat == Statistics::boson && nu == lambda) flags.set(Flags::boson_edge);
  if (which == Integrand::scalar && lambda == 0.0) {
    return {0.0, Method::quadrature, 0, 0.0, flags};
  }

  // x = lambda + t^2 removes the square-root behaviour at the lower limit.
  const double l = lambda;
  auto f = [&](double t) {
    const double t2 = t * t;
    const double y = l + t2 - nu;
    const double occ = occupation(y, stat);
    if (occ == 0.0 || t == 0.0) return 0.0;
    const double k = t * std::sqrt(t2 + 2.0 * l);  // sqrt(x^2 - lambda^2)
    const double jac = 2.0 * t;
    switch (which) {
      case Integrand::pressure: return k * k * k * occ * jac / (6.0 * pi2);
      case Integrand::number: return (l + t2) * k * occ * jac / (2.0 * pi2);
      case Integrand::scalar: return l * k * occ * jac / (2.0 * pi2);
    }
    return 0.0;
  };

  const double x_c = lambda + std::max(window, nu + window);
  const double t_c = std::sqrt(x_c - lambda);
  std::vector<double> breaks{0.0};
  if (nu > lambda) {
    // Fermi surface and a few widths around it.
    const double t_f = std::sqrt(nu - lambda);
    for (double d : {-8.0, 0.0, 8.0}) {
      const double x = nu - lambda + d;
      if (x > 0.0 && std::sqrt(x) < t_c) breaks.push_back(std::sqrt(x));
    }
    breaks.push_back(t_f);
  } else {
    breaks.push_back(std::min(1.0, t_c));
  }
  breaks.push_back(t_c);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  std::priority_queue<Panel> queue;
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Panel p = panel(f, breaks[i], breaks[i + 1]);
    value += p.value;
    error += p.error;
    queue.push(p);
  }
  const double scale = which == Integrand::pressure ? 1.0 / (6.0 * pi2)
                       : which == Integrand::number ? 1.0 / (2.0 * pi2)
                                                    : lambda / (2.0 * pi2);
  const double tail = tail_bound(x_c, nu, stat, scale);
  const double eps = std::numeric_limits<double>::epsilon();
  int panels = static_cast<int>(queue.size());
  auto target = [&] { return std::max(rtol * std::abs(value), std::numeric_limits<double>::min()); };
  while (error + tail > target()) {
    if (panels >= spec.max_subdivisions) {
      throw ConvergenceError("oracle: " + std::string(to_string(which)) + " integral did not reach rtol " +
                             std::to_string(rtol) + " after " + std::to_string(panels) + " subdivisions");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = panel(f, worst.a, mid);
    const Panel right = panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // Re-sum from the panels so the result does not carry the running update's rounding.
  double total = 0.0, err_total = 0.0;
  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.a < b.a; });
  for (const Panel& p : all) {
    total += p.value;
    err_total += p.error;
  }
  EvalOutcome out;
  out.value = total;
  out.method = Method::quadrature;
  out.terms_used = panels;
  out.error_estimate = err_total + tail + 4.0 * eps * std::abs(total);
  out.flags = flags;
  return out;
}

EvalOutcome pressure_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec) {
  return integrate(Integrand::pressure, lambda, nu, stat, spec);
}

EvalOutcome number_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec) {
  return integrate(Integrand::number, lambda, nu, stat, spec);
}

EvalOutcome scalar_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec) {
  return integrate(Integrand::scalar, lambda, nu, stat, spec);
}

}  // namespace relgas::oracle
