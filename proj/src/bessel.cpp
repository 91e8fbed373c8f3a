#include "relgas/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relgas/polylog.hpp"
#include "relgas/specfun.hpp"

namespace relgas::bessel {

namespace sf = specfun;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_positive(const char* fn, double z) {
  if (!(z > 0.0)) throw DomainError(std::string(fn) + ": argument must be positive");
}

// K1(z) = 1/z + sum_k (z/2)^{2k+1}/(k!(k+1)!) [ln(z/2) - (psi(k+1)+psi(k+2))/2].
EvalOutcome k1_small(double z, const SeriesConfig& cfg) {
  const double half = 0.5 * z;
  const double lh = std::log(half);
  const double h2 = half * half;
  SeriesAccumulator acc(cfg, 1.0 / z);
  double t = half;
  for (int k = 0; !acc.done(); ++k) {
    acc.add(t * (lh - 0.5 * (sf::digamma_int(k + 1) + sf::digamma_int(k + 2))));
    t *= h2 / ((k + 1.0) * (k + 2.0));
  }
  return {acc.sum(), Method::bessel, acc.terms(), std::abs(acc.last()) + kEps / z, {}};
}

// e^z K_n(z) from the asymptotic series with optimal truncation.
EvalOutcome kn_scaled_asym(int n, double z, const SeriesConfig& cfg) {
  const double mu = n + 0.5;
  const double inv = 1.0 / (2.0 * z);
  double a = 1.0;
  double sum = 0.0;
  double omitted = 0.0;
  int j = 0;
  for (; j < cfg.max_terms; ++j) {
    const double term = a;
    const double next = a * (mu + j) * (mu - 1.0 - j) / (j + 1.0) * inv;
    sum += term;
    if (std::abs(next) >= std::abs(term) || std::abs(next) <= cfg.rtol * std::abs(sum)) {
      omitted = std::abs(next);
      ++j;
      break;
    }
    a = next;
  }
  const double pref = std::sqrt(sf::pi * inv);
  EvalOutcome out{pref * sum, Method::asymptotic, j, pref * omitted, {}};
  if (out.error_estimate > 1e-14 * std::abs(out.value)) out.flags.set(Flags::asymptotic_warning);
  return out;
}

double scaled(int n, double z) {
  require_positive(n == 1 ? "k1" : "k2", z);
  if (z <= z_cross) {
    const double v = n == 1 ? k1_small(z, {}).value : k2_small(z).value;
    return std::exp(z) * v;
  }
  if (z < z_asym) return kn_scaled_trapezoid(n, z).value;
  return kn_scaled_asym(n, z, {}).value;
}

struct Kernel {
  int order;  // Bessel index n of K_n
  int power;  // k^power in the denominator
};

EvalOutcome bessel_sum(const BesselSeriesParams& p, Kernel kern, const char* name) {
  if (!(p.lambda > 0.0)) {
    throw DomainError(std::string(name) + ": Bessel series requires lambda > 0");
  }
  const double gap = p.lambda - p.nu;
  if (!(gap > 0.0)) {
    throw DomainError(std::string(name) + ": Bessel series requires nu < lambda");
  }
  const double a = alpha(p.stat);
  const int n_max = static_cast<int>(std::min({std::ceil(36.0 / gap), 1.0e4,
                                               static_cast<double>(p.cfg.max_terms)}));
  SeriesAccumulator acc(p.cfg);
  double sign = 1.0;  // alpha^{k+1}
  int k = 1;
  for (; k <= n_max && !acc.converged(); ++k) {
    const double z = k * p.lambda;
    const double kern_value = scaled(kern.order, z) * std::exp(-k * gap);
    acc.add(sign * kern_value / std::pow(static_cast<double>(k), kern.power));
    sign *= a;
  }
  const double pref = p.lambda * p.lambda / (2.0 * sf::pi * sf::pi);
  const double ratio = std::exp(-gap);
  EvalOutcome out;
  out.value = pref * acc.sum();
  out.method = Method::bessel;
  out.terms_used = acc.terms();
  const double tail = std::abs(acc.last()) * ratio / (1.0 - ratio);
  out.error_estimate = pref * (tail + 8.0 * kEps * std::abs(acc.sum()));
  if (gap < 0.1) out.flags.set(Flags::slow_convergence);
  if (pref * tail > std::max(p.cfg.rtol, 1e-15) * std::abs(out.value)) {
    out.flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  }
  return out;
}

}  // namespace

EvalOutcome k2_small(double z, const SeriesConfig& cfg) {
  require_positive("k2_small", z);
  const double half = 0.5 * z;
  const double lh = std::log(half);
  const double h2 = half * half;
  SeriesAccumulator acc(cfg, 2.0 / (z * z) - 0.5);
  double t = 0.5 * h2;  // (z/2)^{2n+2}/(n!(n+2)!) at n = 0
  for (int n = 0; !acc.done(); ++n) {
    acc.add(t * (0.5 * (sf::digamma_int(n + 1) + sf::digamma_int(n + 3)) - lh));
    t *= h2 / ((n + 1.0) * (n + 3.0));
  }
  EvalOutcome out{acc.sum(), Method::bessel, acc.terms(),
                  std::abs(acc.last()) + 4.0 * kEps * (2.0 / (z * z)), {}};
  if (z > z_cross) out.flags.set(Flags::degraded_accuracy);
  return out;
}

EvalOutcome k2_asym(double z, const SeriesConfig& cfg) {
  require_positive("k2_asym", z);
  EvalOutcome out = kn_scaled_asym(2, z, cfg);
  const double e = std::exp(-z);
  out.value *= e;
  out.error_estimate *= e;
  return out;
}

EvalOutcome kn_scaled_trapezoid(int n, double z) {
  require_positive("kn_scaled_trapezoid", z);
  if (n < 0) throw DomainError("kn_scaled_trapezoid: order must be nonnegative");
  auto f = [&](double t) { return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(n * t); };
  const double h = 0.125;
  double coarse = 0.5 * f(0.0);
  double fine_extra = 0.0;
  int steps = 0;
  for (int j = 1;; ++j) {
    const double t = j * h;
    const double mid = f(t - 0.5 * h);
    const double node = f(t);
    coarse += node;
    fine_extra += mid;
    ++steps;
    if (node < 1e-18 * coarse && mid < 1e-18 * coarse) break;
    if (steps > 4000) break;
  }
  const double t_coarse = h * coarse;
  const double t_fine = 0.5 * (t_coarse + h * fine_extra);
  return {t_fine, Method::quadrature, 2 * steps,
          std::abs(t_fine - t_coarse) + 4.0 * kEps * t_fine, {}};
}

double k1(double z) {
  require_positive("k1", z);
  return z <= z_cross ? k1_small(z, {}).value : std::exp(-z) * scaled(1, z);
}

double k2(double z) {
  require_positive("k2", z);
  return z <= z_cross ? k2_small(z).value : std::exp(-z) * scaled(2, z);
}

double k1_scaled(double z) { return scaled(1, z); }
double k2_scaled(double z) { return scaled(2, z); }

EvalOutcome pressure_bessel(const BesselSeriesParams& p) {
  return bessel_sum(p, {2, 2}, "pressure_bessel");
}

EvalOutcome density_bessel(const BesselSeriesParams& p) {
  return bessel_sum(p, {2, 1}, "density_bessel");
}

EvalOutcome scalar_density_bessel(const BesselSeriesParams& p) {
  return bessel_sum(p, {1, 1}, "scalar_density_bessel");
}

EvalOutcome pressure_nonrel(const BesselSeriesParams& p) {
  if (!(p.lambda >= lambda_nr)) {
    throw DomainError("pressure_nonrel: requires lambda >= " + std::to_string(lambda_nr));
  }
  const double nu_t = p.nu - p.lambda;
  if (p.stat == Statistics::boson && nu_t > 0.0) {
    throw DomainError("pressure_nonrel: no low-temperature expansion for bosons with mu > m");
  }
  const double a = alpha(p.stat);
  const polylog::ExpSign sign =
      p.stat == Statistics::fermion ? polylog::ExpSign::minus : polylog::ExpSign::plus;
  const double inv = 1.0 / (2.0 * p.lambda);
  double coeff = 1.0;  // Gamma(5/2+n)/(Gamma(5/2-n) n!)
  double power = 1.0;  // (2 lambda)^{-n}
  double sum = 0.0;
  double prev = 0.0;
  double omitted = 0.0;
  double li_err = 0.0;
  int small_run = 0;
  int n = 0;
  const int n_cap = std::min(p.cfg.max_terms, 400);
  for (; n < n_cap; ++n) {
    const EvalOutcome li = polylog::evaluate({n + 2.5, nu_t, sign, p.cfg});
    const double term = coeff * power * li.value;
    if (n > 1 && std::abs(term) > std::abs(prev)) {
      omitted = std::abs(term);
      break;
    }
    sum += term;
    li_err += std::abs(coeff * power) * li.error_estimate;
    prev = term;
    if (std::abs(term) <= p.cfg.rtol * std::abs(sum)) {
      if (++small_run >= p.cfg.consecutive_small) {
        omitted = std::abs(term);
        ++n;
        break;
      }
    } else {
      small_run = 0;
    }
    coeff *= (2.5 + n) * (1.5 - n) / (n + 1.0);
    power *= inv;
  }
  const double pref = a * std::pow(p.lambda / (2.0 * sf::pi), 1.5);
  EvalOutcome out;
  out.value = pref * sum;
  out.method = Method::nonrelativistic;
  out.terms_used = n;
  out.error_estimate = std::abs(pref) * (omitted + li_err + 4.0 * kEps * std::abs(sum));
  if (out.error_estimate > std::max(p.cfg.rtol, 1e-15) * std::abs(out.value)) {
    out.flags.set(Flags::asymptotic_warning);
  }
  return out;
}

}  // namespace relgas::bessel
