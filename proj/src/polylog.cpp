#include "relgas/polylog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relgas/specfun.hpp"

namespace relgas::polylog {

namespace sf = specfun;

namespace {

constexpr double kTwoPi = 2.0 * sf::pi;

double zeta_int(int n) {
  const auto& c = sf::constants();
  if (n >= 2 && n % 2 == 0 && n / 2 <= c.k_max()) return c.zeta_even(n / 2);
  if (n >= 3 && n % 2 == 1 && (n - 1) / 2 <= c.k_max()) return c.zeta_odd((n - 1) / 2);
  return sf::zeta(static_cast<double>(n));
}

// b'(2k)/b(2k) - ln(2 pi) = psi(2k) + zeta'(2k)/zeta(2k) - ln(2 pi).
double even_bracket(int k) {
  const auto& c = sf::constants();
  if (k <= c.k_max()) return c.b_logderiv_even(k) - sf::ln_two_pi;
  const double x = 2.0 * k;
  return sf::digamma(x) + sf::zeta_derivative(x) / sf::zeta(x) - sf::ln_two_pi;
}

// ln(a!/b!) for a >= b >= 0.
// ln(a!/b!) for a >= b; short ratios are summed factor by factor, which keeps
// the absolute error small when both factorials are large.
double ln_factorial_ratio(int a, int b) {
  if (a - b > 64) return sf::ln_factorial(a) - sf::ln_factorial(b);
  double sum = 0.0;
  for (int j = b + 1; j <= a; ++j) sum += std::log(static_cast<double>(j));
  return sum;
}

// p ln|z|, with the convention 0 * ln 0 = 0.
double power_log(double z, int p) { return p == 0 ? 0.0 : p * std::log(std::abs(z)); }

double sign_of_power(double z, int p) { return (z < 0.0 && p % 2 != 0) ? -1.0 : 1.0; }

double alternating(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

Flags edge_flags(double z, double radius) {
  Flags f;
  if (std::abs(z) > edge_fraction * radius) {
    f.set(Flags::near_domain_edge).set(Flags::degraded_accuracy);
  }
  return f;
}

EvalOutcome finish(const SeriesAccumulator& acc, Method method, double ratio, Flags flags) {
  EvalOutcome out;
  out.value = acc.sum();
  out.method = method;
  out.terms_used = acc.terms();
  const double tail = ratio < 1.0 ? 1.0 / (1.0 - ratio) : 1.0;
  out.error_estimate = std::abs(acc.last()) * tail;
  out.flags = flags;
  if (!acc.converged()) out.flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  return out;
}

void require_minus_domain(const char* fn, double z) {
  if (!(std::abs(z) < sf::pi)) {
    throw DomainError(std::string(fn) + ": requires |z| < pi, got z = " + std::to_string(z));
  }
}

void require_plus_domain(const char* fn, double z, bool allow_positive) {
  if (!(std::abs(z) < kTwoPi) && !(z == -kTwoPi)) {
    throw DomainError(std::string(fn) + ": requires |z| <= 2 pi, got z = " + std::to_string(z));
  }
  if (!allow_positive && z > 0.0) {
    throw DomainError(std::string(fn) + ": requires z < 0 for a real result");
  }
}

}  // namespace

EvalOutcome li_direct(double s, double x, const SeriesConfig& cfg) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("li_direct: power series diverges for |x| >= 1 (x = " + std::to_string(x) + ")");
  }
  SeriesAccumulator acc(cfg);
  if (x == 0.0) return {0.0, Method::direct_series, 0, 0.0, {}};
  double power = 1.0;
  int k = 0;
  while (!acc.done()) {
    ++k;
    power *= x;
    acc.add(power * std::exp(-s * std::log(static_cast<double>(k))));
  }
  EvalOutcome out;
  out.value = acc.sum();
  out.method = Method::direct_series;
  out.terms_used = k;
  const double next = std::abs(acc.last() * x) *
                      std::pow(static_cast<double>(k) / (k + 1.0), s);
  if (x < 0.0 && s >= 0.0) {
    out.error_estimate = next;
  } else {
    const double ratio = std::abs(x) * std::pow((k + 2.0) / (k + 1.0), std::max(-s, 0.0));
    out.error_estimate = ratio < 1.0 ? next / (1.0 - ratio) : next;
  }
  if (!acc.converged()) out.flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  return out;
}

EvalOutcome dli_ds_direct(double s, double x, const SeriesConfig& cfg) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("dli_ds_direct: power series diverges for |x| >= 1");
  }
  SeriesAccumulator acc(cfg);
  if (x == 0.0) return {0.0, Method::direct_series, 0, 0.0, {}};
  double power = x;
  int k = 1;
  while (!acc.done()) {
    ++k;
    power *= x;
    const double lk = std::log(static_cast<double>(k));
    acc.add(-power * lk * std::exp(-s * lk));
  }
  return finish(acc, Method::direct_series, std::abs(x) * std::exp(std::max(-s, 0.0) / k), {});
}

EvalOutcome li_exp_expansion(double s, double z, const SeriesConfig& cfg) {
  if (is_integer(s) && s >= 1.0) {
    throw DomainError("li_exp_expansion: positive integer order needs the limiting form (li_exp_integer)");
  }
  require_plus_domain("li_exp_expansion", z, false);
  if (z == 0.0) {
    if (s > 1.0) return {sf::zeta(s), Method::robinson, 1, 0.0, {}};
    throw PoleError("li_exp_expansion: Li_s(1) diverges for s <= 1");
  }
  const double singular = sf::gamma(1.0 - s) * std::pow(-z, s - 1.0);
  const sf::ZetaTaylorCoefficients coeff(s, sf::ZetaTaylorCoefficients::Kind::zeta);
  SeriesAccumulator acc(cfg, singular);
  for (int k = 0; !acc.done(); ++k) acc.add(coeff.term(k, z));
  return finish(acc, Method::robinson, std::abs(z) / kTwoPi, edge_flags(z, kTwoPi));
}

EvalOutcome li_exp_integer(int n, double z, const SeriesConfig& cfg) {
  if (n < 1) throw DomainError("li_exp_integer: requires n >= 1");
  require_plus_domain("li_exp_integer", z, false);
  if (z == 0.0) {
    if (n > 1) return {zeta_int(n), Method::robinson, 1, 0.0, {}};
    throw PoleError("li_exp_integer: Li_1(1) diverges");
  }
  double finite = 0.0;
  double power = 1.0;  // z^k
  for (int k = 0; k <= n - 2; ++k) {
    finite += zeta_int(n - k) / sf::factorial(k) * power;
    power *= z;
  }
  // power == z^{n-1}
  finite += power / sf::factorial(n - 1) * (sf::digamma_int(n) + sf::euler_gamma - std::log(-z));
  finite -= power * z / (2.0 * sf::factorial(n));

  SeriesAccumulator acc(cfg, finite);
  const double w2 = (z / kTwoPi) * (z / kTwoPi);
  double wpow = 1.0;
  for (int k = 1; !acc.done(); ++k) {
    wpow *= w2;
    double denom = 1.0;  // Gamma(2k+n)/Gamma(2k)
    for (int j = 0; j < n; ++j) denom *= 2.0 * k + j;
    acc.add(2.0 * power * alternating(k) * zeta_int(2 * k) / denom * wpow);
  }
  return finish(acc, Method::robinson, w2, edge_flags(z, kTwoPi));
}

EvalOutcome li_minus_exp(double s, double z, const SeriesConfig& cfg) {
  require_minus_domain("li_minus_exp", z);
  const sf::ZetaTaylorCoefficients coeff(s, sf::ZetaTaylorCoefficients::Kind::eta);
  if (z == 0.0) return {-coeff(0), Method::wood, 1, 0.0, {}};
  SeriesAccumulator acc(cfg);
  for (int k = 0; !acc.done(); ++k) acc.add(-coeff.term(k, z));
  return finish(acc, Method::wood, std::abs(z) / sf::pi, edge_flags(z, sf::pi));
}

EvalOutcome li_minus_exp_integer(int n, double z, const SeriesConfig& cfg) {
  if (n < 1) throw DomainError("li_minus_exp_integer: requires n >= 1");
  require_minus_domain("li_minus_exp_integer", z);
  double finite = 0.0;
  double power = 1.0;
  for (int k = 0; k <= n - 2; ++k) {
    finite -= sf::eta(static_cast<double>(n - k)) / sf::factorial(k) * power;
    power *= z;
  }
  finite -= power / sf::factorial(n - 1) * sf::ln2;
  finite -= power * z / (2.0 * sf::factorial(n));

  SeriesAccumulator acc(cfg, finite);
  const double w2 = (z / sf::pi) * (z / sf::pi);
  double wpow = 1.0;
  for (int k = 1; !acc.done(); ++k) {
    wpow *= w2;
    double denom = 1.0;
    for (int j = 0; j < n; ++j) denom *= 2.0 * k + j;
    const double shrink = -std::expm1(-2.0 * k * sf::ln2);  // 1 - 2^{-2k}
    acc.add(2.0 * power * alternating(k) * shrink * zeta_int(2 * k) / denom * wpow);
  }
  return finish(acc, Method::wood, w2, edge_flags(z, sf::pi));
}

EvalOutcome li_neg_even_exp(int m, double z, const SeriesConfig& cfg) {
  if (m < 0) throw DomainError("li_neg_even_exp: requires m >= 0");
  if (z == 0.0) throw PoleError("li_neg_even_exp: pole of Li_{-2m}(e^z) at z = 0");
  require_plus_domain("li_neg_even_exp", z, true);
  const int p = 2 * m + 1;
  double base = -sign_of_power(z, p) * std::exp(sf::ln_factorial(2 * m) - power_log(z, p));
  if (m == 0) base -= 0.5;
  SeriesAccumulator acc(cfg, base);
  double abs_sum = 4.0 * std::abs(base);
  const double ln_z = std::log(std::abs(z));
  const double ln_zr = std::log(std::abs(z) / kTwoPi);
  for (int k = m + 1; !acc.done(); ++k) {
    const int q = 2 * k - 2 * m - 1;
    // q ln|z| - 2k ln(2 pi) regrouped so that the large logarithms cancel exactly.
    const double ratio = ln_factorial_ratio(2 * k - 1, 2 * k - 2 * m - 1);
    const double zpart = 2.0 * k * ln_zr - (2 * m + 1) * ln_z;
    const double log_mag = sf::ln2 + ratio + zpart;
    const double term = alternating(k) * sign_of_power(z, q) * zeta_int(2 * k) * std::exp(log_mag);
    abs_sum += std::abs(term) * (4.0 + ratio + 2.0 * k * std::abs(ln_zr) + (2 * m + 1) * std::abs(ln_z));
    acc.add(term);
  }
  EvalOutcome out = finish(acc, Method::robinson, (z / kTwoPi) * (z / kTwoPi), edge_flags(z, kTwoPi));
  out.error_estimate += std::numeric_limits<double>::epsilon() * abs_sum;
  return out;
}

EvalOutcome li_neg_even_minus_exp(int m, double z, const SeriesConfig& cfg) {
  if (m < 0) throw DomainError("li_neg_even_minus_exp: requires m >= 0");
  require_minus_domain("li_neg_even_minus_exp", z);
  const double base = m == 0 ? -0.5 : 0.0;
  if (z == 0.0) return {base, Method::wood, 1, 0.0, {}};
  SeriesAccumulator acc(cfg, base);
  double abs_sum = 4.0 * std::abs(base);
  const double ln_z = std::log(std::abs(z));
  const double ln_zr = std::log(std::abs(z) / sf::pi);
  for (int k = m + 1; !acc.done(); ++k) {
    const int q = 2 * k - 2 * m - 1;
    const double ratio = ln_factorial_ratio(2 * k - 1, 2 * k - 2 * m - 1);
    const double zpart = 2.0 * k * ln_zr - (2 * m + 1) * ln_z;
    const double log_mag = sf::ln2 + std::log1p(-std::exp2(-2.0 * k)) + ratio + zpart;
    const double term = alternating(k) * sign_of_power(z, q) * zeta_int(2 * k) * std::exp(log_mag);
    abs_sum += std::abs(term) * (4.0 + ratio + 2.0 * k * std::abs(ln_zr) + (2 * m + 1) * std::abs(ln_z));
    acc.add(term);
  }
  EvalOutcome out = finish(acc, Method::wood, (z / sf::pi) * (z / sf::pi), edge_flags(z, sf::pi));
  out.error_estimate += std::numeric_limits<double>::epsilon() * abs_sum;
  return out;
}

EvalOutcome dli_ds_neg_even_exp(int m, double z, const SeriesConfig& cfg) {
  if (m < 0) throw DomainError("dli_ds_neg_even_exp: requires m >= 0");
  require_plus_domain("dli_ds_neg_even_exp", z, false);
  if (z == 0.0) throw PoleError("dli_ds_neg_even_exp: pole at z = 0");
  const int p = 2 * m + 1;
  // Gamma(2m+1)/z^{2m+1}; z < 0 so the odd power is negative.
  const double pole = -std::exp(sf::ln_factorial(2 * m) - power_log(z, p));
  double base = pole * (sf::digamma_int(2 * m + 1) - std::log(-z));
  if (m == 0) base -= 0.5 * sf::ln_two_pi;
  SeriesAccumulator acc(cfg, base);
  const int k_first = m + (m == 0 ? 1 : 0);
  for (int k = k_first; !acc.done(); ++k) {
    double term = 0.0;
    if (k >= m + 1) {
      const int q = 2 * k - 2 * m - 1;
      const double log_mag = sf::ln2 + ln_factorial_ratio(2 * k - 1, 2 * k - 2 * m - 1) +
                             power_log(z, q) - 2.0 * k * sf::ln_two_pi;
      term -= alternating(k) * sign_of_power(z, q) * zeta_int(2 * k) * std::exp(log_mag) *
              even_bracket(k);
    }
    const int q = 2 * k - 2 * m;
    const double log_mag = -sf::ln2 + ln_factorial_ratio(2 * k, 2 * k - 2 * m) + power_log(z, q) -
                           2.0 * k * sf::ln_two_pi;
    term += alternating(k) * zeta_int(2 * k + 1) * std::exp(log_mag);
    acc.add(term);
  }
  return finish(acc, Method::robinson, (z / kTwoPi) * (z / kTwoPi), edge_flags(z, kTwoPi));
}

EvalOutcome dli_ds_neg_even_minus_exp(int m, double z, const SeriesConfig& cfg) {
  if (m < 0) throw DomainError("dli_ds_neg_even_minus_exp: requires m >= 0");
  require_minus_domain("dli_ds_neg_even_minus_exp", z);
  const double base = m == 0 ? -0.5 * std::log(0.5 * sf::pi) : 0.0;
  SeriesAccumulator acc(cfg, base);
  const int k_first = m + (m == 0 ? 1 : 0);
  for (int k = k_first; !acc.done(); ++k) {
    double term = 0.0;
    {
      const int q = 2 * k - 2 * m;
      if (z != 0.0 || q == 0) {
        const double log_mag = std::log1p(-std::exp2(-2.0 * k - 1.0)) +
                               ln_factorial_ratio(2 * k, 2 * k - 2 * m) + power_log(z, q) -
                               2.0 * k * sf::ln_pi;
        term += alternating(k) * zeta_int(2 * k + 1) * std::exp(log_mag);
      }
    }
    if (k >= m + 1 && z != 0.0) {
      const int q = 2 * k - 2 * m - 1;
      const double common = sf::ln2 + ln_factorial_ratio(2 * k - 1, 2 * k - 2 * m - 1) +
                            power_log(z, q) - 2.0 * k * sf::ln_pi;
      const double shrink = -std::expm1(-2.0 * k * sf::ln2);
      const double sgn = alternating(k) * sign_of_power(z, q) * zeta_int(2 * k) * std::exp(common);
      term -= sgn * (shrink * even_bracket(k) + sf::ln2);
    }
    acc.add(term);
  }
  return finish(acc, Method::wood, (z / sf::pi) * (z / sf::pi), edge_flags(z, sf::pi));
}

EvalOutcome li_asymptotic(double s, double z, const SeriesConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("li_asymptotic: requires z > 0");
  const double lz = std::log(z);
  double sum = 0.0;
  double prev = 0.0;
  double omitted = 0.0;
  int terms = 0;
  const bool integer_order = is_integer(s);
  const int n_limit = std::min(cfg.max_terms, 160);
  for (int n = 0; n < n_limit; ++n) {
    const double arg = s + 1.0 - 2.0 * n;
    if (integer_order && arg <= 0.0) break;  // 1/Gamma vanishes from here on
    const double eta2n = n == 0 ? 0.5 : sf::eta(2.0 * n);
    const double term = -2.0 * eta2n * std::exp((s - 2.0 * n) * lz) * sf::rgamma(arg);
    if (n > 1 && prev != 0.0 && std::abs(term) > std::abs(prev)) {
      // prev was the smallest term: the sum stops just before it.
      sum -= prev;
      --terms;
      omitted = std::abs(prev);
      break;
    }
    sum += term;
    ++terms;
    prev = term;
    if (std::abs(term) <= cfg.rtol * std::abs(sum)) {
      omitted = std::abs(term);
      break;
    }
  }
  // Exponentially small part -cos(pi s) Li_s(-e^{-z}); exact for integer s,
  // where the series above terminates.
  const double c = sf::cospi(s);
  EvalOutcome rest;
  if (c != 0.0) rest = li_direct(s, -std::exp(-z), cfg);
  EvalOutcome out;
  out.value = sum - c * rest.value;
  out.method = Method::asymptotic;
  out.terms_used = terms + rest.terms_used;
  out.error_estimate = omitted + std::abs(c) * rest.error_estimate +
                       4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  if (out.error_estimate > cfg.rtol * std::abs(out.value)) out.flags.set(Flags::asymptotic_warning);
  return out;
}

namespace {

bool is_nonpositive_even(double s) {
  return is_integer(s) && s <= 0.0 && std::fmod(-s, 2.0) == 0.0;
}

// Li_{-2m}(x) + Li_{-2m}(1/x) = -delta_{m0} for the rational negative-even orders.
EvalOutcome reflect_neg_even(int m, double x, const SeriesConfig& cfg) {
  EvalOutcome out = li_direct(-2.0 * m, x, cfg);
  out.value = -out.value - (m == 0 ? 1.0 : 0.0);
  return out;
}

// Li_{-n}(-e^z) = n! sum_j rho_j^{-n-1} cos((n+1) theta_j) over all integers j,
// where rho_j e^{i theta_j} = -z + i pi (2j - 1) are the poles' offsets, and its
// s-derivative from the same sum weighted by ln rho_j and theta_j. Conjugate
// pairs j, 1-j double the j >= 1 half; the far tail is summed by
// Euler-Maclaurin in closed form.
struct PoleSum {
  EvalOutcome value, derivative;
};

struct Polar {
  double ln_rho, theta;
};

Polar offset(double z, double j) { return {std::log(std::hypot(z, sf::pi * (2.0 * j - 1.0))), std::atan2(sf::pi * (2.0 * j - 1.0), -z)}; }

// Real parts of e^{ln_mag + i phase} and of the same times ln rho + i theta.
double re(double ln_mag, double phase) { return std::exp(ln_mag) * std::cos(phase); }
double re_log(double ln_mag, double phase, const Polar& p) {
  return std::exp(ln_mag) * (std::cos(phase) * p.ln_rho - std::sin(phase) * p.theta);
}

PoleSum neg_even_minus_pole_sum(int m, double z) {
  constexpr double bern[] = {1.0 / 6.0,  -1.0 / 30.0,      1.0 / 42.0, -1.0 / 30.0,
                             5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0};
  const int n = 2 * m;
  const double q = n + 1.0;
  const double ln_2pi = sf::ln_two_pi;
  const double half_pi = 0.5 * sf::pi;
  const int n_direct = std::max(12, static_cast<int>(std::ceil((q + 20.0) / sf::pi)));
  double s0 = 0.0, s1 = 0.0, abs0 = 0.0, abs1 = 0.0;
  for (int j = 1; j < n_direct; ++j) {
    const Polar p = offset(z, j);
    const double t0 = re(-q * p.ln_rho, -q * p.theta);
    const double t1 = re_log(-q * p.ln_rho, -q * p.theta, p);
    s0 += t0;
    s1 += t1;
    abs0 += std::exp(-q * p.ln_rho);
    abs1 += std::exp(-q * p.ln_rho) * std::hypot(p.ln_rho, p.theta);
  }
  // Tail from j = n_direct: integral, half end term, Bernoulli corrections.
  // The j-step multiplies the offset by i 2 pi, so each j-derivative adds a
  // phase pi/2 and a factor 2 pi / rho.
  const Polar p = offset(z, n_direct);
  const double lf0 = -q * p.ln_rho;
  const double ph0 = -q * p.theta;
  {
    const double ln_i = (1.0 - q) * p.ln_rho - ln_2pi - std::log(q - 1.0);
    const double ph_i = (1.0 - q) * p.theta - half_pi;
    s0 += re(ln_i, ph_i) + 0.5 * re(lf0, ph0);
    s1 += re_log(ln_i, ph_i, p) + re(ln_i, ph_i) / (q - 1.0) + 0.5 * re_log(lf0, ph0, p);
  }
  double p_r = 1.0, q_r = 0.0, fact = 1.0, last0 = 0.0, last1 = 0.0;
  for (int r = 1, k = 0; k < 8; ++r) {
    const double p_next = p_r * (-q - (r - 1));
    q_r = p_r + q_r * (-q - (r - 1));
    p_r = p_next;
    fact *= r;
    if (r % 2 == 0) continue;
    // order r = 2k+1 pairs with B_{2k+2}/(2k+2)!
    const double c = bern[k] / (fact * (r + 1));
    const double ln_mag = r * ln_2pi + (-q - r) * p.ln_rho;
    const double phase = r * half_pi + (-q - r) * p.theta;
    const double d0 = c * p_r * re(ln_mag, phase);
    const double d1 = c * (p_r * re_log(ln_mag, phase, p) + q_r * re(ln_mag, phase));
    s0 -= d0;
    s1 -= d1;
    last0 = std::abs(c * p_r) * std::exp(ln_mag);
    last1 = last0 * (std::hypot(p.ln_rho, p.theta) + std::abs(q_r / p_r));
    ++k;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double ln_nf = sf::ln_factorial(n);
  auto scaled = [&](double x) { return x == 0.0 ? 0.0 : std::copysign(std::exp(ln_nf + std::log(std::abs(x))), x); };
  const double round = (8.0 + 2.0 * q) * eps;
  const double li = scaled(2.0 * s0);
  const double li_err = scaled(2.0 * (last0 + round * abs0));
  const double psi = sf::digamma_int(n + 1);
  const double dli = -psi * li + scaled(2.0 * s1);
  const double dli_err = std::abs(psi) * li_err + scaled(2.0 * (last1 + round * abs1));
  PoleSum out;
  out.value = {li, Method::direct_series, n_direct + 8, li_err, {}};
  out.derivative = {dli, Method::direct_series, n_direct + 8, dli_err, {}};
  return out;
}

bool use_pole_sum(int m, double z) { return m >= 1 && (m >= 4 || std::abs(z) >= 1.0); }

EvalOutcome evaluate_minus(double s, double z, const SeriesConfig& cfg) {
  if (is_nonpositive_even(s)) {
    const int m = static_cast<int>(-s / 2.0);
    if (use_pole_sum(m, z)) return neg_even_minus_pole_sum(m, z).value;
    if (std::abs(z) < 1.0) return li_neg_even_minus_exp(m, z, cfg);
    if (z < 0.0) return li_direct(s, -std::exp(z), cfg);
    return reflect_neg_even(m, -std::exp(-z), cfg);
  }
  if (z < -1.0) return li_direct(s, -std::exp(z), cfg);
  if (z < sf::pi) return li_minus_exp(s, z, cfg);
  const EvalOutcome asym = li_asymptotic(s, z, cfg);
  if (asym.error_estimate <= 1e-10 * std::abs(asym.value)) return asym;
  throw DomainError("polylog: no accurate real representation of Li_s(-e^z) for pi <= z = " +
                    std::to_string(z) + " below the asymptotic regime");
}

EvalOutcome evaluate_plus(double s, double z, const SeriesConfig& cfg) {
  if (is_nonpositive_even(s) && z != 0.0) {
    const int m = static_cast<int>(-s / 2.0);
    if (std::abs(z) < 1.0) return li_neg_even_exp(m, z, cfg);
    if (z < 0.0) return li_direct(s, std::exp(z), cfg);
    return reflect_neg_even(m, std::exp(-z), cfg);
  }
  if (z > 0.0) {
    throw DomainError("polylog: Li_s(e^z) is complex for z > 0 (argument beyond the branch point)");
  }
  if (z < -1.0) return li_direct(s, std::exp(z), cfg);
  if (is_integer(s) && s >= 1.0) return li_exp_integer(static_cast<int>(s), z, cfg);
  return li_exp_expansion(s, z, cfg);
}

}  // namespace

EvalOutcome evaluate(const PolylogQuery& q) {
  return q.sign == ExpSign::minus ? evaluate_minus(q.order, q.z, q.cfg)
                                  : evaluate_plus(q.order, q.z, q.cfg);
}

EvalOutcome evaluate_dli_ds_neg_even(int m, double z, ExpSign sign, const SeriesConfig& cfg) {
  const double s = -2.0 * m;
  if (sign == ExpSign::minus) {
    if (use_pole_sum(m, z)) return neg_even_minus_pole_sum(m, z).derivative;
    if (z < -1.0) return dli_ds_direct(s, -std::exp(z), cfg);
    return dli_ds_neg_even_minus_exp(m, z, cfg);
  }
  if (z < -1.0) return dli_ds_direct(s, std::exp(z), cfg);
  return dli_ds_neg_even_exp(m, z, cfg);
}

}  // namespace relgas::polylog
