#include "relgas/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace relgas::specfun {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kStirlingShift = 10.0;

// B_{2j} / (2j (2j-1)), j = 1..8.
constexpr std::array<double, 8> kStirlingCoeff{
    1.0 / 12.0,         -1.0 / 360.0,  1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
};

// B_{2j} / (2j), j = 1..8.
constexpr std::array<double, 8> kDigammaCoeff{
    1.0 / 12.0,  -1.0 / 120.0,      1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0,
};

// B_{2j} / (2j)!, j = 1..8, for the Euler-Maclaurin tail of zeta.
constexpr std::array<double, 8> kEulerMaclaurinCoeff{
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
};

constexpr int kEulerMaclaurinN = 20;

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

bool is_nonpositive_integer(double x) { return x <= 0.0 && is_integer(x); }

[[noreturn]] void throw_pole(const char* fn, double x) {
  throw PoleError(std::string(fn) + ": pole at x = " + std::to_string(x));
}

// Stirling series for ln Gamma(y) without the leading terms, y >= 10.
double stirling_correction(double y) {
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double sum = 0.0;
  double p = inv;
  for (double c : kStirlingCoeff) {
    sum += c * p;
    p *= inv2;
  }
  return sum;
}

// Gamma(y) for y >= 10 as sqrt(2 pi) y^{y-1/2} e^{-y} e^{S(y)}, with the power
// split in two halves so that it does not overflow before the e^{-y} factor.
double gamma_stirling(double y) {
  const double half_power = std::pow(y, 0.5 * (y - 0.5));
  return std::sqrt(2.0 * pi) * half_power * (half_power * std::exp(-y)) *
         std::exp(stirling_correction(y));
}

double lngamma_stirling(double y) {
  return (y - 0.5) * std::log(y) - y + 0.5 * ln_two_pi + stirling_correction(y);
}

double digamma_asymptotic(double y) {
  const double inv2 = 1.0 / (y * y);
  double sum = 0.0;
  double p = inv2;
  for (double c : kDigammaCoeff) {
    sum += c * p;
    p *= inv2;
  }
  return std::log(y) - 0.5 / y - sum;
}

// Euler-Maclaurin evaluation of zeta(s) and zeta'(s); valid for s > 0, s != 1.
double zeta_euler_maclaurin(double s) {
  const double n_cut = kEulerMaclaurinN;
  const double lnN = std::log(n_cut);
  const double nps = std::exp(-s * lnN);  // N^{-s}
  double tail = 0.0;
  double poch = s;                        // s (s+1) ... (s+2j-2)
  double power = nps / n_cut;             // N^{-s-2j+1}
  for (std::size_t j = 0; j < kEulerMaclaurinCoeff.size(); ++j) {
    tail += kEulerMaclaurinCoeff[j] * poch * power;
    const double m = 2.0 * static_cast<double>(j) + 1.0;
    poch *= (s + m) * (s + m + 1.0);
    power /= n_cut * n_cut;
  }
  tail += nps * n_cut / (s - 1.0) + 0.5 * nps;
  double sum = 0.0;
  for (int n = kEulerMaclaurinN - 1; n >= 2; --n) sum += std::pow(static_cast<double>(n), -s);
  return 1.0 + (sum + tail);
}

double zeta_prime_euler_maclaurin(double s) {
  const double n_cut = kEulerMaclaurinN;
  const double lnN = std::log(n_cut);
  const double nps = std::exp(-s * lnN);
  double tail = 0.0;
  double poch = s;
  double dlog_poch = 1.0 / s;  // d/ds ln poch
  double power = nps / n_cut;
  for (std::size_t j = 0; j < kEulerMaclaurinCoeff.size(); ++j) {
    tail += kEulerMaclaurinCoeff[j] * poch * power * (dlog_poch - lnN);
    const double m = 2.0 * static_cast<double>(j) + 1.0;
    poch *= (s + m) * (s + m + 1.0);
    dlog_poch += 1.0 / (s + m) + 1.0 / (s + m + 1.0);
    power /= n_cut * n_cut;
  }
  const double sm1 = s - 1.0;
  tail += -nps * n_cut * (lnN / sm1 + 1.0 / (sm1 * sm1)) - 0.5 * lnN * nps;
  double sum = 0.0;
  for (int n = kEulerMaclaurinN - 1; n >= 2; --n) {
    const double dn = n;
    sum -= std::log(dn) * std::pow(dn, -s);
  }
  return sum + tail;
}

struct SignedLog {
  double log_abs;
  double sign;
};

// ln|zeta(x)| and its sign for x < 0 via the functional equation; sign 0 at
// the trivial zeros.
SignedLog zeta_negative_log(double x) {
  const double sp = sinpi(0.5 * x);
  if (sp == 0.0) return {-std::numeric_limits<double>::infinity(), 0.0};
  const double z1 = zeta_euler_maclaurin(1.0 - x);  // 1 - x > 1, positive
  return {ln2 + (x - 1.0) * ln_two_pi + lngamma(1.0 - x) + std::log(std::abs(sp)) + std::log(z1),
          sp > 0.0 ? 1.0 : -1.0};
}

}  // namespace

double sinpi(double x) {
  if (!std::isfinite(x)) return kNaN;
  const double n = std::round(2.0 * x);
  const double f = x - 0.5 * n;
  const auto q = static_cast<long long>(std::fmod(n, 4.0) + 4.0) % 4;
  switch (q) {
    case 0: return std::sin(pi * f);
    case 1: return std::cos(pi * f);
    case 2: return -std::sin(pi * f);
    default: return -std::cos(pi * f);
  }
}

double cospi(double x) {
  if (!std::isfinite(x)) return kNaN;
  const double n = std::round(2.0 * x);
  const double f = x - 0.5 * n;
  const auto q = static_cast<long long>(std::fmod(n, 4.0) + 4.0) % 4;
  switch (q) {
    case 0: return std::cos(pi * f);
    case 1: return -std::sin(pi * f);
    case 2: return -std::cos(pi * f);
    default: return std::sin(pi * f);
  }
}

double factorial(int n) {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    long double f = 1.0L;
    t[0] = 1.0;
    for (int i = 1; i <= 170; ++i) {
      f *= static_cast<long double>(i);
      t[i] = static_cast<double>(f);
    }
    return t;
  }();
  if (n < 0) throw_pole("factorial", n);
  if (n > 170) return std::numeric_limits<double>::infinity();
  return table[n];
}

double ln_factorial(int n) {
  if (n < 0) throw_pole("ln_factorial", n);
  if (n <= 170) return std::log(factorial(n));
  return lngamma_stirling(static_cast<double>(n) + 1.0);
}

double lngamma(double x) {
  if (!(x > 0.0)) throw DomainError("lngamma: requires x > 0");
  if (is_integer(x) && x <= 171.0) return ln_factorial(static_cast<int>(x) - 1);
  if (x >= kStirlingShift) return lngamma_stirling(x);
  double prod = 1.0;
  double y = x;
  while (y < kStirlingShift) {
    prod *= y;
    y += 1.0;
  }
  return lngamma_stirling(y) - std::log(prod);
}

double gamma(double x) {
  if (std::isnan(x)) return kNaN;
  if (is_nonpositive_integer(x)) throw_pole("gamma", x);
  if (is_integer(x) && x <= 171.0) return factorial(static_cast<int>(x) - 1);
  if (x < 0.5) return pi / (sinpi(x) * gamma(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  double prod = 1.0;
  double y = x;
  while (y < kStirlingShift) {
    prod *= y;
    y += 1.0;
  }
  return gamma_stirling(y) / prod;
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sinpi(x) * gamma(1.0 - x) / pi;
  return 1.0 / gamma(x);
}

double digamma_int(int n) {
  if (n <= 0) throw_pole("digamma", n);
  if (n > 40) return digamma(static_cast<double>(n) + 0.0);
  long double h = 0.0L;
  for (int k = n - 1; k >= 1; --k) h += 1.0L / k;
  return static_cast<double>(h - static_cast<long double>(euler_gamma));
}

double digamma(double x) {
  if (std::isnan(x)) return kNaN;
  if (is_nonpositive_integer(x)) throw_pole("digamma", x);
  if (x < 0.0) return digamma(1.0 - x) - pi * cospi(x) / sinpi(x);
  if (is_integer(x) && x <= 40.0) return digamma_int(static_cast<int>(x));
  double shift = 0.0;
  double y = x;
  while (y < kStirlingShift) {
    shift += 1.0 / y;
    y += 1.0;
  }
  return digamma_asymptotic(y) - shift;
}

double zeta(double s) {
  if (std::isnan(s)) return kNaN;
  if (s == 1.0) throw_pole("zeta", s);
  if (s == 0.0) return -0.5;
  if (s > 0.0) return zeta_euler_maclaurin(s);
  const auto [log_abs, sign] = zeta_negative_log(s);
  if (sign == 0.0) return 0.0;
  if (1.0 - s <= 170.0) {
    return 2.0 * std::pow(2.0 * pi, s - 1.0) * gamma(1.0 - s) * sinpi(0.5 * s) *
           zeta_euler_maclaurin(1.0 - s);
  }
  return sign * std::exp(log_abs);
}

double zeta_derivative(double s) {
  if (!(s > 1.0)) throw DomainError("zeta_derivative: requires s > 1");
  return zeta_prime_euler_maclaurin(s);
}

double eta(double s) {
  if (s == 1.0) return ln2;
  return -std::expm1((1.0 - s) * ln2) * zeta(s);
}

double ZetaTaylorCoefficients::operator()(int k) const { return term(k, 1.0); }

double ZetaTaylorCoefficients::term(int k, double z) const {
  const double x = s_ - k;
  const bool eta_kind = kind_ == Kind::eta;
  if (k > 0 && z == 0.0) return 0.0;
  const double log_power = k == 0 ? 0.0 : k * std::log(std::abs(z));
  const double power_sign = (z < 0.0 && k % 2 != 0) ? -1.0 : 1.0;
  if (x == 1.0) {
    if (!eta_kind) throw_pole("zeta Taylor coefficient", x);
    return power_sign * ln2 * std::exp(log_power - ln_factorial(k));
  }
  if (x >= 0.0) {
    const double v = eta_kind ? eta(x) : zeta(x);
    return power_sign * v * std::exp(log_power - ln_factorial(k));
  }
  auto [log_abs, sign] = zeta_negative_log(x);
  if (sign == 0.0) return 0.0;
  if (eta_kind) {
    // 1 - 2^{1-x} < 0 for x < 1.
    log_abs += std::log(std::expm1((1.0 - x) * ln2));
    sign = -sign;
  }
  return power_sign * sign * std::exp(log_abs + log_power - ln_factorial(k));
}

ConstantCache::ConstantCache(int k_max) : k_max_(k_max) {
  if (k_max < 1) throw RangeError("ConstantCache: k_max must be positive");
  const auto n = static_cast<std::size_t>(k_max) + 1;
  zeta_even_.resize(n);
  zeta_odd_.resize(n);
  zeta_prime_even_.resize(n);
  beta_even_.resize(n);
  beta_odd_.resize(n);
  beta_logderiv_even_.resize(n);
  b_even_.resize(n);
  b_odd_.resize(n);
  b_logderiv_even_.resize(n);
  ln_beta_even_.resize(n);
  ln_beta_odd_.resize(n);
  ln_b_even_.resize(n);
  ln_b_odd_.resize(n);
  const int n_fact = 2 * k_max + 4;
  ln_factorial_.resize(static_cast<std::size_t>(n_fact) + 1);
  digamma_int_.resize(static_cast<std::size_t>(n_fact) + 1);
  for (int i = 0; i <= n_fact; ++i) ln_factorial_[i] = specfun::ln_factorial(i);
  digamma_int_[0] = kNaN;
  for (int i = 1; i <= n_fact; ++i) digamma_int_[i] = specfun::digamma_int(i);

  for (int k = 1; k <= k_max; ++k) {
    const double two_k = 2.0 * k;
    const double ze = zeta_euler_maclaurin(two_k);
    const double zo = zeta_euler_maclaurin(two_k + 1.0);
    const double zpe = zeta_prime_euler_maclaurin(two_k);
    zeta_even_[k] = ze;
    zeta_odd_[k] = zo;
    zeta_prime_even_[k] = zpe;
    ln_b_even_[k] = ln_factorial_[2 * k - 1] + std::log(ze);
    ln_b_odd_[k] = ln_factorial_[2 * k] + std::log(zo);
    ln_beta_even_[k] = ln_b_even_[k] + std::log1p(-std::exp2(-two_k));
    ln_beta_odd_[k] = ln_b_odd_[k] + std::log1p(-std::exp2(-two_k - 1.0));
    b_even_[k] = factorial(2 * k - 1) * ze;
    b_odd_[k] = factorial(2 * k) * zo;
    beta_even_[k] = b_even_[k] * -std::expm1(-two_k * ln2);
    beta_odd_[k] = b_odd_[k] * -std::expm1(-(two_k + 1.0) * ln2);
    const double psi = digamma_int_[2 * k];
    b_logderiv_even_[k] = psi + zpe / ze;
    // ln2/(1 - 2^{-x}) - ln2 == ln2/(2^x - 1)
    beta_logderiv_even_[k] = b_logderiv_even_[k] + ln2 / std::expm1(two_k * ln2);
  }
}

void ConstantCache::check(int k) const {
  if (k < 1 || k > k_max_) {
    throw RangeError("ConstantCache: index " + std::to_string(k) + " outside 1.." +
                     std::to_string(k_max_));
  }
}

double ConstantCache::zeta_even(int k) const { check(k); return zeta_even_[k]; }
double ConstantCache::zeta_odd(int k) const { check(k); return zeta_odd_[k]; }
double ConstantCache::zeta_prime_even(int k) const { check(k); return zeta_prime_even_[k]; }
double ConstantCache::beta_even(int k) const { check(k); return beta_even_[k]; }
double ConstantCache::beta_odd(int k) const { check(k); return beta_odd_[k]; }
double ConstantCache::beta_logderiv_even(int k) const { check(k); return beta_logderiv_even_[k]; }
double ConstantCache::b_even(int k) const { check(k); return b_even_[k]; }
double ConstantCache::b_odd(int k) const { check(k); return b_odd_[k]; }
double ConstantCache::b_logderiv_even(int k) const { check(k); return b_logderiv_even_[k]; }
double ConstantCache::ln_beta_even(int k) const { check(k); return ln_beta_even_[k]; }
double ConstantCache::ln_beta_odd(int k) const { check(k); return ln_beta_odd_[k]; }
double ConstantCache::ln_b_even(int k) const { check(k); return ln_b_even_[k]; }
double ConstantCache::ln_b_odd(int k) const { check(k); return ln_b_odd_[k]; }

double ConstantCache::ln_factorial(int n) const {
  if (n < 0 || n >= static_cast<int>(ln_factorial_.size())) {
    throw RangeError("ConstantCache: ln_factorial index out of range");
  }
  return ln_factorial_[n];
}

double ConstantCache::digamma_int(int n) const {
  if (n < 1 || n >= static_cast<int>(digamma_int_.size())) {
    throw RangeError("ConstantCache: digamma index out of range");
  }
  return digamma_int_[n];
}

const ConstantCache& constants() {
  static const ConstantCache cache(default_k_max);
  return cache;
}

double zeta_even(int k) { return constants().zeta_even(k); }
double zeta_odd(int k) { return constants().zeta_odd(k); }

double zeta_prime_neg_even(int n) {
  const auto& c = constants();
  if (n < 1 || n > c.k_max()) throw RangeError("zeta_prime_neg_even: n outside cache range");
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  if (2 * n <= 170) {
    return sign * 0.5 * factorial(2 * n) * c.zeta_odd(n) / std::pow(2.0 * pi, 2.0 * n);
  }
  return sign * 0.5 * c.zeta_odd(n) * std::exp(c.ln_factorial(2 * n) - 2.0 * n * ln_two_pi);
}

double zeta_prime_at_zero() { return -0.5 * ln_two_pi; }

namespace {
// Maps an integer argument x to (k, even?) with x = 2k or x = 2k + 1.
struct CacheIndex {
  int k;
  bool even;
};

CacheIndex cache_index(const char* fn, double x, double min_x) {
  const auto& c = constants();
  if (!is_integer(x) || x < min_x || x > 2.0 * c.k_max() + 1.0) {
    throw DomainError(std::string(fn) + ": argument " + std::to_string(x) +
                      " outside the tabulated set {2..." + std::to_string(2 * c.k_max() + 1) + "}");
  }
  const auto n = static_cast<int>(x);
  return {n / 2, n % 2 == 0};
}

double logderiv_odd(double x, bool with_beta_term) {
  const double base = digamma(x) + zeta_derivative(x) / zeta(x);
  return with_beta_term ? base + ln2 / std::expm1(x * ln2) : base;
}
}  // namespace

double beta_fn(double x) {
  const auto [k, even] = cache_index("beta_fn", x, 2.0);
  return even ? constants().beta_even(k) : constants().beta_odd(k);
}

double beta_logderiv(double x) {
  const auto [k, even] = cache_index("beta_logderiv", x, 2.0);
  return even ? constants().beta_logderiv_even(k) : logderiv_odd(x, true);
}

double b_fn(double x) {
  const auto [k, even] = cache_index("b_fn", x, 2.0);
  return even ? constants().b_even(k) : constants().b_odd(k);
}

double b_logderiv(double x) {
  const auto [k, even] = cache_index("b_logderiv", x, 2.0);
  return even ? constants().b_logderiv_even(k) : logderiv_odd(x, false);
}

double polygamma_half(int l) {
  if (l < 1) throw RangeError("polygamma_half: requires l >= 1");
  const double sign = (l % 2 == 0) ? -1.0 : 1.0;
  return sign * std::exp2(l + 1.0) * beta_fn(l + 1.0);
}

double robinson_limit(int n, double z) {
  if (n < 1) throw DomainError("robinson_limit: requires n >= 1");
  if (!(z < 0.0)) throw DomainError("robinson_limit: requires z < 0 for a real logarithm");
  return std::pow(z, n - 1) / factorial(n - 1) *
         (euler_gamma + digamma_int(n) - std::log(-z));
}

}  // namespace relgas::specfun
