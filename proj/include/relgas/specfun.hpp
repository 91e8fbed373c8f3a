// Gamma, digamma, Riemann zeta and the derived beta(x) = Gamma(x) zeta(x) (1 - 2^-x)
// and b(x) = Gamma(x) zeta(x) coefficient generators of the high-temperature series.
#ifndef RELGAS_SPECFUN_HPP
#define RELGAS_SPECFUN_HPP

#include <numbers>
#include <vector>

#include "relgas/core.hpp"

namespace relgas::specfun {

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double ln2 = std::numbers::ln2;
inline constexpr double ln_pi = 1.1447298858494001741;
inline constexpr double ln_two_pi = 1.8378770664093454836;

/// sin(pi x) and cos(pi x) with exact zeros at integers / half-integers.
double sinpi(double x);
double cospi(double x);

/// Gamma function; PoleError at nonpositive integers.
double gamma(double x);
/// ln Gamma(x) for x > 0.
double lngamma(double x);
/// 1/Gamma(x); exactly 0 at the poles of Gamma.
double rgamma(double x);
double digamma(double x);

/// Riemann zeta for real s != 1. Uses Euler-Maclaurin summation for s >= 1/2
/// and the functional equation below that; returns exactly 0 at negative even
/// integers.
double zeta(double s);
/// d zeta / ds for s > 1 (differentiated Euler-Maclaurin sum).
double zeta_derivative(double s);
/// Dirichlet eta (1 - 2^{1-s}) zeta(s), with eta(1) = ln 2.
double eta(double s);

double factorial(int n);
double ln_factorial(int n);
/// psi(n) = -gamma_E + H_{n-1} for positive integers.
double digamma_int(int n);

/// Immutable table of zeta / beta / b values at integer arguments,
/// k = 1..k_max. All accessors throw RangeError outside the table.
class ConstantCache {
 public:
  explicit ConstantCache(int k_max);

  int k_max() const noexcept { return k_max_; }

  double zeta_even(int k) const;         // zeta(2k)
  double zeta_odd(int k) const;          // zeta(2k+1)
  double zeta_prime_even(int k) const;   // zeta'(2k)
  double beta_even(int k) const;         // beta(2k)
  double beta_odd(int k) const;          // beta(2k+1)
  double beta_logderiv_even(int k) const;  // beta'(2k)/beta(2k)
  double b_even(int k) const;            // b(2k)
  double b_odd(int k) const;             // b(2k+1)
  double b_logderiv_even(int k) const;   // b'(2k)/b(2k)
  double ln_beta_even(int k) const;
  double ln_beta_odd(int k) const;
  double ln_b_even(int k) const;
  double ln_b_odd(int k) const;
  /// ln n! for n = 0..2 k_max + 4.
  double ln_factorial(int n) const;
  double digamma_int(int n) const;  // psi(n), n = 1..2 k_max + 4

 private:
  void check(int k) const;

  int k_max_;
  std::vector<double> zeta_even_, zeta_odd_, zeta_prime_even_;
  std::vector<double> beta_even_, beta_odd_, beta_logderiv_even_;
  std::vector<double> b_even_, b_odd_, b_logderiv_even_;
  std::vector<double> ln_beta_even_, ln_beta_odd_, ln_b_even_, ln_b_odd_;
  std::vector<double> ln_factorial_, digamma_int_;
};

inline constexpr int default_k_max = 160;

/// Process-wide cache built on first use with default_k_max.
const ConstantCache& constants();

double zeta_even(int k);
double zeta_odd(int k);
/// zeta'(-2n) = (-1)^n Gamma(2n+1) zeta(2n+1) / (2 (2 pi)^{2n}), n >= 1.
double zeta_prime_neg_even(int n);
/// zeta'(0) = -ln(2 pi)/2.
double zeta_prime_at_zero();

/// beta(x), beta'(x)/beta(x), b(x), b'(x)/b(x) at integer x tabulated in the
/// cache (x >= 2, or x >= 1 for beta). DomainError otherwise.
double beta_fn(double x);
double beta_logderiv(double x);
double b_fn(double x);
double b_logderiv(double x);

/// psi^{(l)}(1/2) = (-1)^{l+1} 2^{l+1} beta(l+1) for l >= 1.
double polygamma_half(int l);

/// z^{n-1}/Gamma(n) [gamma_E + psi(n) - ln(-z)]: the s -> n limit of
/// Gamma(1-s)(-z)^{s-1} + zeta(s-n+1) z^{n-1}/Gamma(n). Requires z < 0.
double robinson_limit(int n, double z);

/// Generator of the Taylor coefficients zeta(s-k)/k! (or eta(s-k)/k!) for
/// k = 0, 1, 2, ... without overflowing the factorial or Gamma(1-s+k).
class ZetaTaylorCoefficients {
 public:
  enum class Kind { zeta, eta };
  ZetaTaylorCoefficients(double s, Kind kind) : s_(s), kind_(kind) {}
  /// Coefficient of z^k; PoleError if s - k == 1 for the zeta kind.
  double operator()(int k) const;
  /// Coefficient times z^k, formed in log space so that neither factor
  /// under- or overflows on its own.
  double term(int k, double z) const;

 private:
  double s_;
  Kind kind_;
};

}  // namespace relgas::specfun

#endif  // RELGAS_SPECFUN_HPP
