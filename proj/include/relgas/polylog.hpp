// Polylogarithm Li_s(z) in real arithmetic: the defining power series and the
// small-argument, index-derivative and large-argument expansions of Li_s(+-e^z).
#ifndef RELGAS_POLYLOG_HPP
#define RELGAS_POLYLOG_HPP

#include "relgas/core.hpp"

namespace relgas::polylog {

/// Which argument family a query refers to: Li_s(e^z) or Li_s(-e^z).
enum class ExpSign { plus, minus };

struct PolylogQuery {
  double order = 0.0;
  double z = 0.0;  // exponent: the argument is +-e^z
  ExpSign sign = ExpSign::minus;
  SeriesConfig cfg{};
};

/// Fraction of the convergence radius beyond which results carry
/// Flags::near_domain_edge | Flags::degraded_accuracy.
inline constexpr double edge_fraction = 0.98;

/// sum_{k>=1} x^k / k^s for |x| < 1.
EvalOutcome li_direct(double s, double x, const SeriesConfig& cfg = {});
/// d/ds Li_s(x) = -sum x^k ln k / k^s for |x| < 1.
EvalOutcome dli_ds_direct(double s, double x, const SeriesConfig& cfg = {});

/// Li_s(e^z) = Gamma(1-s)(-z)^{s-1} + sum_k zeta(s-k) z^k/k!, non-integer s,
/// -2 pi <= z < 0 (z = 0 allowed when s > 1).
EvalOutcome li_exp_expansion(double s, double z, const SeriesConfig& cfg = {});
/// Integer-order form of the same expansion with the logarithmic term and the
/// even-zeta tail, n >= 1, -2 pi <= z < 0.
EvalOutcome li_exp_integer(int n, double z, const SeriesConfig& cfg = {});

/// Li_s(-e^z) = -sum_k eta(s-k) z^k/k!, any real s, |z| < pi.
EvalOutcome li_minus_exp(double s, double z, const SeriesConfig& cfg = {});
/// Integer-order regrouping of li_minus_exp (ln 2 term plus the even-zeta tail).
EvalOutcome li_minus_exp_integer(int n, double z, const SeriesConfig& cfg = {});

/// Li_{-2m}(e^z), 0 < |z| < 2 pi, including the pole -Gamma(2m+1)/z^{2m+1}.
EvalOutcome li_neg_even_exp(int m, double z, const SeriesConfig& cfg = {});
/// Li_{-2m}(-e^z), |z| < pi.
EvalOutcome li_neg_even_minus_exp(int m, double z, const SeriesConfig& cfg = {});

/// d/ds Li_s(e^z) at s = -2m, -2 pi < z < 0.
EvalOutcome dli_ds_neg_even_exp(int m, double z, const SeriesConfig& cfg = {});
/// d/ds Li_s(-e^z) at s = -2m, |z| < pi.
EvalOutcome dli_ds_neg_even_minus_exp(int m, double z, const SeriesConfig& cfg = {});

/// Large-z expansion Li_s(-e^z) ~ -2 sum_n eta(2n) z^{s-2n}/Gamma(s+1-2n),
/// summed up to, but not including, its smallest term, plus the exponentially
/// small part -cos(pi s) Li_s(-e^{-z}). For integer s the series terminates and
/// the result is exact. The error estimate is the first omitted term;
/// Flags::asymptotic_warning is set when it exceeds cfg.rtol * |value|.
EvalOutcome li_asymptotic(double s, double z, const SeriesConfig& cfg = {});

/// Picks a representation for Li_s(+-e^z) (direct series, small-z expansions or
/// asymptotic) and evaluates it.
EvalOutcome evaluate(const PolylogQuery& q);

/// d/ds Li_s(+-e^z) at s = -2m with the same representation choice.
EvalOutcome evaluate_dli_ds_neg_even(int m, double z, ExpSign sign, const SeriesConfig& cfg = {});

}  // namespace relgas::polylog

#endif  // RELGAS_POLYLOG_HPP
