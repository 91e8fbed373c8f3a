// Adaptive Gauss-Kronrod quadrature of the defining integrals of the reduced
// pressure, number density and scalar density. Ground truth for the series and
// fallback outside every series domain.
#ifndef RELGAS_ORACLE_HPP
#define RELGAS_ORACLE_HPP

#include "relgas/core.hpp"

namespace relgas::oracle {

enum class Integrand { pressure, number, scalar };
std::string_view to_string(Integrand i) noexcept;

struct QuadratureSpec {
  /// Target relative tolerance, clamped to [min_rtol, max_rtol].
  double rtol = 1e-12;
  int max_subdivisions = 4000;
};

inline constexpr double min_rtol = 1e-14;
inline constexpr double max_rtol = 1e-6;

/// Integration window beyond lambda: the integral is cut at
/// x_c = lambda + max(window, nu + window) and the remainder bounded in
/// closed form.
inline constexpr double window = 50.0;

/// I_X(lambda, nu) for X in {pressure, number, scalar}:
///   I_P  = 1/(6 pi^2) int_lambda^inf (x^2 - lambda^2)^{3/2} f(x) dx
///   I_n  = 1/(2 pi^2) int_lambda^inf x (x^2 - lambda^2)^{1/2} f(x) dx
///   I_sc = lambda/(2 pi^2) int_lambda^inf (x^2 - lambda^2)^{1/2} f(x) dx
/// with f = 1/(e^{x-nu} - alpha); I_n = dI_P/dnu and I_sc = -dI_P/dlambda after
/// integrating by parts. Bosons with nu > lambda raise PoleError; nu == lambda
/// carries Flags::boson_edge. ConvergenceError after max_subdivisions.
EvalOutcome integrate(Integrand which, double lambda, double nu, Statistics stat,
                      const QuadratureSpec& spec = {});

EvalOutcome pressure_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec = {});
EvalOutcome number_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec = {});
EvalOutcome scalar_quad(double lambda, double nu, Statistics stat, const QuadratureSpec& spec = {});

}  // namespace relgas::oracle

#endif  // RELGAS_ORACLE_HPP
