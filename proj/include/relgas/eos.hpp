// Dimensional equation of state of an ideal relativistic gas: reduced
// variables, automatic choice of evaluation path and assembly of P, n, rho_sc,
// s and epsilon. Natural units, every quantity in powers of one energy unit.
#ifndef RELGAS_EOS_HPP
#define RELGAS_EOS_HPP

#include "relgas/core.hpp"
#include "relgas/oracle.hpp"

namespace relgas::eos {

struct PhysicalState {
  double T = 1.0;
  double mu = 0.0;
  double mass = 0.0;
  Statistics stat = Statistics::fermion;
};

/// Throws DomainError unless T > 0, mass >= 0, all finite, and mu <= mass for bosons.
void validate(const PhysicalState& s);

struct EosConfig {
  /// Relative accuracy requested from every path; results of `auto` whose
  /// estimate exceeds it fall back to quadrature.
  double rtol = 1e-10;
  SeriesConfig series{};
};

/// Default configuration with rtol taken from RELGAS_RTOL when set.
EosConfig config_from_env();

/// The four dimensionless integrals at one (lambda, nu).
struct ReducedSet {
  double lambda = 0.0;
  double nu = 0.0;
  Method method = Method::auto_select;
  EvalOutcome pressure, density, scalar_density, entropy;
  /// Largest relative error estimate of the four.
  double relative_error() const noexcept;
  Flags flags() const noexcept;
};

/// Auto-selection rule, a pure function of (lambda, nu, statistics):
///   lambda = 0                                     -> massless
///   fermion, lambda + |nu| <= 0.85 pi               -> high_t
///   boson, lambda + |nu| <= 1.7 pi and |nu| <= lambda -> high_t
///   nu < lambda and lambda >= 2                     -> bessel
///   otherwise                                       -> quadrature
Method select_method(double lambda, double nu, Statistics stat) noexcept;

inline constexpr double ht_safety = 0.85;
inline constexpr double bessel_lambda_min = 2.0;

/// Evaluates the reduced set with the given method (auto_select, massless,
/// high_t, polylog_form, bessel or quadrature). Explicit methods propagate
/// their DomainError; auto falls back to quadrature.
ReducedSet evaluate_reduced(double lambda, double nu, Statistics stat, Method method = Method::auto_select,
                            const EosConfig& cfg = {});

struct ThermoSet {
  PhysicalState state;
  ReducedSet reduced;
  double P = 0.0;       // T^4 I_P
  double n = 0.0;       // T^3 I_n
  double rho_sc = 0.0;  // T^3 I_sc
  double s = 0.0;       // T^3 I_s
  double eps = 0.0;     // T^4 (3 I_P + lambda I_sc)
};

ThermoSet evaluate(const PhysicalState& state, Method method = Method::auto_select,
                   const EosConfig& cfg = {});

struct PairSet {
  ThermoSet particle, antiparticle;
  double net_density = 0.0;  // n(mu) - n(-mu)
};

/// Particle and antiparticle (mu -> -mu) sets. For bosons both need |mu| <= m.
PairSet pair_evaluate(const PhysicalState& state, Method method = Method::auto_select,
                      const EosConfig& cfg = {});

}  // namespace relgas::eos

#endif  // RELGAS_EOS_HPP
