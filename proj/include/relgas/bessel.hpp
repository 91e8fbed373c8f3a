// Modified Bessel functions K1, K2 and the Bessel-series (low-temperature)
// representation of the ideal-gas integrals, plus the nonrelativistic series.
#ifndef RELGAS_BESSEL_HPP
#define RELGAS_BESSEL_HPP

#include "relgas/core.hpp"

namespace relgas::bessel {

struct BesselSeriesParams {
  double lambda = 0.0;
  double nu = 0.0;
  Statistics stat = Statistics::fermion;
  SeriesConfig cfg{};
};

/// Upper end of the small-argument series band.
inline constexpr double z_cross = 2.0;
/// Lower end of the asymptotic band. Between the two, K_n is computed by the
/// trapezoidal rule on its integral representation.
inline constexpr double z_asym = 20.0;
/// The nonrelativistic series is only offered for lambda >= lambda_nr.
inline constexpr double lambda_nr = 10.0;

/// K2(z) from the ascending series with the logarithmic terms.
EvalOutcome k2_small(double z, const SeriesConfig& cfg = {});
/// K2(z) from the large-z asymptotic series, truncated at its smallest term.
EvalOutcome k2_asym(double z, const SeriesConfig& cfg = {});
/// e^z K_n(z) for n in {1, 2} from the trapezoidal rule on
/// int_0^inf e^{-z (cosh t - 1)} cosh(n t) dt.
EvalOutcome kn_scaled_trapezoid(int n, double z);

/// K1 and K2 with automatic band selection.
double k1(double z);
double k2(double z);
/// e^z K1(z) and e^z K2(z), finite for large z.
double k1_scaled(double z);
double k2_scaled(double z);

/// I_P = lambda^2/(2 pi^2) sum_k alpha^{k+1} K2(k lambda) e^{k nu} / k^2, nu < lambda.
EvalOutcome pressure_bessel(const BesselSeriesParams& p);
/// dI_P/dnu term by term: the same sum with 1/k instead of 1/k^2.
EvalOutcome density_bessel(const BesselSeriesParams& p);
/// -dI_P/dlambda term by term: lambda^2/(2 pi^2) sum_k alpha^{k+1} K1(k lambda) e^{k nu} / k.
EvalOutcome scalar_density_bessel(const BesselSeriesParams& p);

/// Nonrelativistic series in 1/(2 lambda) with polylogarithms of e^{nu - lambda};
/// requires lambda >= lambda_nr and, for bosons, nu <= lambda.
EvalOutcome pressure_nonrel(const BesselSeriesParams& p);

}  // namespace relgas::bessel

#endif  // RELGAS_BESSEL_HPP
