// High-temperature (small lambda) expansions of the ideal-gas integrals for
// Fermi and Bose statistics, split into parts even and odd in nu, and the
// polylogarithm form they are resummed from.
#ifndef RELGAS_HIGHTEMP_HPP
#define RELGAS_HIGHTEMP_HPP

#include "relgas/core.hpp"

namespace relgas::hightemp {

/// Dimensionless state: lambda = m/T, nu = mu/T and r = nu/lambda (0 when
/// lambda = 0, in which case `massless` is set).
struct ReducedState {
  double lambda = 0.0;
  double nu = 0.0;
  Statistics stat = Statistics::fermion;
  double r = 0.0;
  bool massless = true;
};

/// Validates lambda >= 0, finite nu and, for bosons, nu <= lambda.
ReducedState make_state(double lambda, double nu, Statistics stat);

enum class Part { total, even, odd };
std::string_view to_string(Part p) noexcept;

/// Cap on the index of every k-sum.
inline constexpr int max_k = 160;

/// lambda + |nu| below which the series are used: pi for fermions, 2 pi for bosons.
double convergence_radius(Statistics stat) noexcept;
bool in_domain(const ReducedState& s) noexcept;

/// Parameter patterns (a, b; c) of the terminating 2F1(a, b; c; r^2) polynomials.
enum class HFKind {
  mk_mk2_half,       // (-k, -k-2; 1/2)
  omk_mk1_threehalf,  // (1-k, -k-1; 3/2)
  omk_mk1_half,       // (1-k, -k-1; 1/2)
  mk_mk1_half,        // (-k, -k-1; 1/2)
  omk_mk_threehalf,   // (1-k, -k; 3/2)
};

/// Finite sum over i of p! q! / ((p-i)! (q-i)!) (2r)^{2i} / (2i)! (c = 1/2) or
/// (2i+1)! (c = 3/2), where (a, b) = (-p, -q).
double hf_poly(HFKind kind, int k, double r);

/// Polynomials G^n_k, G^sc_k, G^s_k of the fermion density, scalar density and
/// entropy expansions.
enum class GKind { n, sc, s };
double g_poly(GKind kind, int k, double r);

/// Fermion series, lambda + |nu| < pi. The total at lambda = 0 uses the closed
/// massless form.
EvalOutcome pressure_ht_fermion(const ReducedState& s, Part part = Part::total,
                                const SeriesConfig& cfg = {});
EvalOutcome density_ht_fermion(const ReducedState& s, Part part = Part::total,
                               const SeriesConfig& cfg = {});
/// -dI_P/dlambda, i.e. lambda times the printed series for I_sc/lambda.
EvalOutcome scalar_density_ht_fermion(const ReducedState& s, Part part = Part::total,
                                      const SeriesConfig& cfg = {});
EvalOutcome entropy_ht_fermion(const ReducedState& s, Part part = Part::total,
                               const SeriesConfig& cfg = {});

/// Boson series; lambda + |nu| < 2 pi and nu <= lambda. For nu < -lambda only the
/// total is available: the (lambda^2 - nu^2)^{3/2} terms are continued through
/// arccosh and the result carries Flags::continued.
EvalOutcome pressure_ht_boson(const ReducedState& s, Part part = Part::total,
                              const SeriesConfig& cfg = {});
EvalOutcome density_ht_boson(const ReducedState& s, Part part = Part::total,
                             const SeriesConfig& cfg = {});
EvalOutcome scalar_density_ht_boson(const ReducedState& s, Part part = Part::total,
                                    const SeriesConfig& cfg = {});
EvalOutcome entropy_ht_boson(const ReducedState& s, Part part = Part::total,
                             const SeriesConfig& cfg = {});

/// Statistics dispatch of the four functions above.
EvalOutcome pressure_ht(const ReducedState& s, Part part = Part::total, const SeriesConfig& cfg = {});
EvalOutcome density_ht(const ReducedState& s, Part part = Part::total, const SeriesConfig& cfg = {});
EvalOutcome scalar_density_ht(const ReducedState& s, Part part = Part::total,
                              const SeriesConfig& cfg = {});
EvalOutcome entropy_ht(const ReducedState& s, Part part = Part::total, const SeriesConfig& cfg = {});

/// Closed massless forms: I_P = alpha Li_4(alpha e^nu)/pi^2, I_n with Li_3,
/// I_sc = 0 and I_s = 4 I_P - nu I_n.
struct MasslessSet {
  EvalOutcome pressure, density, scalar_density, entropy;
};
MasslessSet massless(double nu, Statistics stat, const SeriesConfig& cfg = {});

/// Even part of the fermion pressure from the Taylor expansion in lambda and nu
/// with polygamma coefficients psi^{(2j)}(1/2).
EvalOutcome klajn_even_fermion(const ReducedState& s, const SeriesConfig& cfg = {});

/// I_P from the polylogarithm series in (lambda/2)^{2n+2} with Li_{-2n} and
/// d/ds Li_s at s = -2n. Fermions need the expansions of Li_s(-e^nu) (nu < pi);
/// bosons need nu < 0 and lambda < |nu|.
EvalOutcome pressure_polylog_form(const ReducedState& s, const SeriesConfig& cfg = {});
/// -dI_P/dlambda of the same series, differentiated term by term.
EvalOutcome scalar_density_polylog_form(const ReducedState& s, const SeriesConfig& cfg = {});
/// dI_P/dnu by a five-point central difference of pressure_polylog_form; carries
/// Flags::finite_difference.
EvalOutcome density_polylog_form(const ReducedState& s, const SeriesConfig& cfg = {});

}  // namespace relgas::hightemp

#endif  // RELGAS_HIGHTEMP_HPP
