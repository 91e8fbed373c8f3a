#include "relgas/eos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "relgas/bessel.hpp"
#include "relgas/hightemp.hpp"
#include "relgas/specfun.hpp"

namespace relgas::eos {

namespace {

constexpr double kEps = 2.220446049250313e-16;

EvalOutcome entropy_from(const EvalOutcome& p, const EvalOutcome& n, const EvalOutcome& sc, double lambda,
                         double nu) {
  EvalOutcome s;
  s.value = 4.0 * p.value + lambda * sc.value - nu * n.value;
  s.method = p.method;
  s.terms_used = p.terms_used + n.terms_used + sc.terms_used;
  s.error_estimate = 4.0 * p.error_estimate + lambda * sc.error_estimate + std::abs(nu) * n.error_estimate +
                     4.0 * kEps * (4.0 * std::abs(p.value) + lambda * std::abs(sc.value) + std::abs(nu * n.value));
  s.flags = p.flags | n.flags | sc.flags;
  return s;
}

ReducedSet with_method(double lambda, double nu, Statistics stat, Method method, const EosConfig& cfg) {
  ReducedSet r;
  r.lambda = lambda;
  r.nu = nu;
  r.method = method;
  switch (method) {
    case Method::massless: {
      if (lambda != 0.0) throw DomainError("massless path requires mass = 0");
      const hightemp::MasslessSet m = hightemp::massless(nu, stat, cfg.series);
      r.pressure = m.pressure;
      r.density = m.density;
      r.scalar_density = m.scalar_density;
      r.entropy = m.entropy;
      return r;
    }
    case Method::high_t: {
      const hightemp::ReducedState s = hightemp::make_state(lambda, nu, stat);
      if (!hightemp::in_domain(s)) {
        throw DomainError(std::string("high_t: lambda + |nu| outside the convergence domain (< ") +
                          (stat == Statistics::fermion ? "pi" : "2 pi") + ")");
      }
      r.pressure = hightemp::pressure_ht(s, hightemp::Part::total, cfg.series);
      r.density = hightemp::density_ht(s, hightemp::Part::total, cfg.series);
      r.scalar_density = hightemp::scalar_density_ht(s, hightemp::Part::total, cfg.series);
      r.entropy = hightemp::entropy_ht(s, hightemp::Part::total, cfg.series);
      return r;
    }
    case Method::polylog_form: {
      const hightemp::ReducedState s = hightemp::make_state(lambda, nu, stat);
      r.pressure = hightemp::pressure_polylog_form(s, cfg.series);
      r.density = hightemp::density_polylog_form(s, cfg.series);
      r.scalar_density = hightemp::scalar_density_polylog_form(s, cfg.series);
      break;
    }
    case Method::bessel: {
      const bessel::BesselSeriesParams p{lambda, nu, stat, cfg.series};
      r.pressure = bessel::pressure_bessel(p);
      r.density = bessel::density_bessel(p);
      r.scalar_density = bessel::scalar_density_bessel(p);
      break;
    }
    case Method::quadrature: {
      oracle::QuadratureSpec q;
      q.rtol = std::clamp(0.01 * cfg.rtol, oracle::min_rtol, oracle::max_rtol);
      r.pressure = oracle::pressure_quad(lambda, nu, stat, q);
      r.density = oracle::number_quad(lambda, nu, stat, q);
      r.scalar_density = oracle::scalar_quad(lambda, nu, stat, q);
      break;
    }
    default:
      throw DomainError("eos: method '" + std::string(to_string(method)) + "' cannot evaluate the equation of state");
  }
  r.entropy = entropy_from(r.pressure, r.density, r.scalar_density, lambda, nu);
  return r;
}

}  // namespace

void validate(const PhysicalState& s) {
  if (!std::isfinite(s.T) || !std::isfinite(s.mu) || !std::isfinite(s.mass)) {
    throw DomainError("state: T, mu and mass must be finite");
  }
  if (!(s.T > 0.0)) throw DomainError("state: T must be > 0");
  if (!(s.mass >= 0.0)) throw DomainError("state: mass must be >= 0");
  if (s.stat == Statistics::boson && s.mu > s.mass) throw DomainError("mu exceeds mass for boson");
}

EosConfig config_from_env() {
  EosConfig cfg;
  if (const char* env = std::getenv("RELGAS_RTOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw DomainError(std::string("RELGAS_RTOL: not a positive number: '") + env + "'");
    }
    cfg.rtol = v;
  }
  return cfg;
}

double ReducedSet::relative_error() const noexcept {
  double e = 0.0;
  for (const EvalOutcome* o : {&pressure, &density, &scalar_density, &entropy}) {
    const double scale = std::max(std::abs(o->value), std::numeric_limits<double>::min());
    if (o->value != 0.0 || o->error_estimate != 0.0) e = std::max(e, o->error_estimate / scale);
  }
  return e;
}

Flags ReducedSet::flags() const noexcept {
  return pressure.flags | density.flags | scalar_density.flags | entropy.flags;
}

Method select_method(double lambda, double nu, Statistics stat) noexcept {
  if (lambda == 0.0) return Method::massless;
  const double reach = lambda + std::abs(nu);
  if (stat == Statistics::fermion) {
    if (reach <= ht_safety * specfun::pi) return Method::high_t;
  } else if (reach <= ht_safety * 2.0 * specfun::pi && std::abs(nu) <= lambda) {
    return Method::high_t;
  }
  if (nu < lambda && lambda >= bessel_lambda_min) return Method::bessel;
  return Method::quadrature;
}

ReducedSet evaluate_reduced(double lambda, double nu, Statistics stat, Method method, const EosConfig& cfg) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda) || !std::isfinite(nu)) {
    throw DomainError("eos: requires finite lambda >= 0 and finite nu");
  }
  if (stat == Statistics::boson && nu > lambda) throw DomainError("mu exceeds mass for boson");
  if (method != Method::auto_select) return with_method(lambda, nu, stat, method, cfg);
  const Method chosen = select_method(lambda, nu, stat);
  if (chosen != Method::quadrature) {
    try {
      ReducedSet r = with_method(lambda, nu, stat, chosen, cfg);
      if (r.relative_error() <= cfg.rtol) return r;
    } catch (const DomainError&) {
    }
  }
  return with_method(lambda, nu, stat, Method::quadrature, cfg);
}

ThermoSet evaluate(const PhysicalState& state, Method method, const EosConfig& cfg) {
  validate(state);
  const double T = state.T;
  ThermoSet t;
  t.state = state;
  t.reduced = evaluate_reduced(state.mass / T, state.mu / T, state.stat, method, cfg);
  const ReducedSet& r = t.reduced;
  const double T3 = T * T * T;
  const double T4 = T3 * T;
  t.P = T4 * r.pressure.value;
  t.n = T3 * r.density.value;
  t.rho_sc = T3 * r.scalar_density.value;
  t.s = T3 * r.entropy.value;
  t.eps = T4 * (3.0 * r.pressure.value + r.lambda * r.scalar_density.value);
  return t;
}

PairSet pair_evaluate(const PhysicalState& state, Method method, const EosConfig& cfg) {
  PairSet p;
  PhysicalState anti = state;
  anti.mu = -state.mu;
  p.particle = evaluate(state, method, cfg);
  p.antiparticle = evaluate(anti, method, cfg);
  p.net_density = p.particle.n - p.antiparticle.n;
  return p;
}

}  // namespace relgas::eos
