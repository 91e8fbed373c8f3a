#include "relgas/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "relgas/bessel.hpp"
#include "relgas/eos.hpp"
#include "relgas/hightemp.hpp"
#include "relgas/oracle.hpp"
#include "relgas/polylog.hpp"
#include "relgas/specfun.hpp"

namespace relgas::verify {

namespace {

namespace ht = hightemp;
namespace pl = polylog;
using Part = ht::Part;
constexpr double kPi = specfun::pi;
constexpr Statistics kF = Statistics::fermion;
constexpr Statistics kB = Statistics::boson;

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void rel(const std::string& name, double got, double want, double tol) {
    const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
    add(name, std::abs(got - want) / scale, tol);
  }
  void rel_to(const std::string& name, double got, double want, double scale, double tol) {
    add(name, std::abs(got - want) / std::max(std::abs(scale), std::numeric_limits<double>::min()), tol);
  }
  void abs(const std::string& name, double got, double want, double tol) {
    add(name, std::abs(got - want), tol);
  }
  void truth(const std::string& name, bool ok) { add(name, ok ? 0.0 : 1.0, 0.0); }

  template <class F>
  void throws_domain(const std::string& name, F&& f) {
    bool ok = false;
    try {
      f();
    } catch (const DomainError&) {
      ok = true;
    }
    truth(name, ok);
  }

  // Runs f and records an exception as a failed check instead of aborting.
  template <class F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      add(name + " [" + e.what() + "]", std::numeric_limits<double>::infinity(), 0.0);
    }
  }

  void add(const std::string& name, double residual, double tol) {
    out_.push_back({name, residual, tol, std::isfinite(residual) && residual <= tol});
  }

 private:
  std::vector<Check>& out_;
};

std::string pt(double l, double n) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.3g,%.3g)", l, n);
  return buf;
}

std::string tag(Statistics s) { return std::string(to_string(s)); }

struct Point {
  double lambda, nu;
  Statistics stat;
};

std::vector<Point> identity_grid() {
  std::vector<Point> g;
  for (double l : {0.2, 0.5, 0.8, 1.1, 1.4}) {
    for (double n : {-1.0, -0.5, 0.0, 0.5, 1.0}) g.push_back({l, n, kF});
  }
  for (double l : {0.3, 0.8, 1.3, 1.8, 2.3}) {
    for (double f : {-0.9, -0.45, 0.0, 0.45, 0.9}) g.push_back({l, f * l, kB});
  }
  return g;
}

double five_point(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

void suite_identities(Recorder& r) {
  const double h = 1e-3;
  for (const Point& p : identity_grid()) {
    const std::string id = tag(p.stat) + pt(p.lambda, p.nu);
    r.guarded(id, [&] {
      const ht::ReducedState s = ht::make_state(p.lambda, p.nu, p.stat);
      const double P = ht::pressure_ht(s).value;
      const double n = ht::density_ht(s).value;
      const double sc = ht::scalar_density_ht(s).value;
      const double en = ht::entropy_ht(s).value;
      auto p_of_nu = [&](double v) { return ht::pressure_ht(ht::make_state(p.lambda, v, p.stat)).value; };
      auto p_of_l = [&](double l) { return ht::pressure_ht(ht::make_state(l, p.nu, p.stat)).value; };
      const double dn = five_point(p_of_nu, p.nu, h);
      const double dl = -five_point(p_of_l, p.lambda, h);
      r.rel_to("n = dP/dnu " + id, n, dn, std::max(std::abs(n), std::abs(P)), 1e-7);
      r.rel_to("sc = -dP/dlambda " + id, sc, dl, std::max(std::abs(sc), std::abs(P)), 1e-7);
      r.rel("s = 4P + lambda sc - nu n " + id, en, 4.0 * P + p.lambda * sc - p.nu * n, 1e-11);
    });
  }
  std::mt19937_64 rng(20240605);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    eos::PhysicalState st;
    st.stat = i % 2 == 0 ? kF : kB;
    st.T = std::exp(std::log(0.5) + unit(rng) * std::log(1000.0));
    st.mass = st.T * 12.0 * unit(rng);
    st.mu = st.stat == kF ? st.T * (-6.0 + 12.0 * unit(rng)) : st.mass - st.T * 6.0 * unit(rng);
    const std::string id = tag(st.stat) + " T=" + std::to_string(st.T);
    r.guarded("first law " + id, [&] {
      const eos::ThermoSet t = eos::evaluate(st);
      r.rel("first law " + id, t.eps, st.T * t.s + st.mu * t.n - t.P, 1e-10);
      r.truth("s >= 0 " + id, t.s >= 0.0);
    });
  }
}

void suite_klajn(Recorder& r) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam(0.0, 2.5), nu(-2.5, 2.5);
  int done = 0;
  while (done < 100) {
    const double l = lam(rng), n = nu(rng);
    if (l + std::abs(n) >= 0.9 * kPi) continue;
    ++done;
    r.guarded("klajn " + pt(l, n), [&] {
      const ht::ReducedState s = ht::make_state(l, n, kF);
      r.abs("klajn " + pt(l, n), ht::klajn_even_fermion(s).value, ht::pressure_ht_fermion(s, Part::even).value,
            1e-12);
    });
  }
}

void suite_parity(Recorder& r) {
  using Fn = EvalOutcome (*)(const ht::ReducedState&, Part, const SeriesConfig&);
  const std::pair<const char*, Fn> fns[] = {{"P", &ht::pressure_ht},
                                            {"n", &ht::density_ht},
                                            {"sc", &ht::scalar_density_ht},
                                            {"s", &ht::entropy_ht}};
  for (Statistics st : {kF, kB}) {
    for (double l : {0.0, 0.1, 0.7, 1.5}) {
      for (const auto& [name, fn] : fns) {
        const std::string id = tag(st) + " " + name + pt(l, 0.0);
        r.guarded(id, [&] {
          r.abs("odd at nu=0 " + id, fn(ht::make_state(l, 0.0, st), Part::odd, {}).value, 0.0, 1e-14);
        });
      }
      for (double n : {0.3, 0.7}) {
        if (st == kB && n > l) continue;
        if (l + n >= ht::convergence_radius(st)) continue;
        for (const auto& [name, fn] : fns) {
          const std::string id = tag(st) + " " + name + pt(l, n);
          r.guarded(id, [&] {
            const auto a = ht::make_state(l, n, st), b = ht::make_state(l, -n, st);
            const double ep = fn(a, Part::even, {}).value, em = fn(b, Part::even, {}).value;
            const double op = fn(a, Part::odd, {}).value, om = fn(b, Part::odd, {}).value;
            const double tot = fn(a, Part::total, {}).value;
            const double scale = std::max({std::abs(ep), std::abs(op), std::abs(tot)});
            r.rel_to("even symmetric " + id, ep, em, scale, 1e-14);
            r.rel_to("odd antisymmetric " + id, op, -om, scale, 1e-14);
            r.rel_to("even + odd = total " + id, ep + op, tot, scale, 1e-14);
          });
        }
      }
    }
  }
  for (Statistics st : {kF, kB}) {
    r.guarded("net density mu=0 " + tag(st), [&] {
      const eos::PairSet p = eos::pair_evaluate({1.0, 0.0, 0.5, st});
      r.abs("net density mu=0 " + tag(st), p.net_density, 0.0, 1e-14);
    });
  }
}

void oracle_compare(Recorder& r, double l, double n, Statistics st, bool all_three) {
  const std::string id = tag(st) + pt(l, n);
  r.guarded(id, [&] {
    const ht::ReducedState s = ht::make_state(l, n, st);
    const oracle::QuadratureSpec q{1e-13, 8000};
    r.rel("P high_t vs quadrature " + id, ht::pressure_ht(s).value, oracle::pressure_quad(l, n, st, q).value, 1e-9);
    if (!all_three) return;
    r.rel("n high_t vs quadrature " + id, ht::density_ht(s).value, oracle::number_quad(l, n, st, q).value, 1e-9);
    r.rel("sc high_t vs quadrature " + id, ht::scalar_density_ht(s).value, oracle::scalar_quad(l, n, st, q).value,
          1e-9);
  });
}

void suite_oracle(Recorder& r) {
  for (double l : {0.05, 0.1, 0.3, 0.5, 1.0, 1.5}) {
    for (double n : {0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0}) {
      if (l + std::abs(n) <= 0.8 * kPi) oracle_compare(r, l, n, kF, true);
    }
  }
  for (double l : {0.1, 0.5, 1.0, 2.0}) {
    for (double f : {0.0, 0.25, -0.25, 0.9, -0.9}) oracle_compare(r, l, f * l, kB, true);
  }
}

// -Li_s(-e^z) = (1/Gamma(s)) int_0^inf x^{s-1} / (e^{x-z} + 1) dx with x = t^2.
double fermi_integral(double s, double z) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  auto f = [&](double t) {
    const double x = t * t;
    const double y = x - z;
    const double occ = y > 0.0 ? std::exp(-y) / (1.0 + std::exp(-y)) : 1.0 / (1.0 + std::exp(y));
    return 2.0 * std::pow(t, 2.0 * s - 1.0) * occ;
  };
  const double top = std::sqrt(std::max(z, 0.0) + 60.0);
  double total = 0.0;
  const double mid = z > 0.0 ? std::sqrt(z) : 0.0;
  if (mid > 0.0) {
    total += GK::integrate(f, 0.0, std::max(mid - 1.0, 0.0), 15, 1e-15);
    total += GK::integrate(f, std::max(mid - 1.0, 0.0), mid + 1.0, 15, 1e-15);
    total += GK::integrate(f, mid + 1.0, top, 15, 1e-15);
  } else {
    total += GK::integrate(f, 0.0, top, 15, 1e-15);
  }
  return total * specfun::rgamma(s);
}

// Li_{-n}(x) = x A_n(x) / (1 - x)^{n+1} with the Eulerian polynomial A_n; Li_0 = x/(1-x).
double eulerian_li(int n, double x) {
  std::vector<double> a{1.0};
  for (int k = 1; k <= n; ++k) {
    std::vector<double> b(static_cast<std::size_t>(k), 0.0);
    for (int j = 0; j < k; ++j) {
      const double prev = j < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(j)] : 0.0;
      const double prev_lo = j > 0 ? a[static_cast<std::size_t>(j - 1)] : 0.0;
      b[static_cast<std::size_t>(j)] = (j + 1) * prev + (k - j) * prev_lo;
    }
    a = b;
  }
  double poly = 0.0;
  for (std::size_t j = a.size(); j-- > 0;) poly = poly * x + a[j];
  return x * poly / std::pow(1.0 - x, n + 1);
}

void suite_polylog(Recorder& r) {
  // Small-z expansion of Li_s(e^z) against the direct series.
  r.guarded("robinson", [&] {
    r.rel("li_exp s=5/2 z=-0.3", pl::li_exp_expansion(2.5, -0.3).value, pl::li_direct(2.5, std::exp(-0.3)).value, 1e-12);
    r.rel("li_exp s=3/2 z=-1", pl::li_exp_expansion(1.5, -1.0).value, pl::li_direct(1.5, std::exp(-1.0)).value, 1e-12);
    r.rel("li_exp_int n=4 z=-0.5", pl::li_exp_integer(4, -0.5).value, pl::li_direct(4.0, std::exp(-0.5)).value, 1e-12);
    r.rel("li_exp_int n=1 z=-0.5", pl::li_exp_integer(1, -0.5).value, -std::log1p(-std::exp(-0.5)), 1e-12);
    const double ze = -2.0 * kPi + 0.1;
    r.rel("li_exp_int n=2 z=-2pi+0.1", pl::li_exp_integer(2, ze).value, pl::li_direct(2.0, std::exp(ze)).value, 1e-9);
  });
  // Expansion of Li_s(-e^z).
  r.guarded("wood", [&] {
    const double eta4 = 7.0 * std::pow(kPi, 4) / 720.0;
    r.rel("li_minus_exp s=4 z=0", pl::li_minus_exp(4.0, 0.0).value, -eta4, 1e-13);
    r.rel("li_minus_exp s=4 z=0.8 vs quadrature", -pl::li_minus_exp(4.0, 0.8).value, fermi_integral(4.0, 0.8), 1e-11);
    for (double s : {-1.5, 0.5, 2.5, 3.0, 4.7}) {
      r.rel("li_minus_exp s=" + std::to_string(s) + " z=-0.5", pl::li_minus_exp(s, -0.5).value,
            pl::li_direct(s, -std::exp(-0.5)).value, 1e-12);
    }
    for (int n : {1, 2, 3, 4, 5}) {
      for (double z : {-2.0, 0.4, 2.5}) {
        r.rel("li_minus_exp_int = li_minus_exp n=" + std::to_string(n) + " z=" + std::to_string(z), pl::li_minus_exp_integer(n, z).value,
              pl::li_minus_exp(n, z).value, 1e-13);
      }
    }
    for (double s : {2.0, 2.5, 3.0, 4.0}) {
      r.rel("Li_s(-1) = -eta(s) s=" + std::to_string(s), pl::li_minus_exp(s, 0.0).value, -specfun::eta(s), 1e-13);
    }
  });
  // Negative even orders.
  r.guarded("neg even", [&] {
    r.abs("li_neg_even_minus_exp m=0 z=0", pl::li_neg_even_minus_exp(0, 0.0).value, -0.5, 1e-15);
    r.abs("li_neg_even_minus_exp m=1 z=0", pl::li_neg_even_minus_exp(1, 0.0).value, 0.0, 1e-15);
    for (int mm : {0, 1, 2, 3}) {
      for (double z : {-0.3, -1.5, -2.5}) {
        r.rel("li_neg_even_exp m=" + std::to_string(mm) + " z=" + std::to_string(z), pl::li_neg_even_exp(mm, z).value,
              pl::li_direct(-2.0 * mm, std::exp(z)).value, 1e-12);
      }
    }
    for (int mm : {0, 1, 2}) {
      for (double z : {-2.5, -1.5, -0.3, 0.3, 1.5}) {
        r.rel("li_neg_even_minus_exp m=" + std::to_string(mm) + " z=" + std::to_string(z), pl::li_neg_even_minus_exp(mm, z).value,
              eulerian_li(2 * mm, -std::exp(z)), 1e-11);
      }
    }
  });
  // Index derivatives against central differences in s.
  const double hs = 1e-4;
  for (int mm : {0, 1, 2}) {
    for (double z : {0.2, -0.2, 0.5, -0.5}) {
      const std::string id = "m=" + std::to_string(mm) + " z=" + std::to_string(z);
      r.guarded("dli_minus_exp " + id, [&] {
        const double s = -2.0 * mm;
        const double fd = (pl::li_minus_exp(s + hs, z).value - pl::li_minus_exp(s - hs, z).value) / (2.0 * hs);
        const double v = pl::dli_ds_neg_even_minus_exp(mm, z).value;
        r.rel_to("dli_minus_exp vs FD " + id, v, fd, std::max(std::abs(v), 1.0), 1e-7);
      });
      if (z < 0.0) {
        r.guarded("dli_exp " + id, [&] {
          const double s = -2.0 * mm;
          const double fd =
              (pl::li_exp_expansion(s + hs, z).value - pl::li_exp_expansion(s - hs, z).value) / (2.0 * hs);
          const double v = pl::dli_ds_neg_even_exp(mm, z).value;
          r.rel_to("dli_exp vs FD " + id, v, fd, std::max(std::abs(v), 1.0), 1e-7);
        });
      }
    }
  }
  // Large-argument expansion against quadrature.
  for (double s : {2.0, 2.5, 3.0, 3.5, 4.0}) {
    for (double z : {15.0, 20.0, 25.0}) {
      const std::string id = "s=" + std::to_string(s) + " z=" + std::to_string(z);
      r.guarded("li_asym " + id, [&] {
        const double v = pl::li_asymptotic(s, z).value;
        r.rel("li_asym vs quadrature " + id, -v, fermi_integral(s, z), 1e-10);
      });
    }
  }
}

void suite_bessel(Recorder& r) {
  const oracle::QuadratureSpec q{1e-13, 8000};
  for (double l : {2.0, 5.0, 10.0, 20.0}) {
    for (double n : {0.0, 0.5 * l}) {
      for (Statistics st : {kF, kB}) {
        const std::string id = tag(st) + pt(l, n);
        r.guarded(id, [&] {
          const bessel::BesselSeriesParams p{l, n, st, {}};
          r.rel("P bessel vs quadrature " + id, bessel::pressure_bessel(p).value, oracle::pressure_quad(l, n, st, q).value,
                1e-10);
          r.rel("n bessel vs quadrature " + id, bessel::density_bessel(p).value, oracle::number_quad(l, n, st, q).value,
                1e-10);
          r.rel("sc bessel vs quadrature " + id, bessel::scalar_density_bessel(p).value,
                oracle::scalar_quad(l, n, st, q).value, 1e-10);
        });
      }
    }
  }
  for (Statistics st : {kF, kB}) {
    for (double n : {0.0, 10.0, 19.0}) {
      const std::string id = tag(st) + pt(20.0, n);
      r.guarded(id, [&] {
        const bessel::BesselSeriesParams p{20.0, n, st, {}};
        r.rel("nonrel vs bessel " + id, bessel::pressure_nonrel(p).value, bessel::pressure_bessel(p).value, 1e-8);
      });
    }
  }
}

void suite_crossrep(Recorder& r) {
  for (Statistics st : {kF, kB}) {
    const double want = st == kF ? 7.0 * kPi * kPi / 720.0 : kPi * kPi / 90.0;
    const std::string id = tag(st);
    r.guarded("massless " + id, [&] {
      const ht::ReducedState s = ht::make_state(0.0, 0.0, st);
      r.rel("massless high_t " + id, ht::pressure_ht(s).value, want, 1e-12);
      r.rel("massless polylog " + id, ht::pressure_polylog_form(s).value, want, 1e-12);
      r.rel("massless quadrature " + id, oracle::pressure_quad(0.0, 0.0, st).value, want, 1e-12);
    });
  }
  const Point pts[] = {{0.5, 0.2, kF}, {0.1, -1.0, kF}, {1.0, 0.5, kF},  {1.5, 1.0, kF},
                       {0.3, -2.0, kF}, {0.3, -0.5, kB}, {0.5, -1.5, kB}, {1.0, -2.0, kB}};
  for (const Point& p : pts) {
    const std::string id = tag(p.stat) + pt(p.lambda, p.nu);
    r.guarded(id, [&] {
      const ht::ReducedState s = ht::make_state(p.lambda, p.nu, p.stat);
      r.rel("P polylog vs high_t " + id, ht::pressure_polylog_form(s).value, ht::pressure_ht(s).value, 1e-10);
      r.rel("sc polylog vs high_t " + id, ht::scalar_density_polylog_form(s).value, ht::scalar_density_ht(s).value,
            1e-10);
      r.rel("n polylog vs high_t " + id, ht::density_polylog_form(s).value, ht::density_ht(s).value, 1e-9);
    });
  }
  // Scaling covariance of the dimensional facade.
  for (double c : {0.5, 2.0}) {
    const eos::PhysicalState a{3.0, 1.2, 2.0, kF};
    const eos::PhysicalState b{c * a.T, c * a.mu, c * a.mass, kF};
    r.guarded("scaling", [&] {
      const eos::ThermoSet ta = eos::evaluate(a), tb = eos::evaluate(b);
      r.rel("scaling P c=" + std::to_string(c), tb.P, std::pow(c, 4) * ta.P, 1e-13);
      r.rel("scaling n c=" + std::to_string(c), tb.n, std::pow(c, 3) * ta.n, 1e-13);
    });
  }
}

void suite_domain(Recorder& r) {
  const oracle::QuadratureSpec q{1e-13, 8000};
  for (double reach : {1.05, 1.25, 1.5}) {
    for (double f : {0.2, 0.5, 0.8}) {
      for (double sgn : {1.0, -1.0}) {
        const double l = f * reach * kPi;
        const double n = sgn * (1.0 - f) * reach * kPi;
        const std::string id = pt(l, n);
        r.throws_domain("high_t refuses " + id, [&] { eos::evaluate_reduced(l, n, kF, Method::high_t); });
        r.guarded("auto fallback " + id, [&] {
          const eos::ReducedSet a = eos::evaluate_reduced(l, n, kF);
          r.truth("auto avoids high_t " + id, a.method != Method::high_t);
          r.rel("auto vs quadrature " + id, a.pressure.value, oracle::pressure_quad(l, n, kF, q).value, 1e-9);
        });
      }
    }
  }
  r.throws_domain("boson mu > m", [] { eos::evaluate({1.0, 2.0, 1.0, kB}); });
  r.throws_domain("T <= 0", [] { eos::evaluate({0.0, 0.0, 1.0, kF}); });
  r.throws_domain("series outside domain", [] { ht::pressure_ht(ht::make_state(2.0, 1.5, kF)); });
}

using SuiteFn = void (*)(Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"identities", &suite_identities}, {"klajn", &suite_klajn},   {"parity", &suite_parity},
      {"oracle", &suite_oracle},         {"polylog", &suite_polylog}, {"bessel", &suite_bessel},
      {"crossrep", &suite_crossrep},     {"domain", &suite_domain},
  };
  return r;
}

}  // namespace

bool SuiteResult::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* SuiteResult::worst() const noexcept {
  const Check* w = nullptr;
  double w_ratio = 0.0;
  for (const Check& c : checks) {
    const double ratio = c.tolerance > 0.0 ? c.residual / c.tolerance : (c.residual > 0.0 ? HUGE_VAL : 0.0);
    const bool better = w == nullptr || (!c.passed && w->passed) || (c.passed == w->passed && ratio > w_ratio);
    if (better) {
      w = &c;
      w_ratio = ratio;
    }
  }
  return w;
}

double SuiteResult::max_residual() const noexcept {
  double m = 0.0;
  for (const Check& c : checks) m = std::max(m, c.residual);
  return m;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult res;
    res.name = name;
    Recorder rec(res.checks);
    const auto t0 = std::chrono::steady_clock::now();
    fn(rec);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all() {
  std::vector<SuiteResult> out;
  for (const std::string& n : suite_names()) out.push_back(run_suite(n));
  return out;
}

}  // namespace relgas::verify
