#include "relgas/hightemp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "relgas/polylog.hpp"
#include "relgas/specfun.hpp"

namespace relgas::hightemp {

namespace sf = specfun;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi2 = sf::pi * sf::pi;
const double kLn4Pi = std::log(4.0 * sf::pi);

// Powers of the scaled variables u = lambda/(2 pi), w = nu/pi. Every series
// term is stored as c w^a u^b [ln(lambda/kappa)], so lambda -> 0 stays
// finite and r = nu/lambda is never formed.
enum class LogKind : unsigned char { none, half, over_pi, over_four_pi };

struct Mono {
  double c;
  int a;
  int b;
  LogKind log;
};

struct Table {
  std::vector<std::vector<Mono>> groups;  // groups[0]: closed terms, groups[k]: k-th term
  int max_a = 0;
  int max_b = 0;
};

double lf(int n) { return sf::constants().ln_factorial(n); }
double psi(int n) { return sf::constants().digamma_int(n); }
double sign_k(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

class Builder {
 public:
  Builder() : groups_(max_k + 1) {}

  // Adds factor * exp(ln_mag) * lambda^A nu^B [log] to group k.
  void add(int k, double factor, double ln_mag, int A, int B, LogKind log = LogKind::none) {
    if (factor == 0.0) return;
    const double c = factor * std::exp(ln_mag + A * sf::ln_two_pi + B * sf::ln_pi);
    groups_[k][{B, A, log}] += c;
  }

  void closed(double c, int A, int B, LogKind log = LogKind::none) { add(0, c, 0.0, A, B, log); }

  void add_mono(int k, const Mono& m) { groups_[k][{m.a, m.b, m.log}] += m.c; }

  // Sum over i of lambda^{A0-2i} nu^{B0+2i} p! q! 2^{2i} / ((p-i)! (q-i)! (2i+d)!)
  // with d = 1 for c = 3/2: one 2F1(-p, -q; c; r^2) polynomial times lambda^A0 nu^B0.
  void hf(int k, double factor, double ln_pre, int A0, int B0, int p, int q, bool three_half,
          LogKind log = LogKind::none) {
    const int d = three_half ? 1 : 0;
    for (int i = 0; i <= std::min(p, q); ++i) {
      const double ln = ln_pre + lf(p) + lf(q) - lf(p - i) - lf(q - i) - lf(2 * i + d) +
                        2.0 * i * sf::ln2;
      add(k, factor, ln, A0 - 2 * i, B0 + 2 * i, log);
    }
  }

  // The braces of the odd pressure terms and their relatives:
  //   (2r)^{2k}/(2k+d)! - [s == 2] (2r)^{2k+2}/(2k+2+d)!
  //   - sum_{i<k} (2r)^{2i}/(2i+d)! (psi(k-i)+psi(k-i+s)) / ((k-i-1)! (k-i-1+s)!)
  //   + 2 ld/((k-1)! (k-1+s)!) 2F1(1-k, 1-k-s; 1/2+d; r^2)
  // times factor exp(ln_common) lambda^A nu^B.
  void brace(int k, double factor, double ln_common, double ld, int A, int B, int d, int s) {
    add(k, factor, ln_common + 2.0 * k * sf::ln2 - lf(2 * k + d), A - 2 * k, B + 2 * k);
    if (s == 2) {
      add(k, -factor, ln_common + (2.0 * k + 2.0) * sf::ln2 - lf(2 * k + 2 + d), A - 2 * k - 2,
          B + 2 * k + 2);
    }
    for (int i = 0; i < k; ++i) {
      const double f = 2.0 * ld - psi(k - i) - psi(k - i + s);
      const double ln = ln_common + 2.0 * i * sf::ln2 - lf(2 * i + d) - lf(k - i - 1) -
                        lf(k - i - 1 + s);
      add(k, factor * f, ln, A - 2 * i, B + 2 * i);
    }
  }

  Table finish() const {
    Table t;
    t.groups.resize(groups_.size());
    for (std::size_t k = 0; k < groups_.size(); ++k) {
      for (const auto& [key, c] : groups_[k]) {
        const auto [a, b, log] = key;
        if (c == 0.0) continue;
        t.groups[k].push_back({c, a, b, log});
        t.max_a = std::max(t.max_a, a);
        t.max_b = std::max(t.max_b, std::abs(b));
      }
    }
    return t;
  }

 private:
  // key (a, b, log) once in u/w form; add() files by (B, A) which is the same
  // thing since A -> b and B -> a.
  std::vector<std::map<std::tuple<int, int, LogKind>, double>> groups_;
};

Table fermion_pressure() {
  const auto& c = sf::constants();
  Builder bd;
  bd.closed(7.0 * kPi2 / 720.0, 0, 0);
  bd.closed(1.0 / 24.0, 0, 2);
  bd.closed(1.0 / (48.0 * kPi2), 0, 4);
  bd.closed(-1.0 / 48.0, 2, 0);
  bd.closed(-1.0 / (16.0 * kPi2), 2, 2);
  bd.closed(-1.0 / (32.0 * kPi2), 4, 0, LogKind::over_pi);
  bd.closed(-(sf::euler_gamma - 0.75) / (32.0 * kPi2), 4, 0);
  bd.closed(0.75 * c.zeta_odd(1) / kPi2, 0, 1);
  bd.closed(sf::ln2 / (6.0 * kPi2), 0, 3);
  bd.closed(-sf::ln2 / (4.0 * kPi2), 2, 1);
  for (int k = 1; k <= max_k; ++k) {
    const double sk = sign_k(k);
    const double lbo = c.ln_beta_odd(k);
    const double lbe = c.ln_beta_even(k);
    const double ld = c.beta_logderiv_even(k) - sf::ln_pi;
    const double l2k = 2.0 * k * sf::ln_two_pi;
    bd.hf(k, -sk, -sf::ln2 + lbo - lf(k) - lf(k + 2) - l2k - 2.0 * sf::ln_two_pi, 2 * k + 4, 0,
          k, k + 2, false);
    bd.hf(k, sk, lbe - lf(k - 1) - lf(k + 1) - 2.0 * sf::ln_pi - l2k, 2 * k + 2, 1, k - 1, k + 1,
          true, LogKind::half);
    bd.brace(k, sk, lbe - sf::ln2 - 2.0 * sf::ln_pi - l2k, ld, 2 * k + 2, 1, 1, 2);
  }
  return bd.finish();
}

Table fermion_density() {
  const auto& c = sf::constants();
  Builder bd;
  bd.closed(0.75 * c.zeta_odd(1) / kPi2, 0, 0);
  bd.closed(sf::ln2 / (2.0 * kPi2), 0, 2);
  bd.closed(-sf::ln2 / (4.0 * kPi2), 2, 0);
  bd.closed(1.0 / 12.0, 0, 1);
  bd.closed(1.0 / (12.0 * kPi2), 0, 3);
  bd.closed(-1.0 / (8.0 * kPi2), 2, 1);
  for (int k = 1; k <= max_k; ++k) {
    const double sk = sign_k(k);
    const double lbo = c.ln_beta_odd(k);
    const double lbe = c.ln_beta_even(k);
    const double ld = c.beta_logderiv_even(k) - sf::ln_pi;
    const double l2k2 = (2.0 * k + 2.0) * sf::ln_two_pi;
    bd.hf(k, sk, 2.0 * sf::ln2 + lbe - lf(k - 1) - lf(k + 1) - l2k2, 2 * k + 2, 0, k - 1, k + 1,
          false, LogKind::half);
    bd.brace(k, sk, sf::ln2 + lbe - l2k2, ld, 2 * k + 2, 0, 0, 2);
    bd.hf(k, -sk, sf::ln2 + lbo - lf(k - 1) - lf(k + 1) - l2k2, 2 * k + 2, 1, k - 1, k + 1, true);
  }
  return bd.finish();
}

Table fermion_scalar() {
  const auto& c = sf::constants();
  Builder bd;
  bd.closed(1.0 / 24.0, 1, 0);
  bd.closed(1.0 / (8.0 * kPi2), 1, 2);
  bd.closed(1.0 / (8.0 * kPi2), 3, 0, LogKind::over_pi);
  bd.closed((sf::euler_gamma - 0.5) / (8.0 * kPi2), 3, 0);
  bd.closed(sf::ln2 / (2.0 * kPi2), 1, 1);
  for (int k = 1; k <= max_k; ++k) {
    const double sk = sign_k(k);
    const double lbo = c.ln_beta_odd(k);
    const double lbe = c.ln_beta_even(k);
    const double ld = c.beta_logderiv_even(k) - sf::ln_pi;
    const double l2k = 2.0 * k * sf::ln_two_pi;
    bd.hf(k, sk, lbo - lf(k) - lf(k + 1) - l2k - 2.0 * sf::ln_two_pi, 2 * k + 3, 0, k, k + 1,
          false);
    bd.hf(k, -sk, sf::ln2 + lbe - lf(k - 1) - lf(k) - 2.0 * sf::ln_pi - l2k, 2 * k + 1, 1, k - 1,
          k, true, LogKind::half);
    bd.brace(k, -sk, lbe - 2.0 * sf::ln_pi - l2k, ld, 2 * k + 1, 1, 1, 1);
  }
  return bd.finish();
}

Table fermion_entropy() {
  const auto& c = sf::constants();
  Builder bd;
  bd.closed(7.0 * kPi2 / 180.0, 0, 0);
  bd.closed(1.0 / 12.0, 0, 2);
  bd.closed(-1.0 / 24.0, 2, 0);
  bd.closed(1.0 / (32.0 * kPi2), 4, 0);
  bd.closed(2.25 * c.zeta_odd(1) / kPi2, 0, 1);
  bd.closed(-sf::ln2 / (4.0 * kPi2), 2, 1);
  bd.closed(sf::ln2 / (6.0 * kPi2), 0, 3);
  for (int k = 1; k <= max_k; ++k) {
    const double sk = sign_k(k);
    const double lbo = c.ln_beta_odd(k);
    const double lbe = c.ln_beta_even(k);
    const double lodd = std::log(2.0 * k - 1.0);
    const double ld = c.beta_logderiv_even(k) + 1.0 / (2.0 * k - 1.0) - sf::ln_pi;
    const double l2k = 2.0 * k * sf::ln_two_pi;
    bd.hf(k, sk, lbo - lf(k - 1) - lf(k + 2) - l2k - 2.0 * sf::ln_two_pi, 2 * k + 4, 0, k, k + 2,
          false);
    bd.hf(k, -sk, lodd + lbe - lf(k - 1) - lf(k + 1) - 2.0 * sf::ln_pi - l2k, 2 * k + 2, 1, k - 1,
          k + 1, true, LogKind::half);
    bd.brace(k, -sk, lodd + lbe - sf::ln2 - 2.0 * sf::ln_pi - l2k, ld, 2 * k + 2, 1, 1, 2);
  }
  return bd.finish();
}

Table boson_pressure() {
  const auto& c = sf::constants();
  Builder bd;
  bd.closed(kPi2 / 90.0, 0, 0);
  bd.closed(1.0 / 12.0, 0, 2);
  bd.closed(-1.0 / (48.0 * kPi2), 0, 4);
  bd.closed(-1.0 / 24.0, 2, 0);
  bd.closed(1.0 / (16.0 * kPi2), 2, 2);
  bd.closed(1.0 / (32.0 * kPi2), 4, 0, LogKind::over_four_pi);
  bd.closed((sf::euler_gamma - 0.75) / (32.0 * kPi2), 4, 0);
  bd.closed(c.zeta_odd(1) / kPi2, 0, 1);
  bd.closed(-7.0 / (24.0 * kPi2), 2, 1);
  bd.closed(11.0 / (36.0 * kPi2), 0, 3);
  bd.closed(1.0 / (4.0 * kPi2), 2, 1, LogKind::half);
  bd.closed(-1.0 / (6.0 * kPi2), 0, 3, LogKind::half);
  for (int k = 1; k <= max_k; ++k) {
    const double sk = sign_k(k);
    const double lbo = c.ln_b_odd(k);
    const double lbe = c.ln_b_even(k);
    const double ld = c.b_logderiv_even(k) - sf::ln_two_pi;
    const double l2k = 2.0 * k * kLn4Pi;
    bd.hf(k, sk, lbo - lf(k) - lf(k + 2) - l2k - 2.0 * kLn4Pi, 2 * k + 4, 0, k, k + 2, false);
    bd.hf(k, -sk, lbe - lf(k - 1) - lf(k + 1) - 2.0 * sf::ln_pi - l2k, 2 * k + 2, 1, k - 1, k + 1,
          true, LogKind::half);
    bd.brace(k, -sk, lbe - sf::ln2 - 2.0 * sf::ln_pi - l2k, ld, 2 * k + 2, 1, 1, 2);
  }
  return bd.finish();
}

enum class Derivative { nu, minus_lambda, entropy };

// Term-wise derivative of a pressure table, in the u/w variables.
Table derive(const Table& p, Derivative d) {
  Builder bd;
  for (std::size_t k = 0; k < p.groups.size(); ++k) {
    for (const Mono& m : p.groups[k]) {
      const int kk = static_cast<int>(k);
      switch (d) {
        case Derivative::nu:
          if (m.a > 0) bd.add_mono(kk, {m.c * m.a / sf::pi, m.a - 1, m.b, m.log});
          break;
        case Derivative::minus_lambda:
          if (m.b != 0) bd.add_mono(kk, {-m.c * m.b / (2.0 * sf::pi), m.a, m.b - 1, m.log});
          if (m.log != LogKind::none) {
            bd.add_mono(kk, {-m.c / (2.0 * sf::pi), m.a, m.b - 1, LogKind::none});
          }
          break;
        case Derivative::entropy:
          // 4 I_P + lambda I_sc - nu I_n on a homogeneous monomial.
          bd.add_mono(kk, {m.c * (4 - m.a - m.b), m.a, m.b, m.log});
          if (m.log != LogKind::none) bd.add_mono(kk, {-m.c, m.a, m.b, LogKind::none});
          break;
      }
    }
  }
  Table t = bd.finish();
  return t;
}

enum class TableId {
  fermion_p,
  fermion_n,
  fermion_sc,
  fermion_s,
  boson_p,
  boson_n,
  boson_sc,
  boson_s,
};

const Table& table(TableId id) {
  static const std::vector<Table> tables = [] {
    std::vector<Table> v;
    v.push_back(fermion_pressure());
    v.push_back(fermion_density());
    v.push_back(fermion_scalar());
    v.push_back(fermion_entropy());
    Table bp = boson_pressure();
    v.push_back(bp);
    v.push_back(derive(bp, Derivative::nu));
    v.push_back(derive(bp, Derivative::minus_lambda));
    v.push_back(derive(bp, Derivative::entropy));
    return v;
  }();
  return tables[static_cast<std::size_t>(id)];
}

bool keep(int a, Part part) {
  switch (part) {
    case Part::total:
      return true;
    case Part::even:
      return a % 2 == 0;
    case Part::odd:
      return a % 2 != 0;
  }
  return true;
}

EvalOutcome eval_table(const Table& t, const ReducedState& s, Part part, const SeriesConfig& cfg) {
  const double u = s.lambda / (2.0 * sf::pi);
  const double w = s.nu / sf::pi;
  std::vector<double> up(static_cast<std::size_t>(t.max_b) + 1, 1.0);
  std::vector<double> wp(static_cast<std::size_t>(t.max_a) + 1, 1.0);
  for (std::size_t i = 1; i < up.size(); ++i) up[i] = up[i - 1] * u;
  for (std::size_t i = 1; i < wp.size(); ++i) wp[i] = wp[i - 1] * w;
  double logs[4] = {0.0, 0.0, 0.0, 0.0};
  if (s.lambda > 0.0) {
    const double ll = std::log(s.lambda);
    logs[1] = ll - sf::ln2;
    logs[2] = ll - sf::ln_pi;
    logs[3] = ll - kLn4Pi;
  }
  double abs_sum = 0.0;
  auto group_value = [&](const std::vector<Mono>& g) {
    double v = 0.0;
    for (const Mono& m : g) {
      if (!keep(m.a, part)) continue;
      const double wa = wp[static_cast<std::size_t>(m.a)];
      if (wa == 0.0) continue;
      if (s.lambda == 0.0 && (m.b != 0 || m.log != LogKind::none)) continue;
      double x = m.c * wa * (m.b >= 0 ? up[static_cast<std::size_t>(m.b)] : 1.0 / up[static_cast<std::size_t>(-m.b)]);
      if (m.log != LogKind::none) x *= logs[static_cast<int>(m.log)];
      abs_sum += std::abs(x);
      v += x;
    }
    return v;
  };

  SeriesConfig kcfg = cfg;
  kcfg.consecutive_small = 2;
  kcfg.max_terms = std::min(cfg.max_terms, max_k);
  SeriesAccumulator acc(kcfg, group_value(t.groups[0]));
  for (int k = 1; k <= max_k && !acc.done(); ++k) acc.add(group_value(t.groups[static_cast<std::size_t>(k)]));

  const double rho = (s.lambda + std::abs(s.nu)) / convergence_radius(s.stat);
  EvalOutcome out;
  out.value = acc.sum();
  out.method = Method::high_t;
  out.terms_used = acc.terms();
  out.error_estimate = std::abs(acc.last()) / (1.0 - rho * rho) + 4.0 * kEps * abs_sum;
  if (rho > polylog::edge_fraction) out.flags.set(Flags::near_domain_edge).set(Flags::degraded_accuracy);
  if (!acc.converged()) out.flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  return out;
}

void require_domain(const ReducedState& s, const char* fn) {
  if (!in_domain(s)) {
    throw DomainError(std::string(fn) + ": outside the high-temperature convergence domain lambda + |nu| < " +
                      (s.stat == Statistics::fermion ? "pi" : "2 pi"));
  }
}

// (lambda^2 - nu^2)^{3/2} terms of the boson pressure and their derivatives.
enum class Quantity { p, n, sc, s };

double w_term(const ReducedState& s, Part part, Quantity q, Flags& flags) {
  const double l = s.lambda;
  const double v = s.nu;
  if (l == 0.0) return 0.0;
  const double d = l * l - v * v;
  const double c6 = 1.0 / (6.0 * kPi2);
  double p = 0.0, dn = 0.0, dl = 0.0;  // value, d/dnu, d/dlambda
  if (part == Part::total) {
    double q_ = 0.0;
    if (v >= -l) {
      q_ = std::sqrt(std::max(d, 0.0)) * std::acos(std::clamp(-v / l, -1.0, 1.0));
    } else {
      q_ = -std::sqrt(-d) * std::acosh(-v / l);
      flags.set(Flags::continued);
    }
    p = d * q_ * c6;
    dn = (-3.0 * v * q_ + d) * c6;
    dl = (3.0 * l * q_ - d * v / l) * c6;
  } else {
    const double sd = std::sqrt(std::max(d, 0.0));
    if (part == Part::even) {
      p = d * sd / (12.0 * sf::pi);
      dn = -v * sd / (4.0 * sf::pi);
      dl = l * sd / (4.0 * sf::pi);
    } else {
      const double as = std::asin(std::clamp(v / l, -1.0, 1.0));
      p = d * sd * as * c6;
      dn = (-3.0 * v * sd * as + d) * c6;
      dl = (3.0 * l * sd * as - d * v / l) * c6;
    }
  }
  switch (q) {
    case Quantity::p:
      return p;
    case Quantity::n:
      return dn;
    case Quantity::sc:
      return -dl;
    case Quantity::s:
      return 4.0 * p - l * dl - v * dn;
  }
  return 0.0;
}

// The nu-parity of each W piece flips under d/dnu: the even part of I_n comes
// from the odd part of W and vice versa.
Part w_source(Part part, Quantity q) {
  if (q != Quantity::n || part == Part::total) return part;
  return part == Part::even ? Part::odd : Part::even;
}

EvalOutcome fermion_series(const ReducedState& s, Part part, const SeriesConfig& cfg, Quantity q,
                           const char* fn) {
  if (s.stat != Statistics::fermion) throw DomainError(std::string(fn) + ": requires fermion statistics");
  require_domain(s, fn);
  if (s.massless && part == Part::total) {
    const MasslessSet m = massless(s.nu, s.stat, cfg);
    switch (q) {
      case Quantity::p: return m.pressure;
      case Quantity::n: return m.density;
      case Quantity::sc: return m.scalar_density;
      case Quantity::s: return m.entropy;
    }
  }
  static constexpr TableId ids[] = {TableId::fermion_p, TableId::fermion_n, TableId::fermion_sc,
                                    TableId::fermion_s};
  return eval_table(table(ids[static_cast<int>(q)]), s, part, cfg);
}

EvalOutcome boson_series(const ReducedState& s, Part part, const SeriesConfig& cfg, Quantity q,
                         const char* fn) {
  if (s.stat != Statistics::boson) throw DomainError(std::string(fn) + ": requires boson statistics");
  if (s.nu > s.lambda) throw DomainError(std::string(fn) + ": mu exceeds mass for boson");
  require_domain(s, fn);
  if (s.massless && part == Part::total) {
    const MasslessSet m = massless(s.nu, s.stat, cfg);
    switch (q) {
      case Quantity::p: return m.pressure;
      case Quantity::n: return m.density;
      case Quantity::sc: return m.scalar_density;
      case Quantity::s: return m.entropy;
    }
  }
  if (part != Part::total && std::abs(s.nu) > s.lambda) {
    throw DomainError(std::string(fn) + ": boson even/odd parts need |nu| <= lambda");
  }
  static constexpr TableId ids[] = {TableId::boson_p, TableId::boson_n, TableId::boson_sc,
                                    TableId::boson_s};
  EvalOutcome out = eval_table(table(ids[static_cast<int>(q)]), s, part, cfg);
  const double w = w_term(s, w_source(part, q), q, out.flags);
  out.value += w;
  out.error_estimate += 4.0 * kEps * std::abs(w);
  return out;
}

}  // namespace

ReducedState make_state(double lambda, double nu, Statistics stat) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("reduced state: lambda must be finite and >= 0");
  }
  if (!std::isfinite(nu)) throw DomainError("reduced state: nu must be finite");
  if (stat == Statistics::boson && nu > lambda) {
    throw DomainError("reduced state: mu exceeds mass for boson");
  }
  ReducedState s;
  s.lambda = lambda;
  s.nu = nu;
  s.stat = stat;
  s.massless = lambda == 0.0;
  s.r = s.massless ? 0.0 : nu / lambda;
  return s;
}

std::string_view to_string(Part p) noexcept {
  switch (p) {
    case Part::total: return "total";
    case Part::even: return "even";
    case Part::odd: return "odd";
  }
  return "total";
}

double convergence_radius(Statistics stat) noexcept {
  return stat == Statistics::fermion ? sf::pi : 2.0 * sf::pi;
}

bool in_domain(const ReducedState& s) noexcept {
  if (s.stat == Statistics::boson && s.nu > s.lambda) return false;
  return s.lambda + std::abs(s.nu) < convergence_radius(s.stat);
}

double hf_poly(HFKind kind, int k, double r) {
  int p = 0, q = 0;
  bool three_half = false;
  switch (kind) {
    case HFKind::mk_mk2_half: p = k; q = k + 2; break;
    case HFKind::omk_mk1_threehalf: p = k - 1; q = k + 1; three_half = true; break;
    case HFKind::omk_mk1_half: p = k - 1; q = k + 1; break;
    case HFKind::mk_mk1_half: p = k; q = k + 1; break;
    case HFKind::omk_mk_threehalf: p = k - 1; q = k; three_half = true; break;
    default: throw DomainError("hf_poly: unknown kind");
  }
  if (p < 0) throw RangeError("hf_poly: index k too small for this kind");
  const double x = 2.0 * r;
  double sum = 0.0;
  for (int i = 0; i <= std::min(p, q); ++i) {
    const double c = std::exp(sf::ln_factorial(p) + sf::ln_factorial(q) - sf::ln_factorial(p - i) -
                              sf::ln_factorial(q - i) - sf::ln_factorial(2 * i + (three_half ? 1 : 0)));
    sum += c * std::pow(x, 2 * i);
  }
  return sum;
}

double g_poly(GKind kind, int k, double r) {
  if (k < 1) throw RangeError("g_poly: requires k >= 1");
  const auto& c = sf::constants();
  const double x = 2.0 * r;
  const double ld = c.beta_logderiv_even(k) - sf::ln_pi;
  auto pw = [&](int e) { return std::pow(x, e); };
  auto fct = [](int n) { return std::exp(sf::ln_factorial(n)); };
  double g = 0.0;
  switch (kind) {
    case GKind::n:
      g = pw(2 * k) / fct(2 * k) - pw(2 * k + 2) / fct(2 * k + 2);
      for (int i = 0; i < k; ++i) {
        g -= pw(2 * i) / fct(2 * i) * (psi(k - i) + psi(k - i + 2)) / (fct(k - i - 1) * fct(k - i + 1));
      }
      g += 2.0 / (fct(k - 1) * fct(k + 1)) * ld * hf_poly(HFKind::omk_mk1_half, k, r);
      break;
    case GKind::sc:
      g = pw(2 * k) / fct(2 * k + 1);
      for (int i = 0; i < k; ++i) {
        g -= pw(2 * i) / fct(2 * i + 1) * (psi(k - i) + psi(k - i + 1)) / (fct(k - i - 1) * fct(k - i));
      }
      g += 2.0 / (fct(k - 1) * fct(k)) * ld * hf_poly(HFKind::omk_mk_threehalf, k, r);
      break;
    case GKind::s:
      g = pw(2 * k + 2) / fct(2 * k + 3) - pw(2 * k) / fct(2 * k + 1);
      for (int i = 0; i < k; ++i) {
        g += pw(2 * i) / fct(2 * i + 1) * (psi(k - i) + psi(k - i + 2)) / (fct(k - i - 1) * fct(k - i + 1));
      }
      g -= 2.0 / (fct(k - 1) * fct(k + 1)) * (ld + 1.0 / (2.0 * k - 1.0)) *
           hf_poly(HFKind::omk_mk1_threehalf, k, r);
      break;
    default:
      throw DomainError("g_poly: unknown kind");
  }
  return g;
}

EvalOutcome pressure_ht_fermion(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return fermion_series(s, part, cfg, Quantity::p, "pressure_ht_fermion");
}
EvalOutcome density_ht_fermion(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return fermion_series(s, part, cfg, Quantity::n, "density_ht_fermion");
}
EvalOutcome scalar_density_ht_fermion(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return fermion_series(s, part, cfg, Quantity::sc, "scalar_density_ht_fermion");
}
EvalOutcome entropy_ht_fermion(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return fermion_series(s, part, cfg, Quantity::s, "entropy_ht_fermion");
}

EvalOutcome pressure_ht_boson(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return boson_series(s, part, cfg, Quantity::p, "pressure_ht_boson");
}
EvalOutcome density_ht_boson(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return boson_series(s, part, cfg, Quantity::n, "density_ht_boson");
}
EvalOutcome scalar_density_ht_boson(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return boson_series(s, part, cfg, Quantity::sc, "scalar_density_ht_boson");
}
EvalOutcome entropy_ht_boson(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return boson_series(s, part, cfg, Quantity::s, "entropy_ht_boson");
}

EvalOutcome pressure_ht(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return s.stat == Statistics::fermion ? pressure_ht_fermion(s, part, cfg)
                                       : pressure_ht_boson(s, part, cfg);
}
EvalOutcome density_ht(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return s.stat == Statistics::fermion ? density_ht_fermion(s, part, cfg)
                                       : density_ht_boson(s, part, cfg);
}
EvalOutcome scalar_density_ht(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return s.stat == Statistics::fermion ? scalar_density_ht_fermion(s, part, cfg)
                                       : scalar_density_ht_boson(s, part, cfg);
}
EvalOutcome entropy_ht(const ReducedState& s, Part part, const SeriesConfig& cfg) {
  return s.stat == Statistics::fermion ? entropy_ht_fermion(s, part, cfg)
                                       : entropy_ht_boson(s, part, cfg);
}

MasslessSet massless(double nu, Statistics stat, const SeriesConfig& cfg) {
  if (stat == Statistics::boson && nu > 0.0) {
    throw DomainError("massless: mu exceeds mass for boson");
  }
  const double a = alpha(stat);
  const polylog::ExpSign sign =
      stat == Statistics::fermion ? polylog::ExpSign::minus : polylog::ExpSign::plus;
  const EvalOutcome li4 = polylog::evaluate({4.0, nu, sign, cfg});
  const EvalOutcome li3 = polylog::evaluate({3.0, nu, sign, cfg});
  MasslessSet m;
  m.pressure = {a * li4.value / kPi2, Method::massless, li4.terms_used, li4.error_estimate / kPi2,
                li4.flags | Flags(Flags::massless)};
  m.density = {a * li3.value / kPi2, Method::massless, li3.terms_used, li3.error_estimate / kPi2,
               li3.flags | Flags(Flags::massless)};
  m.scalar_density = {0.0, Method::massless, 0, 0.0, Flags(Flags::massless)};
  m.entropy = {4.0 * m.pressure.value - nu * m.density.value, Method::massless,
               li4.terms_used + li3.terms_used,
               4.0 * m.pressure.error_estimate + std::abs(nu) * m.density.error_estimate,
               m.pressure.flags | m.density.flags};
  return m;
}

EvalOutcome klajn_even_fermion(const ReducedState& s, const SeriesConfig& cfg) {
  if (s.stat != Statistics::fermion) throw DomainError("klajn_even_fermion: requires fermion statistics");
  require_domain(s, "klajn_even_fermion");
  const double l = s.lambda;
  const double v = s.nu;
  double base = 7.0 * kPi2 / 720.0 + v * v / 24.0 + std::pow(v, 4) / (48.0 * kPi2) -
                l * l / 16.0 * (1.0 / 3.0 + v * v / kPi2);
  if (l > 0.0) {
    base -= std::pow(l, 4) / (32.0 * kPi2) * (std::log(l / sf::pi) + sf::euler_gamma - 0.75);
  }
  if (l == 0.0) return {base, Method::klajn, 0, 4.0 * kEps * std::abs(base), {}};
  const double ln_a = std::log(l / (4.0 * sf::pi));
  const double ln_b = v != 0.0 ? std::log(std::abs(v) / (2.0 * sf::pi)) : 0.0;
  const auto& c = sf::constants();
  SeriesConfig jcfg = cfg;
  jcfg.consecutive_small = 2;
  jcfg.max_terms = std::min(cfg.max_terms, max_k);
  SeriesAccumulator acc(jcfg, base);
  double abs_sum = std::abs(base);
  for (int j = 1; j <= jcfg.max_terms && !acc.done(); ++j) {
    // psi^{(2j)}(1/2) = -2^{2j+1} beta(2j+1); its magnitude leaves the double
    // range long before the sum converges, so it enters in log form past that.
    const double ph = sf::polygamma_half(2 * j);
    const bool finite = std::isfinite(ph);
    const double ln_ph = (2.0 * j + 1.0) * sf::ln2 + c.ln_beta_odd(j);
    double inner = 0.0;
    for (int k = 0; k <= j; ++k) {
      const int e = 2 * j - 2 * k;
      if (e > 0 && v == 0.0) continue;
      const double ln_t = (2.0 * k + 2.0) * ln_a + e * ln_b - lf(k) - lf(k + 2) - lf(e);
      inner += finite ? std::exp(ln_t) : std::exp(ln_t + ln_ph);
    }
    const double term = sign_k(j) * l * l * (finite ? ph * inner : -inner);
    abs_sum += std::abs(term);
    acc.add(term);
  }
  const double rho = (l + std::abs(v)) / sf::pi;
  EvalOutcome out{acc.sum(), Method::klajn, acc.terms(),
                  std::abs(acc.last()) / (1.0 - rho * rho) + 4.0 * kEps * abs_sum, {}};
  if (!acc.converged()) out.flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  return out;
}

namespace {

struct PolylogForm {
  EvalOutcome pressure;
  EvalOutcome scalar_density;
};

PolylogForm polylog_form(const ReducedState& s, const SeriesConfig& cfg) {
  const double a = alpha(s.stat);
  const polylog::ExpSign sign =
      s.stat == Statistics::fermion ? polylog::ExpSign::minus : polylog::ExpSign::plus;
  if (s.stat == Statistics::boson && !(s.massless ? s.nu <= 0.0 : s.nu < 0.0 && s.lambda < -s.nu)) {
    throw DomainError("pressure_polylog_form: boson form requires nu < 0 and lambda < |nu|");
  }
  const EvalOutcome li4 = polylog::evaluate({4.0, s.nu, sign, cfg});
  PolylogForm out;
  if (s.massless) {
    out.pressure = {a * li4.value / kPi2, Method::polylog_form, li4.terms_used,
                    li4.error_estimate / kPi2, li4.flags | Flags(Flags::massless)};
    out.scalar_density = {0.0, Method::polylog_form, 0, 0.0, Flags(Flags::massless)};
    return out;
  }
  const double l = s.lambda;
  const EvalOutcome li2 = polylog::evaluate({2.0, s.nu, sign, cfg});
  const double log_half = std::log(0.5 * l);
  const double h2 = 0.25 * l * l;
  double coeff = 0.5 * l * l * 0.5 * h2;  // (lambda^2/2) (lambda/2)^{2n+2}/(n! (n+2)!) at n = 0
  SeriesAccumulator acc(cfg, li4.value - 0.25 * l * l * li2.value);
  double sc_sum = 0.5 * l * li2.value;
  double err = li4.error_estimate + 0.25 * l * l * li2.error_estimate;
  double sc_err = 0.5 * l * li2.error_estimate;
  Flags flags = li4.flags | li2.flags;
  int n = 0;
  const int n_cap = std::min(cfg.max_terms, 400);
  for (; n < n_cap && !acc.done(); ++n) {
    const EvalOutcome li = polylog::evaluate({-2.0 * n, s.nu, sign, cfg});
    const EvalOutcome dli = polylog::evaluate_dli_ds_neg_even(n, s.nu, sign, cfg);
    const double bracket = 0.5 * (sf::digamma_int(n + 1) + sf::digamma_int(n + 3)) - log_half;
    const double term = coeff * (bracket * li.value + dli.value);
    acc.add(term);
    sc_sum += (coeff * li.value - (2.0 * n + 4.0) * term) / l;
    const double term_err = coeff * (std::abs(bracket) * li.error_estimate + dli.error_estimate);
    err += term_err;
    sc_err += (2.0 * n + 5.0) * term_err / l;
    flags |= li.flags | dli.flags;
    coeff *= h2 / ((n + 1.0) * (n + 3.0));
  }
  if (!acc.converged()) flags.set(Flags::truncated).set(Flags::degraded_accuracy);
  const double tail = std::abs(acc.last());
  out.pressure = {a * acc.sum() / kPi2, Method::polylog_form, acc.terms(),
                  (err + tail + 4.0 * kEps * std::abs(acc.sum())) / kPi2, flags};
  out.scalar_density = {a * sc_sum / kPi2, Method::polylog_form, acc.terms(),
                        (sc_err + (2.0 * n + 4.0) * tail / l + 4.0 * kEps * std::abs(sc_sum)) / kPi2,
                        flags};
  return out;
}

}  // namespace

EvalOutcome pressure_polylog_form(const ReducedState& s, const SeriesConfig& cfg) {
  return polylog_form(s, cfg).pressure;
}

EvalOutcome scalar_density_polylog_form(const ReducedState& s, const SeriesConfig& cfg) {
  return polylog_form(s, cfg).scalar_density;
}

EvalOutcome density_polylog_form(const ReducedState& s, const SeriesConfig& cfg) {
  const double h = 1e-3;
  auto f = [&](double dv) {
    ReducedState t = s;
    t.nu = s.nu + dv;
    t.r = t.massless ? 0.0 : t.nu / t.lambda;
    return pressure_polylog_form(t, cfg);
  };
  const EvalOutcome m4 = f(-4.0 * h), m2 = f(-2.0 * h), m1 = f(-h);
  const EvalOutcome p1 = f(h), p2 = f(2.0 * h), p4 = f(4.0 * h);
  const double d_h = (m2.value - 8.0 * m1.value + 8.0 * p1.value - p2.value) / (12.0 * h);
  const double d_2h = (m4.value - 8.0 * m2.value + 8.0 * p2.value - p4.value) / (24.0 * h);
  double noise = 0.0;
  for (const EvalOutcome* o : {&m2, &m1, &p1, &p2}) noise += o->error_estimate + 4.0 * kEps * std::abs(o->value);
  noise *= 1.5 / h;
  EvalOutcome out;
  out.value = d_h;
  out.method = Method::polylog_form;
  out.terms_used = m2.terms_used + m1.terms_used + p1.terms_used + p2.terms_used;
  out.error_estimate = std::abs(d_h - d_2h) / 15.0 + noise;
  out.flags = m2.flags | m1.flags | p1.flags | p2.flags | Flags(Flags::finite_difference);
  return out;
}

}  // namespace relgas::hightemp
