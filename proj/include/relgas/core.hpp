// Shared vocabulary types for the relgas library: statistics selector,
// truncation control, evaluation metadata and the error hierarchy.
#ifndef RELGAS_CORE_HPP
#define RELGAS_CORE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relgas {

enum class Statistics { fermion, boson };

/// Sign carried by the occupation factor 1/(e^{x-nu} - alpha): -1 for
/// fermions, +1 for bosons.
constexpr double alpha(Statistics s) noexcept { return s == Statistics::fermion ? -1.0 : 1.0; }

std::string_view to_string(Statistics s) noexcept;
Statistics parse_statistics(std::string_view name);

/// Truncation control shared by every series in the library.
///
/// A series stops once `consecutive_small` successive terms are each below
/// `rtol` times the running partial sum, or after `max_terms` terms.
struct SeriesConfig {
  double rtol = 1e-16;
  int max_terms = 100000;
  int consecutive_small = 3;
};

enum class Method {
  auto_select,
  high_t,
  polylog_form,
  bessel,
  nonrelativistic,
  quadrature,
  massless,
  klajn,
  direct_series,
  robinson,
  wood,
  asymptotic,
  finite_difference,
};

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);

/// Bit set of non-fatal diagnostics attached to an evaluation.
class Flags {
 public:
  enum Bit : std::uint32_t {
    degraded_accuracy = 1u << 0,
    near_domain_edge = 1u << 1,
    truncated = 1u << 2,
    slow_convergence = 1u << 3,
    asymptotic_warning = 1u << 4,
    boson_edge = 1u << 5,
    massless = 1u << 6,
    continued = 1u << 7,
    finite_difference = 1u << 8,
  };

  constexpr Flags() = default;
  constexpr Flags(std::uint32_t bits) : bits_(bits) {}  // NOLINT(implicit)

  constexpr bool has(Bit b) const noexcept { return (bits_ & b) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr Flags& set(Bit b) noexcept {
    bits_ |= b;
    return *this;
  }
  constexpr Flags& operator|=(Flags o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  friend constexpr Flags operator|(Flags a, Flags b) noexcept { return Flags(a.bits_ | b.bits_); }
  friend constexpr bool operator==(Flags a, Flags b) noexcept { return a.bits_ == b.bits_; }

  /// Pipe-separated names, e.g. "truncated|near_domain_edge"; empty if none.
  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
};

/// Result of any series or quadrature evaluation.
struct EvalOutcome {
  double value = 0.0;
  Method method = Method::auto_select;
  int terms_used = 0;
  double error_estimate = 0.0;  // absolute, always >= 0
  Flags flags;

  double relative_error() const noexcept {
    return value != 0.0 ? error_estimate / std::abs(value) : error_estimate;
  }
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain where the requested representation is valid.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Index outside a precomputed table or a parameter outside its allowed range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Partial-sum accumulator implementing the library-wide stop rule.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const SeriesConfig& cfg, double initial = 0.0) noexcept
      : cfg_(cfg), sum_(initial) {}

  /// Adds a term; returns true once the series is considered converged.
  bool add(double term) noexcept {
    sum_ += term;
    ++terms_;
    last_ = term;
    if (std::abs(term) <= cfg_.rtol * std::abs(sum_)) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    return converged();
  }

  bool converged() const noexcept { return small_run_ >= cfg_.consecutive_small; }
  bool exhausted() const noexcept { return terms_ >= cfg_.max_terms; }
  bool done() const noexcept { return converged() || exhausted(); }

  double sum() const noexcept { return sum_; }
  double last() const noexcept { return last_; }
  int terms() const noexcept { return terms_; }

 private:
  SeriesConfig cfg_;
  double sum_;
  double last_ = 0.0;
  int terms_ = 0;
  int small_run_ = 0;
};

}  // namespace relgas

#endif  // RELGAS_CORE_HPP
