// Self-verification suites: identities, parity, cross-representation and
// oracle agreement checks run by `relgas verify`.
#ifndef RELGAS_VERIFY_HPP
#define RELGAS_VERIFY_HPP

#include <string>
#include <vector>

namespace relgas::verify {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const noexcept;
  /// Largest residual/tolerance ratio's residual, i.e. the worst check.
  const Check* worst() const noexcept;
  double max_residual() const noexcept;
};

/// identities, klajn, parity, oracle, polylog, bessel, crossrep, domain.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_all();

}  // namespace relgas::verify

#endif  // RELGAS_VERIFY_HPP
