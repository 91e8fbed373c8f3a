#include "relgas/core.hpp"

#include <array>
#include <utility>

namespace relgas {

std::string_view to_string(Statistics s) noexcept {
  return s == Statistics::fermion ? "fermion" : "boson";
}

Statistics parse_statistics(std::string_view name) {
  if (name == "fermion") return Statistics::fermion;
  if (name == "boson") return Statistics::boson;
  throw DomainError("unknown statistics '" + std::string(name) + "' (expected fermion|boson)");
}

namespace {
constexpr std::array<std::pair<Method, std::string_view>, 13> kMethodNames{{
    {Method::auto_select, "auto"},
    {Method::high_t, "high_t"},
    {Method::polylog_form, "polylog"},
    {Method::bessel, "bessel"},
    {Method::nonrelativistic, "nonrel"},
    {Method::quadrature, "quadrature"},
    {Method::massless, "massless"},
    {Method::klajn, "klajn"},
    {Method::direct_series, "li_direct"},
    {Method::robinson, "robinson"},
    {Method::wood, "wood"},
    {Method::asymptotic, "asymptotic"},
    {Method::finite_difference, "finite_difference"},
}};

constexpr std::array<std::pair<Flags::Bit, std::string_view>, 9> kFlagNames{{
    {Flags::degraded_accuracy, "degraded_accuracy"},
    {Flags::near_domain_edge, "near_domain_edge"},
    {Flags::truncated, "truncated"},
    {Flags::slow_convergence, "slow_convergence"},
    {Flags::asymptotic_warning, "asymptotic_warning"},
    {Flags::boson_edge, "boson_edge"},
    {Flags::massless, "massless"},
    {Flags::continued, "continued"},
    {Flags::finite_difference, "finite_difference"},
}};
}  // namespace

std::string_view to_string(Method m) noexcept {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [method, label] : kMethodNames) {
    if (label == name) return method;
  }
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string Flags::to_string() const {
  std::string out;
  for (const auto& [bit, name] : kFlagNames) {
    if (!has(bit)) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out;
}

}  // namespace relgas
