#pragma once

// End-to-end checks: reduction identities, diagram-class tables, partial
// diagram sums, order-by-order cancellation and a numeric oracle for the
// integrals where naive Lebesgue integration is also valid.

#include "distprod/reducer.hpp"
#include "distprod/value_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace distprod {

struct CheckResult {
  std::string name;
  ValuePoly expected;
  ValuePoly actual;
  bool passed = false;
  std::optional<ReductionTrace> trace;
};

CheckResult make_check(std::string name, ValuePoly expected, ValuePoly actual,
                       std::optional<ReductionTrace> trace = std::nullopt);

/// Integration-by-parts and field-equation identities plus the delta^2
/// rules, each as reduce(lhs) == reduce(rhs) symbolically in w.
std::vector<CheckResult> identity_suite();

/// Generated diagram-class coefficients against the expected tables.
std::vector<CheckResult> class_table_suite();

/// Sums of diagram groups against their closed forms.
std::vector<CheckResult> diagram_identities();

/// Total order-g^n contribution, reduced, must vanish identically. With
/// `a` the parameter is substituted after reduction; with `veltman` d0 is
/// set to 0 in the contractions and in the reduced result.
CheckResult order_check(int n, const std::optional<Rational>& a = std::nullopt, bool veltman = false);

/// Int dtau D^m dD^n over the real line by adaptive Gauss-Kronrod on
/// [0, 64/((m+n)w)], doubled. Only n in {0, 2} is accepted; throws
/// std::invalid_argument otherwise or when m + n == 0 or w <= 0.
double quadrature_oracle(std::uint32_t m, std::uint32_t n, const Rational& omega);

/// Closed-form Lebesgue value of Int D^m dD^n for even n, treating
/// dD^2 = exp(-2w|tau|)/4 pointwise.
ValuePoly lebesgue_integral(std::uint32_t m, std::uint32_t n);

struct OracleComparison {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  Rational omega;
  double quadrature = 0;
  double reduced = 0;
  double relative_error = 0;
  bool passed = false;
};

inline constexpr double kOracleTolerance = 1e-8;

OracleComparison oracle_compare(std::uint32_t m, std::uint32_t n, const Rational& omega);

/// Every m <= 6, n in {0, 2}, w in {1/2, 1, 2} with m + n >= 1.
std::vector<OracleComparison> oracle_suite();

/// Lebesgue(dD^4) - reduce(dD^4) == w^-1/8.
CheckResult lebesgue_divergence_check();

}  // namespace distprod
