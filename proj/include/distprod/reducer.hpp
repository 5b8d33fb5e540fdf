#pragma once

// Rule engine reducing single-time integrals over products of D, dD, ddD and
// delta to exact ValuePoly values.
//
// The rewrite order is fixed:
//   field_equation  ddD -> -delta + w^2 D
//   dirac_squared   Int f delta^2 = f(0) d0
//   dirac           Int f delta   = f(0)
//   parity          integrands odd in dD vanish
//   ibp             (1+m) Int dD^n D^m = (n-1) [dD^(n-2) D^(m+1)](0)
//                                        - (n-1) w^2 Int dD^(n-2) D^(m+2)
//   base_integral   Int D^m = 2^(1-m) / m * w^-(m+1)
// with D(0) = w^-1/2 and dD(0) = 0. Other orders give different answers for
// products such as dD^4, so the order is part of the contract.

#include "distprod/integrand.hpp"
#include "distprod/value_poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distprod {

/// Raised for integrals outside the rule system: delta^q with q >= 3, or a
/// bare Int dtau with no factors.
class RuleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// D(0) = w^-1 / 2
ValuePoly equal_time_D();
/// ddD(0) = -d0 + w / 2, the field equation at the origin.
ValuePoly equal_time_ddD();

/// Part of a sum already evaluated to a number, plus what is left.
struct Evaluated {
  ValuePoly value;
  IntegrandSum residual;

  bool operator==(const Evaluated&) const = default;
};

IntegrandSum substitute_field_equation(const IntegrandSum& s);
Evaluated eval_dirac_squared(const IntegrandSum& s);
Evaluated eval_dirac(const IntegrandSum& s);
Evaluated ibp_step(const IntegrandMonomial& t);
ValuePoly base_integral(std::uint32_t m);

struct ReductionState {
  ValuePoly value;
  IntegrandSum pending;

  bool operator==(const ReductionState&) const = default;
};

struct TraceStep {
  std::string rule;
  ReductionState before;
  ReductionState after;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  /// True iff re-applying each rule to its `before` gives its `after` and
  /// consecutive steps chain.
  bool replays() const;
};

/// Applies one named pipeline stage to a state. Throws std::invalid_argument
/// for an unknown rule name.
ReductionState apply_rule(std::string_view rule, const ReductionState& state);

struct Reduction {
  ValuePoly value;
  ReductionTrace trace;
};

Reduction reduce(const IntegrandSum& s, bool record_trace = true);

inline ValuePoly reduce_value(const IntegrandSum& s) { return reduce(s, false).value; }

}  // namespace distprod
