#pragma once

// Products of propagator distributions under one time integral.
//
// A monomial stands for  coeff * Int dtau D^m dD^n ddD^p delta^q, where D is
// the oscillator correlation function exp(-w|tau|)/(2w), dD and ddD its first
// and second tau-derivatives and delta the Dirac distribution. Equal-time
// factors are never stored here; they are folded into the coefficient.

#include "distprod/value_poly.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace distprod {

struct Powers {
  std::uint32_t m = 0;  // D
  std::uint32_t n = 0;  // dD
  std::uint32_t p = 0;  // ddD
  std::uint32_t q = 0;  // delta

  auto operator<=>(const Powers&) const = default;

  bool is_bare() const { return m == 0 && n == 0 && p == 0 && q == 0; }
};

struct IntegrandMonomial {
  Powers powers;
  ValuePoly coeff{1};

  bool operator==(const IntegrandMonomial&) const = default;
};

IntegrandMonomial mul_monomials(const IntegrandMonomial& x, const IntegrandMonomial& y);

/// "D^m dD^n ddD^p delta^q" with unit powers elided and zero powers omitted.
std::string render_factors(const Powers& pw);

class IntegrandSum {
 public:
  IntegrandSum() = default;
  IntegrandSum(std::vector<IntegrandMonomial> terms) : terms_(std::move(terms)) {}  // NOLINT
  IntegrandSum(IntegrandMonomial t) : terms_{std::move(t)} {}  // NOLINT

  const std::vector<IntegrandMonomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void push_back(IntegrandMonomial t) { terms_.push_back(std::move(t)); }

  IntegrandSum& operator+=(const IntegrandSum& other);
  friend IntegrandSum operator+(IntegrandSum x, const IntegrandSum& y) { return x += y; }
  /// Scales every coefficient.
  friend IntegrandSum operator*(const ValuePoly& c, const IntegrandSum& s);

  /// Compares term lists as stored; normalize both sides for value equality.
  bool operator==(const IntegrandSum&) const = default;

  /// Renders with coefficients expanded into one term per ValuePoly term,
  /// e.g. "dD^2 + w^2 D^2". The empty sum renders as "0".
  std::string to_string() const;

 private:
  std::vector<IntegrandMonomial> terms_;
};

/// Merges equal powers, drops zero coefficients, sorts by (m, n, p, q).
IntegrandSum normalize(const IntegrandSum& s);

}  // namespace distprod
