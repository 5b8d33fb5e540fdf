#pragma once

// Exact scalar ring for reduced integrals and diagram coefficients.
//
// A ValuePoly is a sparse polynomial over arbitrary-precision rationals in
// the symbols
//   w   the oscillator frequency omega (Laurent: negative powers allowed)
//   d0  the formal value delta(0), never a number
//   a   the free parameter of the coordinate transformation
//   g   the expansion parameter, used as a grading symbol
//
// Terms are kept in a canonical map with no zero coefficients, so two
// values are equal iff their maps are equal.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace distprod {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

enum class Symbol { w, d0, a, g };

struct Exponents {
  std::int32_t w = 0;
  std::uint32_t d0 = 0;
  std::uint32_t a = 0;
  std::uint32_t g = 0;

  bool operator==(const Exponents&) const = default;
};

// Canonical order: (g, d0, a, w) descending.
struct ExponentsOrder {
  bool operator()(const Exponents& x, const Exponents& y) const {
    if (x.g != y.g) return x.g > y.g;
    if (x.d0 != y.d0) return x.d0 > y.d0;
    if (x.a != y.a) return x.a > y.a;
    return x.w > y.w;
  }
};

struct Bindings {
  std::optional<Rational> w;
  std::optional<Rational> d0;
  std::optional<Rational> a;
  std::optional<Rational> g;
};

class ValuePoly {
 public:
  using TermMap = std::map<Exponents, Rational, ExponentsOrder>;

  ValuePoly() = default;
  ValuePoly(const Rational& c);  // NOLINT: implicit scalar promotion
  ValuePoly(int c) : ValuePoly(Rational(c)) {}  // NOLINT

  static ValuePoly monomial(const Rational& c, Exponents e);
  static ValuePoly symbol(Symbol s, std::int32_t power = 1);
  /// w^k
  static ValuePoly omega(std::int32_t power) { return symbol(Symbol::w, power); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ValuePoly& operator+=(const ValuePoly& other);
  ValuePoly& operator-=(const ValuePoly& other);
  ValuePoly& operator*=(const ValuePoly& other);

  friend ValuePoly operator+(ValuePoly x, const ValuePoly& y) { return x += y; }
  friend ValuePoly operator-(ValuePoly x, const ValuePoly& y) { return x -= y; }
  friend ValuePoly operator*(const ValuePoly& x, const ValuePoly& y);
  friend ValuePoly operator-(const ValuePoly& x);
  bool operator==(const ValuePoly&) const = default;

  ValuePoly pow(unsigned k) const;

  /// Evaluates the bound symbols exactly. Binding w requires w > 0.
  ValuePoly substitute(const Bindings& bindings) const;

  /// Coefficient of g^n, with g removed.
  ValuePoly g_order(std::uint32_t n) const;

  /// Highest exponent of a symbol among the terms, or nullopt for zero.
  /// For w this is the maximum (possibly negative) power.
  std::optional<std::int32_t> degree(Symbol s) const;

  /// Converts a value with no remaining symbols to a rational.
  std::optional<Rational> as_constant() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

ValuePoly add(const ValuePoly& x, const ValuePoly& y);
ValuePoly mul(const ValuePoly& x, const ValuePoly& y);
ValuePoly substitute(const ValuePoly& x, const Bindings& bindings);

/// Renders one term's symbol part ("g d0^2 a w^-1"), empty for a constant.
std::string render_symbols(const Exponents& e);

}  // namespace distprod
