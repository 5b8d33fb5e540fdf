#include "distprod/value_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace distprod {

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: '" + text + "'");
    }
    return boost::multiprecision::cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  auto num = parse_int(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("bad rational: '" + text + "'");
  auto den = parse_int(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ValuePoly::ValuePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

ValuePoly ValuePoly::monomial(const Rational& c, Exponents e) {
  ValuePoly p;
  p.add_term(e, c);
  return p;
}

ValuePoly ValuePoly::symbol(Symbol s, std::int32_t power) {
  Exponents e;
  switch (s) {
    case Symbol::w: e.w = power; break;
    case Symbol::d0:
    case Symbol::a:
    case Symbol::g:
      if (power < 0) throw std::invalid_argument("only w may carry a negative power");
      if (s == Symbol::d0) e.d0 = static_cast<std::uint32_t>(power);
      if (s == Symbol::a) e.a = static_cast<std::uint32_t>(power);
      if (s == Symbol::g) e.g = static_cast<std::uint32_t>(power);
      break;
  }
  return monomial(Rational(1), e);
}

void ValuePoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ValuePoly& ValuePoly::operator+=(const ValuePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ValuePoly& ValuePoly::operator-=(const ValuePoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

ValuePoly operator*(const ValuePoly& x, const ValuePoly& y) {
  ValuePoly out;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      Exponents e{ex.w + ey.w, ex.d0 + ey.d0, ex.a + ey.a, ex.g + ey.g};
      out.add_term(e, cx * cy);
    }
  }
  return out;
}

ValuePoly& ValuePoly::operator*=(const ValuePoly& other) {
  *this = *this * other;
  return *this;
}

ValuePoly operator-(const ValuePoly& x) {
  ValuePoly out = x;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ValuePoly ValuePoly::pow(unsigned k) const {
  ValuePoly result(1);
  ValuePoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

Rational rational_pow(const Rational& base, std::int64_t k) {
  Rational result(1);
  Rational b = k < 0 ? Rational(1) / base : base;
  for (std::int64_t i = 0, n = k < 0 ? -k : k; i < n; ++i) result *= b;
  return result;
}

}  // namespace

ValuePoly ValuePoly::substitute(const Bindings& bindings) const {
  if (bindings.w && *bindings.w <= 0)
    throw std::domain_error("w must be substituted with a positive rational");
  ValuePoly out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    if (bindings.w) { coeff *= rational_pow(*bindings.w, e.w); rest.w = 0; }
    if (bindings.d0) { coeff *= rational_pow(*bindings.d0, e.d0); rest.d0 = 0; }
    if (bindings.a) { coeff *= rational_pow(*bindings.a, e.a); rest.a = 0; }
    if (bindings.g) { coeff *= rational_pow(*bindings.g, e.g); rest.g = 0; }
    out.add_term(rest, coeff);
  }
  return out;
}

ValuePoly ValuePoly::g_order(std::uint32_t n) const {
  ValuePoly out;
  for (const auto& [e, c] : terms_) {
    if (e.g != n) continue;
    Exponents rest = e;
    rest.g = 0;
    out.add_term(rest, c);
  }
  return out;
}

std::optional<std::int32_t> ValuePoly::degree(Symbol s) const {
  std::optional<std::int32_t> best;
  for (const auto& [e, c] : terms_) {
    std::int32_t k = 0;
    switch (s) {
      case Symbol::w: k = e.w; break;
      case Symbol::d0: k = static_cast<std::int32_t>(e.d0); break;
      case Symbol::a: k = static_cast<std::int32_t>(e.a); break;
      case Symbol::g: k = static_cast<std::int32_t>(e.g); break;
    }
    if (!best || k > *best) best = k;
  }
  return best;
}

std::optional<Rational> ValuePoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == Exponents{}) return terms_.begin()->second;
  return std::nullopt;
}

std::string render_symbols(const Exponents& e) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const char* name, std::int64_t k) {
    if (k == 0) return;
    if (!first) out << ' ';
    first = false;
    out << name;
    if (k != 1) out << '^' << k;
  };
  emit("g", e.g);
  emit("d0", e.d0);
  emit("a", e.a);
  emit("w", e.w);
  return out.str();
}

std::string ValuePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string syms = render_symbols(e);
    if (syms.empty()) {
      out << distprod::to_string(mag);
    } else if (mag == 1) {
      out << syms;
    } else {
      out << distprod::to_string(mag) << ' ' << syms;
    }
  }
  return out.str();
}

ValuePoly add(const ValuePoly& x, const ValuePoly& y) { return x + y; }
ValuePoly mul(const ValuePoly& x, const ValuePoly& y) { return x * y; }
ValuePoly substitute(const ValuePoly& x, const Bindings& bindings) { return x.substitute(bindings); }

}  // namespace distprod
