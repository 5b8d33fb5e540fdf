#include "distprod/integrand.hpp"

#include <map>
#include <sstream>

namespace distprod {

IntegrandMonomial mul_monomials(const IntegrandMonomial& x, const IntegrandMonomial& y) {
  const auto& a = x.powers;
  const auto& b = y.powers;
  return {{a.m + b.m, a.n + b.n, a.p + b.p, a.q + b.q}, x.coeff * y.coeff};
}

std::string render_factors(const Powers& pw) {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const char* name, std::uint32_t k) {
    if (k == 0) return;
    if (!first) out << ' ';
    first = false;
    out << name;
    if (k != 1) out << '^' << k;
  };
  emit("D", pw.m);
  emit("dD", pw.n);
  emit("ddD", pw.p);
  emit("delta", pw.q);
  return out.str();
}

IntegrandSum& IntegrandSum::operator+=(const IntegrandSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

IntegrandSum operator*(const ValuePoly& c, const IntegrandSum& s) {
  IntegrandSum out;
  for (const auto& t : s.terms_) out.terms_.push_back({t.powers, c * t.coeff});
  return out;
}

IntegrandSum normalize(const IntegrandSum& s) {
  std::map<Powers, ValuePoly> merged;
  for (const auto& t : s.terms()) merged[t.powers] += t.coeff;
  IntegrandSum out;
  for (auto& [pw, c] : merged) {
    if (!c.is_zero()) out.push_back({pw, std::move(c)});
  }
  return out;
}

std::string IntegrandSum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string factors = render_factors(t.powers);
    for (const auto& [e, c] : t.coeff.terms()) {
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out << '-';
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string syms = render_symbols(e);
      std::string lead;
      if (mag != 1 || (syms.empty() && factors.empty())) lead = distprod::to_string(mag);
      bool need_space = false;
      for (const auto* part : {&lead, &syms, &factors}) {
        if (part->empty()) continue;
        if (need_space) out << ' ';
        out << *part;
        need_space = true;
      }
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace distprod
