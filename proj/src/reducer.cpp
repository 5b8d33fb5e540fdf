#include "distprod/reducer.hpp"

namespace distprod {

namespace {

const char* const kFieldEquation = "field_equation";
const char* const kDiracSquared = "dirac_squared";
const char* const kDirac = "dirac";
const char* const kParity = "parity";
const char* const kIbp = "ibp";
const char* const kBaseIntegral = "base_integral";

boost::multiprecision::cpp_int binomial(std::uint32_t n, std::uint32_t k) {
  boost::multiprecision::cpp_int r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

[[noreturn]] void no_delta_rule(std::uint32_t q) {
  throw RuleError("no rule for delta^" + std::to_string(q));
}

// Value at the origin of D^m dD^n.
ValuePoly origin_value(const Powers& pw) {
  if (pw.n > 0) return {};
  return equal_time_D().pow(pw.m);
}

}  // namespace

ValuePoly equal_time_D() { return ValuePoly::monomial(Rational(1, 2), {-1, 0, 0, 0}); }

ValuePoly equal_time_ddD() {
  return -ValuePoly::symbol(Symbol::d0) + ValuePoly::monomial(Rational(1, 2), {1, 0, 0, 0});
}

IntegrandSum substitute_field_equation(const IntegrandSum& s) {
  IntegrandSum out;
  const ValuePoly w2 = ValuePoly::omega(2);
  for (const auto& t : s.terms()) {
    const std::uint32_t p = t.powers.p;
    // (-delta + w^2 D)^p, term k carries delta^k D^(p-k)
    for (std::uint32_t k = 0; k <= p; ++k) {
      Rational c(binomial(p, k));
      if (k % 2 == 1) c = -c;
      Powers pw{t.powers.m + (p - k), t.powers.n, 0, t.powers.q + k};
      out.push_back({pw, t.coeff * ValuePoly(c) * w2.pow(p - k)});
    }
  }
  return normalize(out);
}

Evaluated eval_dirac_squared(const IntegrandSum& s) {
  Evaluated out;
  const ValuePoly d0 = ValuePoly::symbol(Symbol::d0);
  for (const auto& t : s.terms()) {
    if (t.powers.q >= 3) no_delta_rule(t.powers.q);
    if (t.powers.p != 0) throw std::invalid_argument("eval_dirac_squared: ddD must be substituted first");
    if (t.powers.q == 2) {
      out.value += t.coeff * origin_value(t.powers) * d0;
    } else {
      out.residual.push_back(t);
    }
  }
  out.residual = normalize(out.residual);
  return out;
}

Evaluated eval_dirac(const IntegrandSum& s) {
  Evaluated out;
  for (const auto& t : s.terms()) {
    if (t.powers.q >= 2) {
      if (t.powers.q >= 3) no_delta_rule(t.powers.q);
      throw RuleError("delta^2 must be evaluated before delta");
    }
    if (t.powers.p != 0) throw std::invalid_argument("eval_dirac: ddD must be substituted first");
    if (t.powers.q == 1) {
      out.value += t.coeff * origin_value(t.powers);
    } else {
      out.residual.push_back(t);
    }
  }
  out.residual = normalize(out.residual);
  return out;
}

Evaluated ibp_step(const IntegrandMonomial& t) {
  const auto& pw = t.powers;
  if (pw.p != 0 || pw.q != 0) throw std::invalid_argument("ibp_step: term still contains ddD or delta");
  if (pw.n == 0 || pw.n % 2 != 0)
    throw std::invalid_argument("ibp_step: needs an even, nonzero power of dD, got " + std::to_string(pw.n));
  const Rational scale(static_cast<int>(pw.n - 1), static_cast<int>(pw.m + 1));
  Evaluated out;
  if (pw.n == 2) out.value = t.coeff * ValuePoly(scale) * equal_time_D().pow(pw.m + 1);
  out.residual.push_back({{pw.m + 2, pw.n - 2, 0, 0}, t.coeff * ValuePoly(-scale) * ValuePoly::omega(2)});
  return out;
}

ValuePoly base_integral(std::uint32_t m) {
  if (m == 0) throw RuleError("divergent integral: Int dtau with no factors");
  Rational c(1, static_cast<int>(m));
  for (std::uint32_t i = 1; i < m; ++i) c /= 2;
  return ValuePoly::monomial(c, {-static_cast<std::int32_t>(m + 1), 0, 0, 0});
}

ReductionState apply_rule(std::string_view rule, const ReductionState& state) {
  ReductionState out{state.value, {}};
  if (rule == kFieldEquation) {
    out.pending = substitute_field_equation(state.pending);
  } else if (rule == kDiracSquared || rule == kDirac) {
    auto ev = rule == kDirac ? eval_dirac(state.pending) : eval_dirac_squared(state.pending);
    out.value += ev.value;
    out.pending = std::move(ev.residual);
  } else if (rule == kParity) {
    for (const auto& t : state.pending.terms()) {
      if (t.powers.n % 2 == 0) out.pending.push_back(t);
    }
  } else if (rule == kIbp) {
    for (const auto& t : state.pending.terms()) {
      if (t.powers.n >= 2) {
        auto ev = ibp_step(t);
        out.value += ev.value;
        out.pending += ev.residual;
      } else {
        out.pending.push_back(t);
      }
    }
    out.pending = normalize(out.pending);
  } else if (rule == kBaseIntegral) {
    for (const auto& t : state.pending.terms()) {
      const auto& pw = t.powers;
      if (pw.n != 0 || pw.p != 0 || pw.q != 0)
        throw std::invalid_argument("base_integral: term " + render_factors(pw) + " is not a pure power of D");
      out.value += t.coeff * base_integral(pw.m);
    }
  } else {
    throw std::invalid_argument("unknown rule '" + std::string(rule) + "'");
  }
  return out;
}

bool ReductionTrace::replays() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && !(steps[i - 1].after == steps[i].before)) return false;
    if (!(apply_rule(steps[i].rule, steps[i].before) == steps[i].after)) return false;
  }
  return true;
}

Reduction reduce(const IntegrandSum& s, bool record_trace) {
  ReductionState state{{}, normalize(s)};
  for (const auto& t : state.pending.terms()) {
    if (t.powers.q >= 3) no_delta_rule(t.powers.q);
    if (t.powers.is_bare()) throw RuleError("divergent integral: Int dtau with no factors");
  }

  Reduction result;
  auto step = [&](const char* rule) {
    ReductionState next = apply_rule(rule, state);
    if (next == state) return;
    if (record_trace) result.trace.steps.push_back({rule, state, next});
    state = std::move(next);
  };

  step(kFieldEquation);
  step(kDiracSquared);
  step(kDirac);
  step(kParity);
  // each round lowers the dD power of every remaining term by two
  auto has_derivative = [&] {
    for (const auto& t : state.pending.terms())
      if (t.powers.n >= 2) return true;
    return false;
  };
  while (has_derivative()) step(kIbp);
  step(kBaseIntegral);

  result.value = std::move(state.value);
  return result;
}

}  // namespace distprod
