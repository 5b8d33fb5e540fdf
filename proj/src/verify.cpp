#include "distprod/verify.hpp"

#include "distprod/wick.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace distprod {

namespace {

ValuePoly r(int num, int den = 1) { return ValuePoly(Rational(num, den)); }
ValuePoly w(int k) { return ValuePoly::omega(k); }
const ValuePoly& d0() {
  static const ValuePoly v = ValuePoly::symbol(Symbol::d0);
  return v;
}
const ValuePoly& a() {
  static const ValuePoly v = ValuePoly::symbol(Symbol::a);
  return v;
}

// D(0) and Int D^2, written out rather than taken from the reducer.
const ValuePoly& D0() {
  static const ValuePoly v = r(1, 2) * w(-1);
  return v;
}
const ValuePoly& int_D2() {
  static const ValuePoly v = r(1, 4) * w(-3);
  return v;
}

IntegrandMonomial term(ValuePoly c, std::uint32_t m, std::uint32_t n = 0, std::uint32_t p = 0,
                       std::uint32_t q = 0) {
  return {{m, n, p, q}, std::move(c)};
}

struct Identity {
  std::string name;
  IntegrandSum lhs;
  ValuePoly rhs_local;
  IntegrandSum rhs_integrals;
};

CheckResult check_identity(const Identity& id) {
  auto reduced = reduce(id.lhs);
  ValuePoly expected = id.rhs_local;
  if (!id.rhs_integrals.empty()) expected += reduce_value(id.rhs_integrals);
  return make_check(id.name, expected, reduced.value, std::move(reduced.trace));
}

double to_double(const ValuePoly& v) {
  auto c = v.as_constant();
  if (!c) throw std::logic_error("value still contains symbols: " + v.to_string());
  return c->convert_to<double>();
}

ValuePoly class_value(const DiagramClass& cls) {
  ValuePoly v = cls.weight();
  if (cls.nonlocal() && !v.is_zero()) v *= reduce_value(IntegrandMonomial{cls.shape, ValuePoly(1)});
  return v;
}

ValuePoly group_sum(const std::vector<DiagramClass>& classes, DiagramGroup group) {
  ValuePoly sum;
  for (const auto& cls : classes)
    if (cls.group == group) sum += class_value(cls);
  return sum;
}

}  // namespace

CheckResult make_check(std::string name, ValuePoly expected, ValuePoly actual, std::optional<ReductionTrace> trace) {
  CheckResult c{std::move(name), std::move(expected), std::move(actual), false, std::move(trace)};
  c.passed = (c.expected - c.actual).is_zero();
  return c;
}

std::vector<CheckResult> identity_suite() {
  const ValuePoly w2 = w(2);
  const ValuePoly w4 = w(4);
  const ValuePoly D0cubed = D0().pow(3);
  const std::vector<Identity> identities = {
      {"Int dD^2 + w^2 D^2 = D(0)", IntegrandSum({term(1, 0, 2), term(w2, 2)}), D0(), {}},
      {"Int dD^2 = -Int D ddD", IntegrandSum(term(1, 0, 2)), {}, IntegrandSum(term(-1, 1, 0, 1))},
      {"Int ddD^2 + 2w^2 dD^2 + w^4 D^2 = Int delta^2",
       IntegrandSum({term(1, 0, 0, 2), term(r(2) * w2, 0, 2), term(w4, 2)}),
       {},
       IntegrandSum(term(1, 0, 0, 0, 2))},
      {"-Int ddD D^3 = D(0)^3 - w^2 Int D^4", IntegrandSum(term(-1, 3, 0, 1)), D0cubed,
       IntegrandSum(term(-w2, 4))},
      {"Int ddD D^3 = -3 Int dD^2 D^2", IntegrandSum(term(1, 3, 0, 1)), {}, IntegrandSum(term(-3, 2, 2))},
      {"Int dD^2 D^2 = D(0)^3/3 - w^2/3 Int D^4", IntegrandSum(term(1, 2, 2)), r(1, 3) * D0cubed,
       IntegrandSum(term(r(-1, 3) * w2, 4))},
      {"Int ddD dD^2 D = w^2 Int dD^2 D^2", IntegrandSum(term(1, 1, 2, 1)), {}, IntegrandSum(term(w2, 2, 2))},
      {"Int ddD dD^2 D = w^2 D(0)^3/3 - w^4/3 Int D^4", IntegrandSum(term(1, 1, 2, 1)),
       r(1, 3) * w2 * D0cubed, IntegrandSum(term(r(-1, 3) * w4, 4))},
      {"Int dD^4 = -3 Int D dD^2 ddD", IntegrandSum(term(1, 0, 4)), {}, IntegrandSum(term(-3, 1, 2, 1))},
      {"Int dD^4 = -w^2 D(0)^3 + w^4 Int D^4", IntegrandSum(term(1, 0, 4)), -w2 * D0cubed,
       IntegrandSum(term(w4, 4))},
      {"Int ddD^2 D^2 = Int D^2 delta^2 - 2w^2 D(0)^3 + w^4 Int D^4", IntegrandSum(term(1, 2, 0, 2)),
       r(-2) * w2 * D0cubed, IntegrandSum({term(1, 2, 0, 0, 2), term(w4, 4)})},
      {"Int delta^2 = d0", IntegrandSum(term(1, 0, 0, 0, 2)), d0(), {}},
      {"Int D^2 delta^2 = D(0)^2 d0", IntegrandSum(term(1, 2, 0, 0, 2)), D0().pow(2) * d0(), {}},
      {"Int dD^4 = -3/32 w^-1", IntegrandSum(term(1, 0, 4)), r(-3, 32) * w(-1), {}},
      {"Int ddD^2 D^2 = 1/4 d0 w^-2 - 7/32 w^-1", IntegrandSum(term(1, 2, 0, 2)),
       r(1, 4) * d0() * w(-2) - r(7, 32) * w(-1), {}},
      {"Int ddD dD^2 D = 1/32 w^-1", IntegrandSum(term(1, 1, 2, 1)), r(1, 32) * w(-1), {}},
  };
  std::vector<CheckResult> out;
  out.reserve(identities.size());
  for (const auto& id : identities) out.push_back(check_identity(id));
  return out;
}

std::vector<CheckResult> class_table_suite() {
  struct Expected {
    int order;
    DiagramGroup group;
    std::string vertices;
    LoopCounts loops;
    Powers shape;
    ValuePoly value;  // prefactor * coefficient
  };
  const ValuePoly half = r(-1, 2);
  const ValuePoly w2 = w(2);
  const ValuePoly w4 = w(4);
  using G = DiagramGroup;
  const std::string dd2 = "qdot^2 q^2";
  const std::string q4 = "q^4";
  const std::string jac = "jacobian q^2";
  const std::vector<Expected> table = {
      {1, G::local, dd2, {1, 1, 0}, {}, r(-1)},
      {1, G::local, q4, {2, 0, 0}, {}, -w2},
      {1, G::local, jac, {1, 0, 0}, {}, d0()},

      {2, G::local, "qdot^2 q^4", {2, 1, 0}, {}, r(3) * (r(1, 2) + a())},
      {2, G::local, "q^6", {3, 0, 0}, {}, r(15) * w2 * (r(1, 18) + r(1, 5) * a())},
      {2, G::local, "jacobian q^4", {2, 0, 0}, {}, r(-3) * (a() - r(1, 2)) * d0()},

      {2, G::jacobian_bubbles, jac + " x " + jac, {0, 0, 0}, {2, 0, 0, 0}, half * r(2) * d0().pow(2)},
      {2, G::jacobian_bubbles, dd2 + " x " + jac, {1, 0, 0}, {0, 2, 0, 0}, half * r(-4) * d0()},
      {2, G::jacobian_bubbles, dd2 + " x " + jac, {0, 1, 0}, {2, 0, 0, 0}, half * r(-4) * d0()},
      {2, G::jacobian_bubbles, q4 + " x " + jac, {1, 0, 0}, {2, 0, 0, 0}, half * r(-4) * d0() * r(2) * w2},

      {2, G::three_bubbles, dd2 + " x " + dd2, {1, 1, 0}, {0, 2, 0, 0}, half * r(4)},
      {2, G::three_bubbles, dd2 + " x " + dd2, {2, 0, 0}, {0, 0, 2, 0}, half * r(2)},
      {2, G::three_bubbles, dd2 + " x " + dd2, {0, 2, 0}, {2, 0, 0, 0}, half * r(2)},
      {2, G::three_bubbles, dd2 + " x " + q4, {2, 0, 0}, {0, 2, 0, 0}, half * r(8) * w2},
      {2, G::three_bubbles, dd2 + " x " + q4, {1, 1, 0}, {2, 0, 0, 0}, half * r(8) * w2},
      {2, G::three_bubbles, q4 + " x " + q4, {2, 0, 0}, {2, 0, 0, 0}, half * r(8) * w4},

      {2, G::watermelons, dd2 + " x " + dd2, {}, {2, 0, 2, 0}, half * r(4)},
      {2, G::watermelons, dd2 + " x " + dd2, {}, {1, 2, 1, 0}, half * r(4) * r(4)},
      {2, G::watermelons, dd2 + " x " + dd2, {}, {0, 4, 0, 0}, half * r(4)},
      {2, G::watermelons, dd2 + " x " + q4, {}, {2, 2, 0, 0}, half * r(4) * r(4) * w2},
      {2, G::watermelons, q4 + " x " + q4, {}, {4, 0, 0, 0}, half * r(4) * r(2, 3) * w4},
  };

  std::vector<CheckResult> out;
  for (int order : {1, 2}) {
    const auto classes = diagram_classes(order);
    std::size_t listed = 0;
    std::size_t generated = 0;
    for (const auto& cls : classes)
      if (cls.group != DiagramGroup::vanishing) ++generated;
    for (const auto& e : table) {
      if (e.order != order) continue;
      ++listed;
      ValuePoly actual;
      for (const auto& cls : classes) {
        if (cls.group == e.group && cls.vertices == e.vertices && cls.loops == e.loops && cls.shape == e.shape)
          actual = cls.prefactor * cls.coefficient;
      }
      std::string name = "order " + std::to_string(order) + " " + to_string(e.group) + ": " + e.vertices;
      name += " [qq=" + std::to_string(e.loops.qq) + " dd=" + std::to_string(e.loops.dd) + "]";
      if (!e.shape.is_bare()) name += " Int " + render_factors(e.shape);
      out.push_back(make_check(std::move(name), e.value, actual));
    }
    out.push_back(make_check("order " + std::to_string(order) + ": no unlisted non-vanishing classes",
                             r(static_cast<int>(listed)), r(static_cast<int>(generated))));
  }
  return out;
}

std::vector<CheckResult> diagram_identities() {
  std::vector<CheckResult> out;
  const auto first = diagram_classes(1);
  const auto second = diagram_classes(2);

  ValuePoly order1;
  for (const auto& cls : first) order1 += class_value(cls);
  out.push_back(make_check("order-1 diagrams sum to zero", {}, order1));

  const ValuePoly local = group_sum(second, DiagramGroup::local);
  const ValuePoly jac = group_sum(second, DiagramGroup::jacobian_bubbles);
  const ValuePoly bubbles = group_sum(second, DiagramGroup::three_bubbles);
  const ValuePoly melons = group_sum(second, DiagramGroup::watermelons);
  const ValuePoly vanishing = group_sum(second, DiagramGroup::vanishing);
  const ValuePoly D0sq = D0().pow(2);
  const ValuePoly D0cubed = D0().pow(3);

  out.push_back(make_check("local order-2 diagrams = 3 d0 D(0)^2 - 2/3 w^2 D(0)^3",
                           r(3) * d0() * D0sq - r(2, 3) * w(2) * D0cubed, local));
  out.push_back(make_check("jacobian bubbles = 2 d0 D(0)^2 + d0^2 Int D^2",
                           r(2) * d0() * D0sq + d0().pow(2) * int_D2(), jac));
  out.push_back(make_check("three-bubbles = -(Int delta^2 + 2 d0) D(0)^2 - d0^2 Int D^2",
                           r(-3) * d0() * D0sq - d0().pow(2) * int_D2(), bubbles));
  out.push_back(make_check("all bubbles = -Int delta^2 D(0)^2", -d0() * D0sq, jac + bubbles));
  out.push_back(make_check("watermelons = -2 Int D^2 delta^2 + 2/3 w^2 D(0)^3",
                           r(-2) * d0() * D0sq + r(2, 3) * w(2) * D0cubed, melons));
  out.push_back(make_check("local + watermelons = d0 D(0)^2", d0() * D0sq, local + melons));
  out.push_back(make_check("all bubbles + local + watermelons = 0", {}, jac + bubbles + local + melons));
  out.push_back(make_check("omitted diagrams vanish", {}, vanishing));

  auto contribution = order_contribution(2);
  ValuePoly direct = contribution.local + reduce_value(contribution.nonlocal);
  out.push_back(make_check("class table reproduces the order-2 contribution", direct.g_order(2),
                           local + jac + bubbles + melons + vanishing));
  return out;
}

CheckResult order_check(int n, const std::optional<Rational>& a_value, bool veltman) {
  auto contribution = order_contribution(n);
  Bindings no_d0;
  no_d0.d0 = Rational(0);
  if (veltman) {
    contribution.local = contribution.local.substitute(no_d0);
    IntegrandSum zeroed;
    for (const auto& t : contribution.nonlocal.terms()) zeroed.push_back({t.powers, t.coeff.substitute(no_d0)});
    contribution.nonlocal = normalize(zeroed);
  }
  auto reduced = reduce(contribution.nonlocal);
  ValuePoly total = contribution.local + reduced.value;
  if (a_value) {
    Bindings b;
    b.a = *a_value;
    total = total.substitute(b);
  }
  if (veltman) total = total.substitute(no_d0);

  std::string name = "order g^" + std::to_string(n) + " total vanishes";
  if (a_value) name += " at a = " + to_string(*a_value);
  if (veltman) name += " with d0 = 0";
  return make_check(std::move(name), {}, total, std::move(reduced.trace));
}

double quadrature_oracle(std::uint32_t m, std::uint32_t n, const Rational& omega) {
  if (n != 0 && n != 2) throw std::invalid_argument("quadrature oracle only covers dD^0 and dD^2");
  if (m + n == 0) throw std::invalid_argument("quadrature oracle needs at least one factor");
  if (omega <= 0) throw std::invalid_argument("quadrature oracle needs w > 0");
  const double om = omega.convert_to<double>();
  const double decay = static_cast<double>(m + n) * om;
  const double scale = std::pow(2.0 * om, -static_cast<double>(m)) * std::pow(0.25, static_cast<double>(n / 2));
  const double upper = 64.0 / decay;
  double error = 0;
  const double half = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double tau) { return scale * std::exp(-decay * tau); }, 0.0, upper, 20, 1e-13, &error);
  if (error > 1e-10 * std::abs(half)) throw std::runtime_error("quadrature did not reach 1e-10 relative error");
  return 2.0 * half;
}

ValuePoly lebesgue_integral(std::uint32_t m, std::uint32_t n) {
  if (n % 2 != 0) return {};
  if (m + n == 0) throw RuleError("divergent integral: Int dtau with no factors");
  // 2^-n (2w)^-m * 2/((m+n) w)
  Rational c(2, static_cast<int>(m + n));
  for (std::uint32_t i = 0; i < n + m; ++i) c /= 2;
  return ValuePoly::monomial(c, {-static_cast<std::int32_t>(m + 1), 0, 0, 0});
}

OracleComparison oracle_compare(std::uint32_t m, std::uint32_t n, const Rational& omega) {
  OracleComparison c{m, n, omega};
  c.quadrature = quadrature_oracle(m, n, omega);
  Bindings b;
  b.w = omega;
  c.reduced = to_double(reduce_value(IntegrandMonomial{{m, n, 0, 0}, ValuePoly(1)}).substitute(b));
  c.relative_error = std::abs(c.quadrature - c.reduced) / std::abs(c.reduced);
  c.passed = c.relative_error <= kOracleTolerance;
  return c;
}

std::vector<OracleComparison> oracle_suite() {
  std::vector<OracleComparison> out;
  for (const Rational& omega : {Rational(1, 2), Rational(1), Rational(2)}) {
    for (std::uint32_t n : {0U, 2U}) {
      for (std::uint32_t m = 0; m <= 6; ++m) {
        if (m + n == 0) continue;
        out.push_back(oracle_compare(m, n, omega));
      }
    }
  }
  return out;
}

CheckResult lebesgue_divergence_check() {
  ValuePoly rule = reduce_value(IntegrandMonomial{{0, 4, 0, 0}, ValuePoly(1)});
  return make_check("Lebesgue(dD^4) - reduce(dD^4) = 1/8 w^-1", r(1, 8) * w(-1), lebesgue_integral(0, 4) - rule);
}

}  // namespace distprod
