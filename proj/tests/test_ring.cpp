#include "distprod/value_poly.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace distprod;

namespace {

ValuePoly q(int num, int den = 1) { return ValuePoly(Rational(num, den)); }
ValuePoly w(int k) { return ValuePoly::omega(k); }
const ValuePoly d0 = ValuePoly::symbol(Symbol::d0);
const ValuePoly a = ValuePoly::symbol(Symbol::a);

}  // namespace

TEST_CASE("add") {
  CHECK((q(1, 2) * w(-1) + q(-1, 2) * w(-1)).is_zero());
  CHECK(d0 + d0 == q(2) * d0);
  CHECK(q(3, 32) * w(-1) + q(1, 32) * w(-1) == q(1, 8) * w(-1));
}

TEST_CASE("mul") {
  CHECK((q(1, 2) * w(-1)) * (q(1, 2) * w(-1)) == q(1, 4) * w(-2));
  CHECK(d0 * d0 == ValuePoly::symbol(Symbol::d0, 2));
  CHECK(a * (w(2) * q(1, 5)) == ValuePoly::monomial(Rational(1, 5), {2, 0, 1, 0}));
  CHECK(w(3) * w(-3) == q(1));
}

TEST_CASE("substitute") {
  Bindings half_a;
  half_a.a = Rational(1, 2);
  CHECK((q(3) * (a - q(1, 2)) * d0).substitute(half_a).is_zero());

  Bindings veltman;
  veltman.d0 = Rational(0);
  CHECK((d0.pow(2) + d0).substitute(veltman).is_zero());

  Bindings omega2;
  omega2.w = Rational(2);
  CHECK((q(1, 2) * w(-1)).substitute(omega2) == q(1, 4));

  SUBCASE("unbound symbols survive") {
    CHECK((a * w(-2) + d0).substitute(omega2) == q(1, 4) * a + d0);
  }
  SUBCASE("non-positive omega is rejected") {
    Bindings bad;
    bad.w = Rational(0);
    CHECK_THROWS_AS(w(1).substitute(bad), std::domain_error);
    bad.w = Rational(-1, 3);
    CHECK_THROWS_AS(w(-1).substitute(bad), std::domain_error);
  }
}

TEST_CASE("canonical rendering") {
  CHECK(ValuePoly().to_string() == "0");
  CHECK((q(-3, 32) * w(-1)).to_string() == "-3/32 w^-1");
  CHECK((q(2) * d0).to_string() == "2 d0");
  CHECK((d0 + q(1, 2) * w(1) - q(1)).to_string() == "d0 + 1/2 w - 1");
  // sorted by (g, d0, a, w) descending
  ValuePoly mixed = ValuePoly::symbol(Symbol::g, 2) * a + d0.pow(2) * w(-3) + a * w(2) - w(-1);
  CHECK(mixed.to_string() == "g^2 a + d0^2 w^-3 + a w^2 - w^-1");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/32") == Rational(3, 32));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(to_string(Rational(-4, 6)) == "-2/3");
}

TEST_CASE("g grading and degrees") {
  const ValuePoly g = ValuePoly::symbol(Symbol::g);
  ValuePoly x = g * d0 + g.pow(2) * (a + w(1)) - q(5);
  CHECK(x.g_order(1) == d0);
  CHECK(x.g_order(2) == a + w(1));
  CHECK(x.g_order(0) == q(-5));
  CHECK(x.degree(Symbol::g) == 2);
  CHECK(x.degree(Symbol::w) == 1);
  CHECK_FALSE(ValuePoly().degree(Symbol::a).has_value());
  CHECK(q(7, 3).as_constant() == Rational(7, 3));
  CHECK_FALSE(d0.as_constant().has_value());
}

TEST_CASE("property: ring laws") {
  testing::Gen gen(0x5eed01);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const ValuePoly x = gen.value_poly();
    const ValuePoly y = gen.value_poly();
    const ValuePoly z = gen.value_poly();
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x + (-x)).terms().empty());
    REQUIRE(x * q(1) == x);
  }
}

TEST_CASE("property: substitute is a ring homomorphism") {
  testing::Gen gen(0x5eed02);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const ValuePoly x = gen.value_poly();
    const ValuePoly y = gen.value_poly();
    Bindings b;
    if (gen.uniform(0, 1)) b.a = gen.rational();
    if (gen.uniform(0, 1)) b.d0 = gen.rational();
    if (gen.uniform(0, 1)) b.g = gen.rational();
    if (gen.uniform(0, 1)) b.w = Rational(gen.uniform(1, 5), gen.uniform(1, 4));
    REQUIRE((x + y).substitute(b) == x.substitute(b) + y.substitute(b));
    REQUIRE((x * y).substitute(b) == x.substitute(b) * y.substitute(b));
  }
}
