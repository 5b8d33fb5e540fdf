#include "distprod/integrand.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace distprod;

namespace {

IntegrandMonomial mono(std::uint32_t m, std::uint32_t n, std::uint32_t p, std::uint32_t q, Rational c = 1) {
  return {{m, n, p, q}, ValuePoly(c)};
}

}  // namespace

TEST_CASE("mul_monomials") {
  CHECK(mul_monomials(mono(2, 0, 0, 0), mono(0, 0, 2, 0)) == mono(2, 0, 2, 0));
  CHECK(mul_monomials(mono(0, 2, 0, 0, 2), mono(1, 0, 0, 0, Rational(1, 2))) == mono(1, 2, 0, 0));
  CHECK(mul_monomials(mono(0, 0, 0, 1), mono(0, 0, 0, 1)) == mono(0, 0, 0, 2));
}

TEST_CASE("normalize") {
  CHECK(normalize(IntegrandSum({mono(0, 2, 0, 0), mono(0, 2, 0, 0)})) == IntegrandSum(mono(0, 2, 0, 0, 2)));
  CHECK(normalize(IntegrandSum({mono(2, 0, 0, 0), mono(2, 0, 0, 0, -1)})).empty());
  // lexicographic in (m, n, p, q)
  CHECK(normalize(IntegrandSum({mono(4, 0, 0, 0), mono(0, 0, 0, 2)})) ==
        IntegrandSum({mono(0, 0, 0, 2), mono(4, 0, 0, 0)}));
}

TEST_CASE("rendering") {
  CHECK(render_factors({0, 4, 0, 0}) == "dD^4");
  CHECK(render_factors({2, 0, 2, 0}) == "D^2 ddD^2");
  CHECK(render_factors({1, 1, 1, 1}) == "D dD ddD delta");
  CHECK(IntegrandSum().to_string() == "0");

  IntegrandSum lhs({mono(0, 2, 0, 0), {{2, 0, 0, 0}, ValuePoly::omega(2)}});
  CHECK(lhs.to_string() == "dD^2 + w^2 D^2");

  // multi-term coefficients expand into separate terms
  IntegrandSum split(IntegrandMonomial{{2, 0, 0, 0}, ValuePoly::symbol(Symbol::d0) - ValuePoly(Rational(3, 2))});
  CHECK(split.to_string() == "d0 D^2 - 3/2 D^2");
}

TEST_CASE("property: normalize is idempotent") {
  testing::Gen gen(0x1d3a);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const IntegrandSum s = gen.any_sum(6);
    const IntegrandSum once = normalize(s);
    REQUIRE(normalize(once) == once);
    for (const auto& t : once.terms()) REQUIRE_FALSE(t.coeff.is_zero());
  }
}

TEST_CASE("property: mul_monomials is commutative and associative") {
  testing::Gen gen(0x1d3b);
  for (int i = 0; i < testing::kPropertyCases; ++i) {
    const IntegrandMonomial x{gen.powers(4, 4, 2, 2), gen.value_poly(3)};
    const IntegrandMonomial y{gen.powers(4, 4, 2, 2), gen.value_poly(3)};
    const IntegrandMonomial z{gen.powers(4, 4, 2, 2), gen.value_poly(3)};
    REQUIRE(normalize(mul_monomials(x, y)) == normalize(mul_monomials(y, x)));
    REQUIRE(normalize(mul_monomials(mul_monomials(x, y), z)) == normalize(mul_monomials(x, mul_monomials(y, z))));
  }
}
