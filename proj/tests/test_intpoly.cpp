#include <doctest.h>

#include <random>

#include "pcompact/error.hpp"
#include "pcompact/intpoly.hpp"

using namespace pcompact;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
  if (sgn(c.back()) == 0) c.back() = 1;
  return IntPoly(c);
}

}  // namespace

TEST_SUITE("intpoly") {
  TEST_CASE("basic arithmetic") {
    const IntPoly x = IntPoly::x();
    const IntPoly p = x * x - IntPoly(1);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(3) == 8);
    CHECK(p.to_string() == "x^2 - 1");
    CHECK(divide_exact(p, x - IntPoly(1)) == x + IntPoly(1));
    CHECK_THROWS(divide_exact(p, x));
  }

  TEST_CASE("taylor shift evaluates consistently") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const IntPoly f = random_poly(rng, 1 + trial % 5);
      const Integer a(static_cast<long>(rng() % 100) - 50), y(static_cast<long>(rng() % 30) - 15);
      CHECK(f.taylor_shift(a).evaluate(y) == f.evaluate(a + y));
    }
  }

  TEST_CASE("gcd divides both and is primitive") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const IntPoly common = random_poly(rng, 1 + trial % 2);
      const IntPoly a = common * random_poly(rng, 2), b = common * random_poly(rng, 3);
      const IntPoly g = gcd(a, b);
      CHECK(g.degree() >= common.degree());
      CHECK(g.content() == 1);
      CHECK(sgn(g.leading()) > 0);
      CHECK_NOTHROW(divide_exact(a, g));
      CHECK_NOTHROW(divide_exact(b, g));
    }
  }

  TEST_CASE("rational functions normalize") {
    const IntPoly x = IntPoly::x();
    const RatFunc f(IntPoly(6) * (x - IntPoly(1)) * (x + IntPoly(2)), IntPoly(4) * (x - IntPoly(1)));
    CHECK(f.num() == x + IntPoly(2));
    CHECK(f.den() == IntPoly(1));
    CHECK(f.scalar() == Rational(3, 2));
    CHECK(f.numerator_poly() == IntPoly(3) * (x + IntPoly(2)));
    const RatFunc g = f / f;
    CHECK(g == RatFunc(1));
    CHECK((f - f).is_zero());
  }

  TEST_CASE("valuations at a point") {
    const IntPoly x = IntPoly::x();
    const RatFunc f(x - IntPoly(8));
    CHECK(f.valuation_at(Integer(8 + 125), 5, 10) == 3);
    CHECK_FALSE(f.valuation_at(Integer(8), 5, 10).has_value());
    CHECK(f.unit_on_class(Integer(1), 5));
    CHECK_FALSE(f.unit_on_class(Integer(3), 5));
  }

  TEST_CASE("taylor valuations") {
    const IntPoly x = IntPoly::x();
    const IntPoly f = (x - IntPoly(8)) * (x - IntPoly(8));
    const auto v = taylor_valuations(f, Integer(8 + 25), 5, 12, 2);
    CHECK(v[0] == 4);
    CHECK(v[1] == 2);
    CHECK(v[2] == 0);
  }
}
