#include <doctest.h>

#include <random>

#include "pcompact/error.hpp"
#include "pcompact/exact.hpp"

using namespace pcompact;

TEST_SUITE("exact") {
  TEST_CASE("valuations of integers and rationals") {
    CHECK(valuation(Integer(250), 5) == Valuation::finite(3));
    CHECK(valuation(Rational(3, 125), 5) == Valuation::finite(-3));
    CHECK(valuation(Integer(0), 7).is_infinite());
    CHECK(min(Valuation::infinity(), Valuation::finite(2)) == Valuation::finite(2));
    CHECK(Valuation::finite(4) < Valuation::infinity());
    CHECK(is_p_unit(Rational(944610925401, 15161583716), 7));
    CHECK_FALSE(is_p_integral(Rational(1, 10), 5));
  }

  TEST_CASE("pow_mod agrees with repeated multiplication") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned long base = rng() % 1000, e = rng() % 60, m = 1 + rng() % 100000;
      Integer naive = 1;
      for (unsigned long i = 0; i < e; ++i) naive = (naive * base) % m;
      CHECK(pow_mod(base, e, m) == naive);
    }
    CHECK(pow_mod(2, 20, 25) == 1);  // 2 has order 20 mod 25
  }

  TEST_CASE("residues of p-integral rationals") {
    const Integer m = 125;
    CHECK(mod_floor(to_residue(Rational(1, 2), m) * 2, m) == 1);
    CHECK(to_residue(Rational(-3), m) == 122);
    CHECK_THROWS(to_residue(Rational(1, 5), m));
  }

  TEST_CASE("combinatorics") {
    CHECK(binomial(12, 3) == 220);
    CHECK(factorial(10) == 3628800);
    const int parts[] = {4, 4, 1, 1, 1, 1};
    CHECK(multinomial(parts) == Integer("831600"));
  }

  TEST_CASE("rational text round trip and fractional part") {
    for (const char* s : {"0", "-7", "22/49", "-16647/16807"}) CHECK(to_string(parse_rational(s)) == s);
    CHECK(fractional_part(Rational(-1, 10)) == Rational(9, 10));
    CHECK(fractional_part(Rational(6)) == 0);
    CHECK(fractional_part(parse_rational("-7/3")) == Rational(2, 3));
  }

  TEST_CASE("cyclotomic arithmetic") {
    const auto w = CycRational::omega();
    CHECK(w * w * w == CycRational(1));
    CHECK(CycRational::sqrt_minus3() * CycRational::sqrt_minus3() == CycRational(-3));
    CHECK(CycRational::omega_pow(-4) == w * w);
    CHECK(w.norm() == 1);
    CHECK((w / (w + CycRational(2))) * (w + CycRational(2)) == w);
    CHECK(CycRational::i() * CycRational::i() == CycRational(-1));
    CHECK_THROWS_AS(CycRational::i() + w, FieldMismatch);
    // Q promotes into either field.
    CHECK((CycRational(Rational(1, 2)) + w).field() == Field::Qw);
  }
}
