#include <doctest.h>

#include <random>

#include "pcompact/matrix.hpp"
#include "pcompact/modular_system.hpp"
#include "pcompact/snf.hpp"

using namespace pcompact;

TEST_SUITE("linear") {
  TEST_CASE("rational inverse") {
    const RationalMatrix p{{1, 0, 0}, {Rational(-1, 5), 1, 0}, {Rational(-16, 25), Rational(-8, 5), 1}};
    const RationalMatrix inv = inverse(p);
    CHECK(inv * p == RationalMatrix::identity(3));
    CHECK(inv(1, 0) == Rational(1, 5));
  }

  TEST_CASE("modular solve on random consistent systems") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned long p = trial % 2 ? 5 : 7;
      const int k = 1 + trial % 4;
      const Integer mod = ipow(p, static_cast<unsigned long>(k));
      const std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 4;
      IntegerMatrix a(rows, cols);
      std::vector<Integer> x(cols), b(rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = Integer(static_cast<long>(rng() % 50)) * (rng() % 3 ? 1 : p);
      for (auto& v : x) v = Integer(static_cast<long>(rng() % 1000));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) b[i] += a(i, j) * x[j];
        b[i] = mod_floor(b[i], mod);
      }
      const auto s = solve_mod_prime_power(a, b, p, k);
      REQUIRE(s.solvable);
      CHECK(is_solution(a, s.x, b, mod));
    }
  }

  TEST_CASE("inconsistent modular system") {
    IntegerMatrix a(1, 1);
    a(0, 0) = 5;
    CHECK_FALSE(solve_mod_prime_power(a, {Integer(1)}, 5, 2).solvable);
  }

  TEST_CASE("smith diagonal of a textbook matrix") {
    const IntegerMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    const auto d = smith_diagonal(m);
    REQUIRE(d.size() == 3);
    CHECK(abs(d[0]) == 2);
    CHECK(abs(d[1]) == 6);
    CHECK(abs(d[2]) == 12);
  }

  TEST_CASE("global and local cokernels agree") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 2 + rng() % 3;
      IntegerMatrix m(n + 1 + rng() % 2, n);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long>(rng() % 41) - 20) * ((rng() % 4) ? 1 : 25);
      const PPart g = snf_cokernel_ppart(m, 5);
      if (g.free_rank > 0) continue;
      const PPart l = local_cokernel_ppart(m, 5, 40);
      CHECK(g.exponents == l.exponents);
      CHECK(g.order_exponent() == l.order_exponent());
    }
  }

  TEST_CASE("p-part of a cyclic cokernel") {
    const IntegerMatrix m{{125, 0}, {0, 3}, {0, 7}};
    const PPart p = snf_cokernel_ppart(m, 5);
    CHECK(p.cyclic());
    CHECK(p.exponent() == 3);
    CHECK(p.free_rank == 0);
  }
}
