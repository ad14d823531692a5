#include <doctest.h>

#include <random>

#include "pcompact/polynomial.hpp"
#include "pcompact/sympoly.hpp"

using namespace pcompact;

namespace {

SymPoly random_sympoly(std::mt19937& rng, int nvars, int max_degree) {
  SymPoly f(nvars);
  for (int i = 0; i < 3; ++i) {
    std::vector<int> parts;
    int total = 0;
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(nvars));
    for (int j = 0; j < len && total < max_degree; ++j) {
      const int part = 1 + static_cast<int>(rng() % 3);
      parts.push_back(part);
      total += part;
    }
    std::sort(parts.rbegin(), parts.rend());
    Rational c(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4);
    c.canonicalize();
    f.add_term(Partition::from_parts(parts), c);
  }
  return f;
}

}  // namespace

TEST_SUITE("sympoly") {
  TEST_CASE("partitions") {
    const Partition e{4, 4, 1, 1};
    CHECK(e.grading() == 10);
    CHECK(e.length() == 4);
    CHECK(e.orbit_size(6) == 90);  // 6! / (2! 2! 2!)
    CHECK(Partition{3, 3}.to_string() == "(3,3)");
  }

  TEST_CASE("m_1 squared") {
    const SymPoly sq = m_product(Partition{1}, Partition{1}, 3);
    CHECK(sq == SymPoly(3, {{Partition{2}, 1}, {Partition{1, 1}, 2}}));
  }

  TEST_CASE("ring laws on random symmetric polynomials") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
      const SymPoly f = random_sympoly(rng, 3, 4), g = random_sympoly(rng, 3, 4), h = random_sympoly(rng, 3, 4);
      CHECK(multiply(f, g) == multiply(g, f));
      CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
      CHECK(multiply(f, g + h) == multiply(f, g) + multiply(f, h));
      CHECK(power(f, 3) == multiply(f, multiply(f, f)));
    }
  }

  TEST_CASE("products agree with literal expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const SymPoly f = random_sympoly(rng, 3, 3), g = random_sympoly(rng, 3, 3);
      const Polynomial lhs = full_expand(multiply(f, g));
      // Multiply the literal expansions by hand.
      const Polynomial a = full_expand(f), b = full_expand(g);
      Polynomial rhs(3);
      for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
          std::vector<int> e(3);
          for (int v = 0; v < 3; ++v) e[static_cast<std::size_t>(v)] = key_exponent(ka, v) + key_exponent(kb, v);
          rhs.add_term(make_key(e), ca * cb);
        }
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("truncation helpers") {
    const SymPoly f(4, {{Partition{4}, 1}, {Partition{1, 1, 1, 1}, -12}, {Partition{8}, 3}});
    CHECK(f.component(4).size() == 2);
    CHECK(f.truncate(4).max_grading() == 4);
    CHECK(f.restrict_length(2).size() == 2);
    CHECK(f.component(4).is_homogeneous(4));
  }

  TEST_CASE("typical log tail") {
    const auto tail = SubstitutionTail::typical_log(5, 25);
    CHECK(tail.terms().size() == 2);
    CHECK(tail.step() == 4);
    // m_(1)(x + x^5/5) in two variables: grading 5 is m_(5)/5.
    const SymPoly c = padic_log_substitute(Partition{1}, tail, 5, 2);
    CHECK(c == SymPoly(2, {{Partition{5}, Rational(1, 5)}}));
    CHECK(padic_log_substitute(Partition{1}, tail, 3, 2).is_zero());
  }

  TEST_CASE("graded series multiply within the cap") {
    const SymPoly x(2, {{Partition{1}, 1}});
    const GradedSeries s(x, 3);
    const GradedSeries cube = s.pow(3);
    CHECK(cube.component(3) == power(x, 3));
    CHECK((s * s).cap() == 3);
  }
}
