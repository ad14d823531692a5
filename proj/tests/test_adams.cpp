#include <doctest.h>

#include "pcompact/adams.hpp"

using namespace pcompact;

TEST_SUITE("adams") {
  TEST_CASE("k-power combinations") {
    const KPowerCombo a = KPowerCombo::monomial(3, Rational(1, 5)) - KPowerCombo::monomial(7, Rational(1, 5));
    CHECK(a.evaluate(2) == -24);
    CHECK(a.to_string() == "1/5*k^3 - 1/5*k^7");
    CHECK((a - a).is_zero());
    CHECK((a * KPowerCombo::monomial(1, 1)).evaluate(2) == 2 * a.evaluate(2));
  }

  TEST_CASE("diagonal and triangularity") {
    for (GroupId id : kAllGroups) {
      const auto m = adams_matrix(id);
      CHECK(m.lower_triangular());
      for (std::size_t i = 0; i < m.basis.size(); ++i)
        CHECK(m.entries(i, i) == KPowerCombo::monomial(m.basis[i], 1));
      CHECK(m.evaluate(1) == RationalMatrix::identity(m.basis.size()));
    }
  }

  TEST_CASE("basis is degree minus one") {
    CHECK(adams_matrix(GroupId::G29).basis == std::vector<int>{3, 7, 11, 19});
    CHECK(adams_matrix(GroupId::G34).basis == std::vector<int>{5, 11, 17, 23, 29, 41});
  }

  TEST_CASE("composition for several pairs") {
    for (GroupId id : kAllGroups) {
      const auto m = adams_matrix(id);
      for (auto [j, k] : {std::pair{2L, 3L}, {3L, 5L}, {2L, 7L}, {-1L, 4L}}) CHECK(composition_holds(m, j, k));
    }
  }

  TEST_CASE("p-integrality at units and at p") {
    CHECK(p_integral_at(adams_matrix(GroupId::G29), 2));
    CHECK(p_integral_at(adams_matrix(GroupId::G29), 5));
    CHECK(p_integral_at(adams_matrix(GroupId::G34), 3));
    CHECK(p_integral_at(adams_matrix(GroupId::G34), 7));
  }

  TEST_CASE("psi^5 top-left entry") { CHECK(adams_matrix(GroupId::G29).evaluate(5)(0, 0) == 125); }

  TEST_CASE("reconstruction from the change of basis") {
    for (GroupId id : kAllGroups) CHECK(reconstruction_holds(id));
  }
}
