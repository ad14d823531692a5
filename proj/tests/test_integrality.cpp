#include <doctest.h>

#include "pcompact/integrality.hpp"

using namespace pcompact;

TEST_SUITE("integrality") {
  TEST_CASE("F-monomial text") {
    CHECK(fmonomial_to_string({8, 4}) == "F8F4");
    CHECK(fmonomial_to_string({4, 4, 4}) == "F4^3");
    CHECK(parse_fmonomial("F4^3") == FMonomial{4, 4, 4});
    CHECK(parse_fmonomial("F4F8") == FMonomial{8, 4});
    CHECK(fmonomial_degree({12, 4, 4}) == 20);
  }

  TEST_CASE("group settings") {
    CHECK(group_setting(GroupId::G29).cap == 20);
    CHECK(group_setting(GroupId::G31).cap == 24);
    CHECK(group_setting(GroupId::G34).cap == 42);
    CHECK(group_setting(GroupId::G34).step == 6);
  }

  TEST_CASE("every listed line is integral through its cap") {
    for (GroupId id : kAllGroups)
      for (const auto& c : listed_combinations(id)) {
        INFO(group_name(id) << " F" << c.base_degree);
        const auto ledger = verify_combination(c);
        CHECK(ledger.pass());
        CHECK(ledger.verified_through() == group_setting(id).cap);
      }
  }

  TEST_CASE("breaking one coefficient breaks integrality") {
    auto c = listed_combination(GroupId::G29, 4);
    c.set({8}, c.coeff({8}) + Rational(1, 5));
    const auto ledger = verify_combination(c);
    CHECK_FALSE(ledger.pass());
    CHECK(ledger.verified_through() < 8);
  }

  TEST_CASE("stated solutions at gradings 8 and 12") {
    const auto listed = listed_combination(GroupId::G29, 4);
    const auto s8 = check_listed_solution(listed, 8);
    CHECK(s8.solves);
    REQUIRE(s8.candidates.size() == 2);
    CHECK(s8.residues[0] == 1);  // F8
    CHECK(mod_floor(s8.residues[1] - 3, 5) == 0);  // F4^2, from -1/10
    const auto s12 = check_listed_solution(listed, 12);
    CHECK(s12.solves);
    CHECK(s12.k == 2);
  }

  TEST_CASE("the listed F4 line has a denominator prime to 5") {
    // -1/10 is 3/5 mod 1 locally, but it is not a pure 5-power denominator.
    CHECK_FALSE(listed_combination(GroupId::G29, 4).well_formed(5));
    CHECK(listed_combination(GroupId::G29, 8).well_formed(5));
  }

  TEST_CASE("derivation reproduces integral lines") {
    for (GroupId id : {GroupId::G29, GroupId::G31}) {
      const auto d = derive_combination(id, group_setting(id).adams_degrees.front(), false);
      CHECK(d.ok);
      CHECK(verify_combination(d.combination).pass());
    }
    const auto lin = derive_combination(GroupId::G34, 6, true);
    CHECK(lin.ok);
    for (const auto& [m, q] : lin.combination.terms) CHECK(m.size() == 1);
  }

  TEST_CASE("derived and listed F8 lines agree mod 5") {
    const auto d = derive_combination(GroupId::G29, 8, false);
    const auto listed = listed_combination(GroupId::G29, 8);
    const Rational diff = d.combination.coeff({12}) - listed.coeff({12});
    CHECK(is_p_integral(diff, 5));
  }

  TEST_CASE("two integrality pictures agree") {
    const auto c = listed_combination(GroupId::G29, 4);
    for (int g : {8, 12, 16, 20}) CHECK(compare_pictures(c, g).agree());
  }

  TEST_CASE("f36 transfers between pictures") { CHECK(verify_f36_transfer().matches); }
}
