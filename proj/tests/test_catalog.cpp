#include <doctest.h>

#include "pcompact/catalog.hpp"
#include "pcompact/error.hpp"

using namespace pcompact;

TEST_SUITE("catalog") {
  TEST_CASE("table lookups") {
    CHECK(lookup("32", 7).space == "B(23,35,47,59)");
    CHECK(lookup(34, 19).space == "B(11,47,83) x B(23,59) x S^35");
    CHECK(lookup("G12", 3).space == "B(11,15)");
    CHECK_THROWS_AS(lookup("32", 11), NotFound);
    CHECK_THROWS_AS(lookup("banana", 5), ParseError);
  }

  TEST_CASE("family rules") {
    CHECK(lookup("X(2,2,6)", 7).space == "X(2,1,5) x S^11");
    CHECK(degree_bookkeeping_holds(lookup("X(2,2,6)", 7)));
    CHECK(lookup("X(6,6,2)", 5).space == "B(3,11)");
    CHECK(degree_bookkeeping_holds(lookup("X(6,6,2)", 5)));
    CHECK_THROWS_AS(lookup("X(4,2,3)", 7), NotFound);
  }

  TEST_CASE("every table row passes the bookkeeping and prime checks") {
    REQUIRE(table_rows().size() == 31);
    for (const auto& e : table_rows()) {
      INFO(e.case_label << " at " << e.prime);
      CHECK(degree_bookkeeping_holds(e));
      CHECK(admissible_prime(e.degrees, e.prime));
    }
  }

  TEST_CASE("corrected rows fail as tabulated") {
    int corrected = 0;
    for (const auto& e : table_rows()) {
      if (e.printed == e.space) continue;
      ++corrected;
      HomotopyTypeEntry raw = e;
      raw.factors = parse_space(e.printed);
      CHECK_FALSE(degree_bookkeeping_holds(raw));
      CHECK_FALSE(e.note.empty());
    }
    CHECK(corrected == 2);
  }

  TEST_CASE("space parsing") {
    const auto f = parse_space("B(3,23) x S^11 x X(2,1,5)");
    REQUIRE(f.size() == 3);
    CHECK(f[0].kind == SpaceFactor::kB);
    CHECK(f[1].dims == std::vector<int>{11});
    CHECK(f[2].kind == SpaceFactor::kFamily);
    CHECK_THROWS_AS(parse_space("T^4"), ParseError);
  }

  TEST_CASE("admissibility") {
    CHECK(admissible_prime({2, 12, 20, 30}, 11));
    CHECK_FALSE(admissible_prime({2, 12, 20, 30}, 31));
    CHECK(family_degrees(2, 2, 6) == std::vector<int>{2, 4, 6, 6, 8, 10});
  }
}
