#include <doctest.h>

#include <fstream>
#include <nlohmann/json.hpp>
#include <random>

#include "pcompact/error.hpp"
#include "pcompact/v1pi.hpp"

using namespace pcompact;

namespace {

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(PCOMPACT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_SUITE("v1pi") {
  TEST_CASE("generators of units mod p^2") {
    CHECK(generates_units_mod_p2(2, 5));
    CHECK(generates_units_mod_p2(3, 7));
    CHECK_FALSE(generates_units_mod_p2(7, 5));
    CHECK_FALSE(generates_units_mod_p2(2, 7));
    CHECK(v1_setting(GroupId::G34).r == 3);
    CHECK(v1_setting(GroupId::G29).period == 20);
  }

  TEST_CASE("presentation shape") {
    const auto m = presentation_matrix(GroupId::G34);
    CHECK(m.rows() == 12);
    CHECK(m.cols() == 6);
    CHECK(m(6, 0) == IntPoly(243) - IntPoly::x());
    CHECK_THROWS_AS(presentation_matrix_at(GroupId::G29, 10'000'000), BudgetExceeded);
  }

  TEST_CASE("spot values by both methods") {
    struct Case {
      GroupId id;
      long t;
      int e;
    };
    for (auto c : {Case{GroupId::G29, 3, 3}, Case{GroupId::G29, 7, 7}, Case{GroupId::G29, 27, 4},
                   Case{GroupId::G29, 4, 0}, Case{GroupId::G34, 5, 5}, Case{GroupId::G34, 6, 0}}) {
      INFO(group_name(c.id) << " t=" << c.t);
      CHECK(snf_group(c.id, c.t).exponent == c.e);
      CHECK(exponent_at(c.id, c.t).exponent == c.e);
    }
  }

  TEST_CASE("residual method matches SNF on the odd presentation order") {
    for (long t = 1; t <= 60; ++t) CHECK(orders_equal(GroupId::G31, t));
  }

  TEST_CASE("class reduction leaves one column on the nonzero class") {
    const auto& res = reduce_to_residuals(GroupId::G29);
    CHECK(res.classes.at(3).single_column());
    CHECK(res.classes.at(3).transcript.size() == 3);
    CHECK(res.classes.at(1).remaining.cols() == 0);
  }

  TEST_CASE("valuation profile table for G29") {
    const auto g = golden("exptbl.json");
    const auto polys =
        replay_pivots(to_ratfunc(presentation_matrix(GroupId::G29)), {{4, 1}, {5, 2}, {4, 1}}).polynomials();
    REQUIRE(polys.size() == 5);
    const int n = g.at("precision").get<int>();
    for (const auto& row : g.at("rows")) {
      const Integer m(row.at("m_value").get<std::string>());
      const Integer x = pow_mod(2, m, ipow(5ul, static_cast<unsigned long>(n)));
      for (std::size_t i = 0; i < 5; ++i) {
        const auto got = taylor_valuations(polys[i], x, 5, n, 3);
        for (std::size_t j = 0; j < 4; ++j) {
          const auto& want = row.at("exponents")[i][j];
          INFO("m=" << row.at("m").get<std::string>() << " p" << i + 1 << " y^" << j);
          if (want.is_null()) CHECK_FALSE(got[j].has_value());
          else CHECK(got[j] == want.get<long>());
        }
      }
    }
  }

  TEST_CASE("linear profile table for G34") {
    const auto g = golden("polystbl.json");
    const auto& cr = reduce_to_residuals(GroupId::G34).classes.at(g.at("x_class").get<long>());
    const auto polys = cr.polynomials();
    const int n = g.at("precision").get<int>();
    const auto& p1 = polys.at(g.at("polynomials").at("p1").get<std::size_t>());
    const auto& p2 = polys.at(g.at("polynomials").at("p2").get<std::size_t>());
    for (const auto& row : g.at("rows")) {
      const Integer x = pow_mod(3, Integer(row.at("m_value").get<std::string>()), ipow(7ul, static_cast<unsigned long>(n)));
      const auto a = taylor_valuations(p1, x, 7, n, 1), b = taylor_valuations(p2, x, 7, n, 1);
      INFO("m=" << row.at("m").get<std::string>());
      CHECK(a[0] == row.at("p1")[0].get<long>());
      CHECK(a[1] == row.at("p1")[1].get<long>());
      if (row.at("p2_constant_at_least").get<bool>()) CHECK(*b[0] >= row.at("p2")[0].get<long>());
      else CHECK(b[0] == row.at("p2")[0].get<long>());
      CHECK(b[1] == row.at("p2")[1].get<long>());
    }
  }

  TEST_CASE("closed forms predict random large t") {
    std::mt19937_64 rng(31337);
    for (GroupId id : kAllGroups) {
      const auto cf = closed_form(id);
      const auto s = v1_setting(id);
      for (int trial = 0; trial < 40; ++trial) {
        const auto& c = cf.classes[static_cast<std::size_t>(rng() % cf.classes.size())];
        Integer t = c.kind == ClassForm::kPeak ? c.t_star : Integer(c.residue + s.period);
        t += Integer(s.period) * ipow(s.p, rng() % 30) * Integer(static_cast<unsigned long>(1 + rng() % 1000));
        INFO(group_name(id) << " t=" << t.get_str());
        CHECK(cf.predict(t) == exponent_at(id, t).exponent);
      }
    }
  }

  TEST_CASE("G29 and G34 closed forms match the stated ones") {
    CHECK(compare_closed_form(closed_form(GroupId::G29), listed_closed_form(GroupId::G29)).ok());
    CHECK(compare_closed_form(closed_form(GroupId::G34), listed_closed_form(GroupId::G34)).ok());
    CHECK(closed_form(GroupId::G29).rows().front().second == "t != 3 mod 4");
  }

  TEST_CASE("G31 closed form differs from the stated one") {
    const auto cf = closed_form(GroupId::G31);
    const auto cmp = compare_closed_form(cf, listed_closed_form(GroupId::G31));
    CHECK_FALSE(cmp.ok());
    // Direct SNF at t = 15 already disagrees with a stated constant 5^3.
    CHECK(snf_group(GroupId::G31, 15).exponent == 4);
    CHECK(cf.classes[15].kind == ClassForm::kConstant);
    CHECK(cf.classes[15].constant == 4);
  }

  TEST_CASE("odd presentations are cyclic") {
    CHECK(verify_cyclic_odd(GroupId::G29).min_pivots == 3);
    CHECK(verify_cyclic_odd(GroupId::G31).min_pivots == 3);
    CHECK(verify_cyclic_odd(GroupId::G34).min_pivots == 5);
  }

  TEST_CASE("B-space formulas") {
    CHECK(bspace_group({11, 35, 59, 83}, 13, 5).exponent == 5);
    CHECK(bspace_group({11, 35, 59, 83}, 13, 6).trivial());
    CHECK(bspace_group({11, 35, 59, 83}, 13, 17).exponent == 17);
    CHECK(bspace_group({11, 35, 59, 83}, 13, 17 + 12 * 13).exponent == 5);
    CHECK(bspace_group({11, 47, 83}, 19, 23).exponent == 23);
    CHECK(bspace_group({11, 47, 83}, 19, 24).trivial());
    CHECK_THROWS_AS(bspace_group({3, 11}, 5, 1), NotFound);
  }

  TEST_CASE("large t stress value") {
    CHECK(snf_group(GroupId::G29, 2507).exponent == 8);
    CHECK(exponent_at(GroupId::G29, Integer(2507)).exponent == 8);
  }
}
