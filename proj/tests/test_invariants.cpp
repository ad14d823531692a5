#include <doctest.h>

#include "pcompact/invariants.hpp"
#include "pcompact/polynomial.hpp"

using namespace pcompact;

TEST_SUITE("invariants") {
  TEST_CASE("group names") {
    CHECK(parse_group("X31") == GroupId::G31);
    CHECK(parse_group("34") == GroupId::G34);
    CHECK(parse_group("g29") == GroupId::G29);
    CHECK_THROWS(parse_group("30"));
    CHECK(group_name(GroupId::G34) == "G34");
  }

  TEST_CASE("group data") {
    CHECK(group_data(GroupId::G29).prime == 5);
    CHECK(group_data(GroupId::G34).prime == 7);
    CHECK(group_data(GroupId::G34).degrees == std::vector<int>{6, 12, 18, 24, 30, 42});
    CHECK(group_data(GroupId::G31).degrees == std::vector<int>{8, 12, 20, 24});
  }

  TEST_CASE("partition enumeration") {
    CHECK(partitions_of(6, 6).size() == 11);
    CHECK(partitions_of(6, 2).size() == 4);
    const auto mons = degree_monomials(12, {4, 8, 12});
    CHECK(mons == std::vector<std::vector<int>>{{12}, {8, 4}, {4, 4, 4}});
  }

  TEST_CASE("f6 of G34 from the closed formula") {
    const SymPoly f6 = g34_invariant(1);
    CHECK(f6 == SymPoly(6, {{Partition{6}, -4}, {Partition{3, 3}, 40}, {Partition{1, 1, 1, 1, 1, 1}, 720}}));
  }

  TEST_CASE("G29 generators invariant under every matrix") {
    const auto fam = build_invariants(GroupId::G29);
    for (const auto& [d, f] : fam.polys)
      for (const auto& m : group_data(GroupId::G29).generators) {
        INFO("f" << d << " under " << m.name);
        CHECK(is_invariant(f, m.matrix));
      }
  }

  TEST_CASE("a non-invariant is detected") {
    const SymPoly m4(4, {{Partition{4}, 1}});
    bool all = true;
    for (const auto& m : group_data(GroupId::G29).generators) all = all && is_invariant(m4, m.matrix);
    CHECK_FALSE(all);
  }

  TEST_CASE("power sums in six variables") {
    PowerSumOptions raw;
    raw.normalize = false;
    CHECK(power_sum(3, raw).is_zero());
    CHECK(power_sum(4, raw).is_zero());
    CHECK(power_sum(6) == g34_invariant(1));
  }

  TEST_CASE("lattice of norm-2 vectors") {
    const auto set = lattice_vectors();
    CHECK(set.vectors.size() == 756);
    const auto rep = verify_lattice(set, group_data(GroupId::G34));
    CHECK(rep.ok());
    CHECK(rep.short_type == 270);
    for (const auto& v : set.vectors) CHECK(hermitian_norm(v) == 2);
    int printed = 0;
    for (const auto& b : rep.bullets)
      if (b.as_printed) {
        ++printed;
        CHECK_FALSE(b.source_in_set);
      }
    CHECK(printed == 1);
  }

  TEST_CASE("indecomposability mod p") {
    const auto g29 = build_invariants(GroupId::G29);
    for (int d : {8, 12, 20}) CHECK_FALSE(indecomposable_mod_p(g29, d).decomposable);
    const auto g34 = build_invariants(GroupId::G34);
    // f42 is f6^7 mod 7, which is why h42 replaces it.
    CHECK(indecomposable_mod_p(g34, 42).decomposable);
    const SymPoly h = divisibility_check_h42(g34);
    CHECK(h.is_homogeneous(42));
    CHECK_FALSE(decompose_mod_p(g34, h, 42, {6, 12, 18, 24, 30}, 7).decomposable);
  }

  TEST_CASE("f36 decomposition has 7-adic unit coefficients") {
    const auto d = decompose_f36();
    CHECK(d.rank == 10);
    CHECK(d.equations == 34);
    CHECK(d.residual_zero);
    for (const auto& q : d.q) CHECK(is_p_unit(q, 7));
    CHECK(d.q[0] == Rational(Integer("944610925401"), Integer("15161583716")));
  }
}
