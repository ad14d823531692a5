#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "pcompact/acceptance.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pcompact::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("adams json") {
    const auto r = run({"adams", "--group", "29", "--k", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("matrix")[0][0] == "125");
    CHECK(j.at("kind") == "evaluated");
  }

  TEST_CASE("v1pi spot value") {
    const auto r = run({"v1pi", "--group", "34", "--t", "5"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("group") == "Z/7^5");
    CHECK(j.at("agree") == true);
    CHECK(j.at("method") == nlohmann::json::array({"snf", "residual"}));
  }

  TEST_CASE("catalog table output") {
    const auto r = run({"catalog", "--case", "12", "--prime", "3", "--format", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("B(11,15)") != std::string::npos);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"adams", "--bogus"}).code == 2);
    CHECK(run({"adams", "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"catalog", "--case", "12"}).code == 2);
  }

  TEST_CASE("computation failures exit 1 with JSON") {
    const auto r = run({"catalog", "--case", "99", "--prime", "7"});
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("kind") == "not-found");
    const auto b = run({"v1pi", "--group", "29", "--t", "10000000", "--method", "snf"});
    CHECK(b.code == 1);
    CHECK(nlohmann::json::parse(b.out).at("kind") == "budget-exceeded");
  }

  TEST_CASE("huge t through the residual method") {
    const auto r = run({"v1pi", "--group", "29", "--t", "1831054687519", "--method", "residual"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("group") == "Z/5^20");
  }

  TEST_CASE("output does not depend on the thread count") {
    const auto a = run({"--threads", "1", "integrality", "--group", "29", "--verify"});
    const auto b = run({"--threads", "4", "integrality", "--group", "29", "--verify"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("verify-all on fast criteria") {
    const auto r = run({"verify-all", "--only", "8,12", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("criteria").size() == 2);
    CHECK(j.at("pass") == true);
  }

  TEST_CASE("criterion metadata") {
    CHECK(pcompact::criterion_tier(13) == 3);
    CHECK(pcompact::criterion_tier(9) == 1);
    CHECK_THROWS(pcompact::criterion_tier(14));
    pcompact::CriterionResult r;
    r.number = 4;
    r.title = "x";
    r.pass = true;
    CHECK(pcompact::format_result(r).rfind("PASS  4", 0) == 0);
  }
}
