#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stein/checks.hpp"

using namespace stein;

TEST_CASE("every registered check runs at its defaults") {
  for (const auto& name : check_names()) {
    CheckParams params;
    if (name == "cycles" || name == "unipotent-fixed" || name == "prop10") params.n = 2;
    if (name == "product-compat") params.i = params.j = 1;
    const auto r = run_check(name, params);
    INFO(name, " ", r.witness.dump());
    CHECK(r.passed());
    CHECK(r.to_json()["check"] == name);
  }
  CHECK(check_names().size() == 16);
}

TEST_CASE("single checks") {
  CheckParams fh;
  fh.n = 2;
  fh.p = 3;
  const auto a = run_check("flag-homology", fh);
  CHECK(a.passed());
  CHECK(a.witness["B"]["top_rank"] == 3);
  CHECK(a.params["n"] == 2);
  CHECK(a.params["p"] == 3);

  CheckParams id;
  id.n = 1;
  CHECK(run_check("idempotent", id).passed());

  CheckParams t15;
  t15.group = "C4";
  t15.n = 1;
  t15.max_degree = 3;
  const auto t = run_check("theorem15", t15);
  CHECK(t.passed());
  CHECK(t.params["group"] == "C4");
  CHECK_FALSE(t.to_json()["elapsed_ms"].is_number());
  CHECK(run_check("theorem15", t15, true).to_json()["elapsed_ms"].is_number());
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(run_check("no-such-check", {}), std::invalid_argument);
  CheckParams bad;
  bad.n = 9;
  CHECK_THROWS_AS(run_check("flag-homology", bad), std::invalid_argument);
  CheckParams notprime;
  notprime.p = 4;
  CHECK_THROWS_AS(run_check("idempotent", notprime), std::invalid_argument);
  CheckParams mismatch;
  mismatch.group = "Z3";
  mismatch.p = 2;
  CHECK_THROWS_AS(run_check("hom-partition", mismatch), std::invalid_argument);
}

TEST_CASE("plans are deterministic across thread counts") {
  auto plan = suite_plan(SuiteLevel::Quick);
  REQUIRE(plan.size() > 6);
  plan.resize(6);
  nlohmann::json one = nlohmann::json::array(), four = nlohmann::json::array();
  for (const auto& r : run_plan(plan, 1)) one.push_back(r.to_json());
  for (const auto& r : run_plan(plan, 4)) four.push_back(r.to_json());
  CHECK(one.dump() == four.dump());
  for (std::size_t k = 0; k < plan.size(); ++k) CHECK(one[k]["check"] == plan[k].check);
}

TEST_CASE("markdown output") {
  CheckParams fh;
  fh.n = 2;
  const auto md = to_markdown({run_check("flag-homology", fh)});
  CHECK(md.find("flag-homology") != std::string::npos);
  CHECK(md.find("pass") != std::string::npos);
  CHECK(md.find('|') != std::string::npos);
}
