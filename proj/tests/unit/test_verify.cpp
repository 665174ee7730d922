#include <set>

#include "doctest.h"
#include "tlbasis/errors.hpp"
#include "tlbasis/verify.hpp"

using namespace tlbasis;

TEST_CASE("catalog names are unique") {
  std::set<std::string> names;
  for (const auto& info : check_catalog()) {
    CHECK(names.insert(info.name).second);
    CHECK(info.default_n >= 1);
    CHECK_FALSE(info.description.empty());
  }
  for (const char* required : {"thm_final_1", "thm_final_2", "a4_nonmonomial", "prop_cube", "lem_xcommeb",
                               "prop_lesmemes", "thm_bijref", "lem_coeffdiag"})
    CHECK(names.count(required) == 1);
}

TEST_CASE("every check passes at rank 3") {
  const auto reports = run_all(3);
  CHECK(reports.size() == check_catalog().size());
  for (const auto& r : reports) {
    INFO(r.name);
    CHECK(r.passed());
    CHECK(r.failures.empty());
  }
  CHECK(all_passed(reports));
}

TEST_CASE("selection and determinism") {
  const auto a = run_all(4, {"thm_final_2"});
  REQUIRE(a.size() == 1);
  CHECK(a[0].name == "thm_final_2");
  CHECK(a[0].passed());
  CHECK(a[0].cases > 0);
  const auto b = run_all(4, {"thm_final_2"});
  CHECK(b[0].cases == a[0].cases);
  CHECK(run_check("prop_cube", 3).cases == run_check("prop_cube", 3).cases);
}

TEST_CASE("the rank 4 witness records a monomial") {
  const auto r = run_check("a4_nonmonomial", 4);
  CHECK(r.cases == 1);
  CHECK_FALSE(r.passed());
  CHECK(r.data["h_text"] == "v^3");
  CHECK(r.data["monomial"] == true);
  CHECK(r.data["x_equals_psi_w"] == true);
  CHECK(r.data["x_in_Q_w"] == true);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0]["w"]["J"] == nlohmann::json{1});
  // Below its rank the check reports no cases.
  CHECK(run_check("a4_nonmonomial", 3).cases == 0);
}

TEST_CASE("report JSON") {
  const auto j = to_json(run_check("catalan_counts", 2));
  for (const char* key : {"name", "description", "n", "cases", "passed", "failure_count", "failures", "elapsed"})
    CHECK(j.contains(key));
  CHECK(j["passed"] == true);
  CHECK(to_json(run_all(1)).is_array());
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(run_all(0), PreconditionError);
  CHECK_THROWS_AS(run_all(9), PreconditionError);
  CHECK_THROWS_AS(run_all(3, {"no_such_check"}), PreconditionError);
}
