#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "k3glue/scenario.hpp"

using namespace k3glue;

TEST_SUITE_BEGIN("scenario");

TEST_CASE("preset main expands the quoted data at a=1") {
  Scenario sc = load_scenario("main", {{"a", 1}});
  REQUIRE(sc.gluing.x1.centers.size() == 2);
  CHECK(sc.gluing.x1.centers[0].coords == IntVec{1, 0, 0});
  CHECK(sc.gluing.x1.centers[1].coords == IntVec{19, -4, 12});
  CHECK(sc.gluing.twist.matrix == IntMat(3, 3, {1, 2, 6, 0, -1, -2, 0, 2, 3}));
}

TEST_CASE("preset parameter validation") {
  CHECK_THROWS_AS(load_scenario("main", {}), InputError);
  CHECK_THROWS_AS(load_scenario("main", {{"a", 0}}), InputError);
  CHECK_THROWS_AS(load_scenario("main", {{"a", 1}, {"b", 1}}), InputError);
  // c < 8a^2 + 6 = 14 at a = 1
  CHECK_THROWS_AS(load_scenario("arbitrary_b2", {{"a", 1}, {"c", 14}}), InputError);
  CHECK_NOTHROW(load_scenario("arbitrary_b2", {{"a", 1}, {"c", 13}}));
  CHECK_THROWS_AS(load_scenario("oguiso", {{"a", 0}}), InputError);
  CHECK_THROWS_AS(load_scenario("no_such_preset", {}), InputError);
}

TEST_CASE("main(1) full run meets every expectation") {
  Report rep = run(load_scenario("main", {{"a", 1}}));
  CHECK(rep.all_expectations_met);
  CHECK(rep.doc["invariants"]["b2_x"] == 4);
  CHECK(rep.doc["invariants"]["e_x"] == -448);
  CHECK(rep.doc["projectivity"]["classification"] == "FiberRayOnly");
  // schema fields
  for (const char* key :
       {"scenario", "parameters", "hypotheses", "invariants", "certificates", "projectivity",
        "algdim", "expectations"})
    CHECK(rep.doc.contains(key));
}

TEST_CASE("oguiso(2) full run") {
  Report rep = run(load_scenario("oguiso", {{"a", 2}}));
  CHECK(rep.all_expectations_met);
  CHECK(rep.doc["invariants"]["b2_x"] == 1);
  CHECK(rep.doc["projectivity"]["classification"] == "TrivialOnly");
  CHECK(rep.doc["algdim"]["value"] == "0");
}

TEST_CASE("quartic preset flags the conditional restriction data") {
  Report rep = run(load_scenario("quartic_rho3", {}));
  CHECK(rep.all_expectations_met);
  CHECK(rep.doc["invariants"]["difference_map_surjective"] == false);
  CHECK(rep.doc["invariants"].contains("note"));
}

TEST_CASE("double blow-up preset verifies the obstruction decomposition") {
  for (Int a = 1; a <= 4; ++a) {
    Scenario sc = load_scenario("double_blowup", {{"a", a}});
    CHECK(sc.default_checks.count("projectivity") == 0);
    Report rep = run(sc, sc.default_checks);
    CHECK(rep.all_expectations_met);
  }
}

TEST_CASE("perturbed center fails the declared expectations") {
  Scenario sc = load_scenario("main", {{"a", 1}});
  override_center(sc, 1, 1, IntVec{2, 2, 2});
  Report rep = run(sc);
  CHECK(!rep.all_expectations_met);
  CHECK(rep.doc["hypotheses"]["d_semistable"] == false);
  bool dss_failed = false;
  for (const Json& e : rep.doc["expectations"])
    if (e["name"] == "d_semistable" && !e["pass"].get<bool>()) dss_failed = true;
  CHECK(dss_failed);
}

TEST_CASE("runs are deterministic and reports round-trip through JSON") {
  Report a = run(load_scenario("main", {{"a", 2}}));
  Report b = run(load_scenario("main", {{"a", 2}}));
  CHECK(a.to_json_text() == b.to_json_text());
  Json parsed = Json::parse(a.to_json_text());
  CHECK(parsed == a.doc);
  CHECK(parsed.dump(2) == a.to_json_text());
}

TEST_CASE("checks subsets prune stages and expectations") {
  Scenario sc = load_scenario("main", {{"a", 1}});
  Report rep = run(sc, parse_checks("hypotheses,invariants"));
  CHECK(rep.all_expectations_met);
  CHECK(!rep.doc.contains("projectivity"));
  CHECK(!rep.doc.contains("certificates"));
  for (const Json& e : rep.doc["expectations"]) CHECK(e["name"] != "classification");
  CHECK_THROWS_AS(parse_checks("bogus"), InputError);
}

TEST_CASE("sweep collects reports and per-item errors") {
  SweepResult res = sweep("main", "a", 1, 3, {}, parse_checks("hypotheses,invariants"));
  CHECK(res.all_expectations_met);
  CHECK(res.errors.empty());
  CHECK(res.doc["items"].size() == 3);
  std::string table = res.summary_text();
  CHECK(table.find("closed form") != std::string::npos);

  // c = 14 is invalid at a = 1: the error is collected, the sweep continues
  SweepResult bad = sweep("arbitrary_b2", "c", 13, 14, {{"a", 1}},
                          parse_checks("hypotheses,invariants"));
  CHECK(!bad.all_expectations_met);
  CHECK(bad.errors.size() == 1);
  CHECK(bad.doc["items"].size() == 2);

  SweepResult empty = sweep("main", "a", 2, 1, {}, all_checks());
  CHECK(empty.doc["items"].empty());
  CHECK(empty.all_expectations_met);
}

TEST_CASE("scenario files load and run") {
  const char* path = "test_scenario_tmp.json";
  {
    std::ofstream out(path);
    out << R"({
      "name": "file_main_1",
      "lattice": "wehler",
      "x1": {"ambient": "P1xP1xP1", "centers": [[1,0,0],[19,-4,12]]},
      "x2": {"ambient": "P1xP1xP1", "centers": []},
      "twist": {"kind": "wehler_iota_power", "a": 1},
      "certificates": [{"kind": "wehler_ample", "target": "center_ample", "class": [19,-4,12]}],
      "expectations": [
        {"name": "d_semistable", "stage": "hypotheses", "expected": true},
        {"name": "b2_x", "stage": "invariants", "expected": 4},
        {"name": "e_x", "stage": "invariants", "expected": -448},
        {"name": "center_ample", "stage": "ample", "expected": true},
        {"name": "classification", "stage": "projectivity", "expected": "FiberRayOnly"}
      ]
    })";
  }
  Scenario sc = load_scenario(path, {});
  Report rep = run(sc);
  CHECK(rep.all_expectations_met);
  std::remove(path);
  CHECK_THROWS_AS(load_scenario("missing_file.json", {}), InputError);
}

TEST_CASE("scenario files support inline gram data and explicit twist matrices") {
  const char* path = "test_scenario_inline_tmp.json";
  {
    std::ofstream out(path);
    out << R"({
      "name": "file_oguiso_1",
      "lattice": {"name": "oguiso", "gram": [[0,1,0],[1,0,0],[0,0,-20]],
                  "basis_labels": ["f","e","v"]},
      "x1": {"ambient": "P3", "h_on_s": [4,3,1], "centers": [[1,0,0],[231,24,20]]},
      "x2": {"ambient": "P3", "h_on_s": [4,3,1], "centers": []},
      "twist": {"kind": "matrix", "matrix": [[1,10,20],[0,1,0],[0,1,1]]},
      "expectations": [
        {"name": "d_semistable", "stage": "hypotheses", "expected": true},
        {"name": "b2_x0", "stage": "invariants", "expected": 1},
        {"name": "b2_x", "stage": "invariants", "expected": 0},
        {"name": "classification", "stage": "projectivity", "expected": "TrivialOnly"}
      ]
    })";
  }
  Report rep = run(load_scenario(path, {}));
  CHECK(rep.all_expectations_met);
  std::remove(path);
}

TEST_CASE("twist presets bind named parameters from the CLI map") {
  const char* path = "test_scenario_param_tmp.json";
  {
    std::ofstream out(path);
    out << R"({
      "name": "file_param_twist",
      "lattice": "wehler",
      "x1": {"ambient": "P1xP1xP1", "centers": [[1,0,0],[19,-4,12]]},
      "x2": {"ambient": "P1xP1xP1", "centers": []},
      "twist": {"kind": "wehler_iota_power", "a": "a"},
      "expectations": [{"name": "d_semistable", "stage": "hypotheses", "expected": true}]
    })";
  }
  CHECK(run(load_scenario(path, {{"a", 1}})).all_expectations_met);
  // unbound parameter
  CHECK_THROWS_AS(load_scenario(path, {}), InputError);
  // wrong twist power: declared expectation fails
  CHECK(!run(load_scenario(path, {{"a", 2}})).all_expectations_met);
  std::remove(path);
  // a matrix that is not an isometry of the gram form is rejected
  const char* bad = "test_scenario_bad_tmp.json";
  {
    std::ofstream out(bad);
    out << R"({
      "name": "bad_twist",
      "lattice": "wehler",
      "x1": {"ambient": "P1xP1xP1", "centers": []},
      "x2": {"ambient": "P1xP1xP1", "centers": []},
      "twist": {"kind": "matrix", "matrix": [[1,1,0],[0,1,0],[0,0,1]]}
    })";
  }
  CHECK_THROWS_AS(load_scenario(bad, {}), InputError);
  std::remove(bad);
  // center vector length must match the lattice rank
  const char* short_vec = "test_scenario_rank_tmp.json";
  {
    std::ofstream out(short_vec);
    out << R"({
      "name": "rank_mismatch",
      "lattice": "wehler",
      "x1": {"ambient": "P1xP1xP1", "centers": [[1,0]]},
      "x2": {"ambient": "P1xP1xP1", "centers": []},
      "twist": {"kind": "identity"}
    })";
  }
  CHECK_THROWS_AS(load_scenario(short_vec, {}), InputError);
  std::remove(short_vec);
}

TEST_CASE("oversized projectivity request raises a resource error") {
  Scenario sc = load_scenario("double_blowup", {{"a", 3}});
  CHECK_THROWS_AS(run(sc, parse_checks("projectivity")), ResourceError);
  // the designed stages still work at the same parameter
  CHECK(run(sc, sc.default_checks).all_expectations_met);
}

TEST_CASE("json integer helpers") {
  CHECK(json_int(Int(5)) == Json(5));
  Int big("123456789012345678901234567890");
  Json jb = json_int(big);
  CHECK(jb.is_string());
  CHECK(int_from_json(jb) == big);
  CHECK(json_int_equal(Json(5), Json("5")));
  CHECK(!json_int_equal(Json(5), Json("6")));
  CHECK(json_int_equal(Json::array({1, 2}), Json::array({"1", "2"})));
  CHECK(!json_int_equal(Json("FiberRayOnly"), Json("TrivialOnly")));
}

TEST_SUITE_END();
