#include <string>

#include "doctest.h"
#include "json.hpp"
#include "matroid/catalog.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/json_io.hpp"
#include "matroid/treedecomp.hpp"

using namespace matroid;

TEST_SUITE_BEGIN("json serialization");

TEST_CASE("matroid documents are compact with a fixed key order") {
  CHECK(matroid_to_json(named("U(2,4)")) ==
        R"({"ground":["a","b","c","d"],"bases":[["a","b"],["a","c"],["b","c"],["a","d"],["b","d"],["c","d"]]})");
  CHECK(matroid_to_json(named("U(0,0)")) == R"({"ground":[],"bases":[[]]})");
  CHECK(matroid_to_json(named("U(0,1)"), true) ==
        R"({"ground":["a"],"circuits":[["a"]]})");
}

TEST_CASE("round trips") {
  for (const char* name : {"MW(2)", "MK23", "U(0,1)+U(2,3)", "U(2,2)"}) {
    CAPTURE(name);
    Matroid m = named(name);
    CHECK(same_labeled_matroid(matroid_from_json(matroid_to_json(m)), m));
    CHECK(same_labeled_matroid(matroid_from_json(matroid_to_json(m, true)), m));
  }
  Matroid m4 = proof_constructions(named("U(2,3)"))[1].second;
  CHECK(same_labeled_matroid(matroid_from_json(matroid_to_json(m4, true)), m4));
}

TEST_CASE("parsing documents") {
  SUBCASE("graph documents carry labels in the edge triples") {
    Matroid m = matroid_from_json(
        R"({"graph":[["1","2","a"],["1","3","b"],["1","4","c"],
            ["2","3","d"],["2","4","e"],["3","4","f"]]})");
    CHECK(same_labeled_matroid(m, named("MK4")));
  }
  SUBCASE("free matroid from an empty circuit list") {
    Matroid m = matroid_from_json(R"({"ground":["a","b"],"circuits":[]})");
    CHECK(m.size() == 2);
    CHECK(m.rank() == 2);
  }
  SUBCASE("malformed documents") {
    CHECK_THROWS_AS(matroid_from_json("not json"), MatroidError);
    CHECK_THROWS_AS(matroid_from_json("[]"), MatroidError);
    CHECK_THROWS_AS(matroid_from_json(R"({"ground":["a"]})"), MatroidError);
    CHECK_THROWS_AS(
        matroid_from_json(R"({"ground":[],"bases":[[]],"circuits":[]})"),
        MatroidError);
    CHECK_THROWS_AS(
        matroid_from_json(R"({"ground":["a"],"graph":[["u","v","a"]]})"),
        MatroidError);
    CHECK_THROWS_AS(
        matroid_from_json(R"({"ground":["a"],"bases":[["a"]],"extra":1})"),
        MatroidError);
    CHECK_THROWS_AS(matroid_from_json(R"({"ground":"ab","bases":[["a"]]})"),
                    MatroidError);
    CHECK_THROWS_AS(matroid_from_json(R"({"ground":["a"],"bases":[["a",1]]})"),
                    MatroidError);
    CHECK_THROWS_AS(matroid_from_json(R"({"graph":[["u","v"]]})"),
                    MatroidError);
    CHECK_THROWS_AS(
        matroid_from_json(R"({"ground":["a","a"],"bases":[["a"]]})"),
        MatroidError);
    // Families that parse but violate the axioms reuse the axiom errors.
    CHECK_THROWS_AS(matroid_from_json(R"({"ground":["a","b"],"bases":[]})"),
                    MatroidError);
    CHECK_THROWS_AS(
        matroid_from_json(R"({"ground":["a","b"],"bases":[["a"],["a","b"]]})"),
        MatroidError);
  }
}

TEST_CASE("minor witnesses serialize the kept-element map") {
  Matroid m4 = proof_constructions(named("U(2,3)"))[1].second;
  Matroid target = named("U(2,3)");
  auto w = has_minor_using(m4, target, m4.ground().subset_of({"a", "g"}));
  REQUIRE(w.has_value());
  nlohmann::json doc = nlohmann::json::parse(witness_to_json(m4, target, *w));
  REQUIRE(doc.contains("contract"));
  REQUIRE(doc.contains("delete"));
  REQUIRE(doc.contains("map"));
  CHECK(doc["map"].size() == 3);
  for (const auto& [from, to] : doc["map"].items()) {
    CHECK(m4.ground().index_of(from) >= 0);
    CHECK(target.ground().index_of(to.get<std::string>()) >= 0);
  }
  int removed = static_cast<int>(doc["contract"].size() + doc["delete"].size());
  CHECK(removed == m4.size() - target.size());
}

TEST_CASE("decomposition trees serialize with sorted edges") {
  DecompTree t = canonical_tree(named("MK23"));
  std::string text = tree_to_json(t);
  CHECK(text == tree_to_json(canonical_tree(named("MK23"))));
  nlohmann::json doc = nlohmann::json::parse(text);
  REQUIRE(doc.contains("original"));
  REQUIRE(doc.contains("vertices"));
  REQUIRE(doc.contains("edges"));
  CHECK(doc["vertices"].size() == 4);
  REQUIRE(doc["edges"].size() == 3);
  std::pair<int, int> previous{-1, -1};
  for (const auto& edge : doc["edges"]) {
    std::pair<int, int> key{edge["u"].get<int>(), edge["v"].get<int>()};
    CHECK(key.first < key.second);
    CHECK(previous < key);
    previous = key;
    CHECK(edge["basepoint"].is_string());
  }
}

TEST_CASE("verification reports") {
  VerificationReport rep;
  rep.theorem_id = "T1";
  rep.universe = "all classes";
  rep.instances_checked = 12;
  rep.status = "pass";
  rep.counterexamples.push_back({named("U(1,2)"), "spurious note"});
  rep.wall_time_seconds = 1.5;

  std::string timed = report_to_json(rep, true);
  std::string untimed = report_to_json(rep, false);
  CHECK(timed.find("wall_time_seconds") != std::string::npos);
  CHECK(untimed.find("wall_time_seconds") == std::string::npos);

  nlohmann::json doc = nlohmann::json::parse(timed);
  CHECK(doc["theorem_id"] == "T1");
  CHECK(doc["instances_checked"] == 12);
  REQUIRE(doc["counterexamples"].size() == 1);
  CHECK(doc["counterexamples"][0]["note"] == "spurious note");
  CHECK(doc["counterexamples"][0]["matroid"]["ground"].size() == 2);
}

TEST_SUITE_END();
