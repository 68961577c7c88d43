#include <string>
#include <vector>

#include "doctest.h"
#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/matroid.hpp"

using namespace matroid;

namespace {

int triangle_count(const Matroid& m) {
  int count = 0;
  for_each_k_subset(m.ground_mask(), 3, [&](Subset s) {
    if (m.is_circuit(s)) ++count;
  });
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("catalog");

TEST_CASE("uniform atoms") {
  Matroid u24 = named("U(2,4)");
  CHECK(u24.size() == 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.ground().labels() == std::vector<std::string>{"a", "b", "c", "d"});

  CHECK(named("U(0,3)").loops() == 0b111u);
  CHECK(named("U(3,3)").coloops() == 0b111u);
  CHECK(named("U(0,0)").size() == 0);

  CHECK_THROWS_AS(named("U(5,3)"), MatroidError);
  CHECK_THROWS_AS(named("U(2,17)"), MatroidError);
  CHECK_THROWS_AS(named("U(2)"), MatroidError);
}

TEST_CASE("wheels, whirls and their relaxations") {
  Matroid w2 = named("MW(2)");
  CHECK(w2.ground().labels() ==
        std::vector<std::string>{"s1", "s2", "r1", "r2"});
  CHECK(w2.circuits().size() == 3);
  CHECK(w2.is_circuit(w2.ground().subset_of({"r1", "r2"})));

  CHECK(isomorphic(named("MW(3)"), named("MK4")).has_value());
  CHECK(isomorphic(named("W(2)"), named("U(2,4)")).has_value());

  // Relaxing circuit-hyperplanes one at a time walks from the rank-3 wheel
  // down to the uniform matroid, dropping one triangle per step.
  const char* chain[] = {"MW(3)", "W(3)", "Q6", "P6", "U(3,6)"};
  int expected_triangles = 4;
  for (const char* name : chain) {
    Matroid m = named(name);
    CHECK(m.size() == 6);
    CHECK(m.rank() == 3);
    CHECK(triangle_count(m) == expected_triangles);
    --expected_triangles;
  }
  CHECK(is_k_connected(named("Q6"), 3));
  CHECK(is_k_connected(named("P6"), 3));

  Matroid mk23 = named("MK23");
  CHECK(mk23.size() == 6);
  CHECK(mk23.rank() == 4);
  CHECK(is_binary(mk23));
  CHECK(mk23.is_cocircuit(mk23.ground().subset_of({"a", "b"})));
}

TEST_CASE("composition expressions") {
  SUBCASE("direct sum renames atoms to fresh letters") {
    Matroid m = named("U(1,1)+U(1,1)");
    CHECK(m.ground().labels() == std::vector<std::string>{"a", "b"});
    CHECK(m.coloops() == 0b11u);
  }
  SUBCASE("2-sum names the basepoint on both sides") {
    Matroid m = named("U(2,4)~U(2,4)@b");
    CHECK(m.size() == 6);
    CHECK(m.circuits().size() == 11);
    CHECK(m.ground().index_of("b") == -1);  // consumed by the 2-sum
    CHECK(isomorphic(m, named("U(2,4)~U(2,4)@a")).has_value());
  }
  SUBCASE("parallel connection keeps the basepoint") {
    Matroid m = named("U(2,3)||U(2,3)@c");
    CHECK(m.size() == 5);
    CHECK(m.rank() == 3);
    CHECK(m.circuits().size() == 3);
    CHECK(m.is_circuit(m.ground().subset_of({"a", "b", "c"})));
    CHECK(m.is_circuit(m.ground().subset_of({"c", "d", "e"})));
  }
  SUBCASE("left association chains through the accumulated labels") {
    Matroid m = named("U(2,3)+U(1,1)~U(2,3)@a");
    // Atoms become {a,b,c}, {d}, {e,f,g}; the 2-sum folds the two triangles
    // into a 4-element circuit and leaves the coloop d alone.
    CHECK(m.size() == 5);
    CHECK(m.components().size() == 2);
    CHECK(m.is_circuit(m.ground().subset_of({"b", "c", "f", "g"})));
  }
  SUBCASE("malformed expressions") {
    CHECK_THROWS_AS(named(""), MatroidError);
    CHECK_THROWS_AS(named("Z9"), MatroidError);
    CHECK_THROWS_AS(named("MK4(2)"), MatroidError);
    CHECK_THROWS_AS(named("MW(1)"), MatroidError);
    CHECK_THROWS_AS(named("U(2,4)~U(2,4)"), MatroidError);
    CHECK_THROWS_AS(named("U(2,3)|U(2,3)@c"), MatroidError);
    CHECK_THROWS_AS(named("U(1,2)+U(1,1)@a"), MatroidError);
    CHECK_THROWS_AS(named("U(2,4)@a"), MatroidError);
    CHECK_THROWS_AS(named("U(2,3)~U(2,3)@z"), MatroidError);
  }
}

TEST_CASE("isomorphism-class enumeration") {
  const long expected[] = {1, 2, 4, 8, 17, 38};
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long>(matroid_classes(n).size()) == expected[n]);
  }

  SUBCASE("representatives use letter labels and valid bases") {
    CHECK(matroid_classes(3)[0].ground().labels() ==
          std::vector<std::string>{"a", "b", "c"});
    for (int n = 0; n <= 4; ++n) {
      for (const Matroid& m : matroid_classes(n)) {
        Matroid rebuilt = Matroid::from_bases(m.ground(), m.bases());
        CHECK(same_labeled_matroid(rebuilt, m));
      }
    }
  }

  SUBCASE("no class is repeated and every uniform matroid appears once") {
    int u24_hits = 0;
    for (const Matroid& m : matroid_classes(4))
      if (isomorphic(m, named("U(2,4)")).has_value()) ++u24_hits;
    CHECK(u24_hits == 1);
    int u25_hits = 0;
    for (const Matroid& m : matroid_classes(5))
      if (isomorphic(m, named("U(2,5)")).has_value()) ++u25_hits;
    CHECK(u25_hits == 1);
  }

  SUBCASE("the classes on each size are closed under duality") {
    for (int n = 0; n <= 5; ++n) {
      std::vector<std::string> keys, dual_keys;
      for (const Matroid& m : matroid_classes(n)) {
        keys.push_back(fingerprint(m).key());
        dual_keys.push_back(fingerprint(dual(m)).key());
      }
      std::sort(keys.begin(), keys.end());
      std::sort(dual_keys.begin(), dual_keys.end());
      CHECK(keys == dual_keys);
    }
  }

  SUBCASE("filters") {
    EnumFilter connected_simple;
    connected_simple.connected = true;
    connected_simple.simple = true;
    std::vector<Matroid> picked = enumerate(3, connected_simple);
    REQUIRE(picked.size() == 1);
    CHECK(isomorphic(picked[0], named("U(2,3)")).has_value());

    EnumFilter connected_only;
    connected_only.connected = true;
    CHECK(enumerate(4, connected_only).size() == 4);
    for (const Matroid& m : enumerate(4, connected_only))
      CHECK(m.is_connected());

    EnumFilter rank_window;
    rank_window.min_rank = 2;
    rank_window.max_rank = 2;
    for (const Matroid& m : enumerate(4, rank_window)) CHECK(m.rank() == 2);
  }

  CHECK_THROWS_AS(matroid_classes(-1), MatroidError);
  CHECK_THROWS_AS(matroid_classes(9), MatroidError);
}

TEST_CASE("recorded witness constructions") {
  SUBCASE("triangle target: glued lines and their single-deletion") {
    auto witnesses = proof_constructions(named("U(2,3)"));
    REQUIRE(witnesses.size() == 2);
    const Matroid& m3 = witnesses[0].second;
    const Matroid& m4 = witnesses[1].second;
    CHECK(m3.size() == 7);
    CHECK(m3.rank() == 3);
    CHECK(m3.circuits().size() == 17);
    CHECK(m4.size() == 6);
    CHECK(m4.circuits().size() == 8);
    CHECK(m4.ground().labels() ==
          std::vector<std::string>{"a", "b", "g", "d", "e", "f"});
  }

  SUBCASE("2-circuit and 2-cocircuit targets") {
    auto parallel_case = proof_constructions(named("U(2,2)"));
    REQUIRE(parallel_case.size() == 1);
    CHECK(isomorphic(parallel_case[0].second, named("U(1,2)+U(1,1)")).has_value());

    auto series_case = proof_constructions(named("U(0,2)"));
    REQUIRE(series_case.size() == 1);
    CHECK(isomorphic(series_case[0].second,
                     dual(named("U(1,2)+U(1,1)"))).has_value());
  }

  SUBCASE("free and cofree targets get a triangle or triad plus singletons") {
    auto free3 = proof_constructions(named("U(3,3)"));
    REQUIRE(free3.size() == 1);
    CHECK(free3[0].second.size() == 4);
    CHECK(free3[0].second.circuits().size() == 1);

    auto free4 = proof_constructions(named("U(4,4)"));
    CHECK(free4[0].second.size() == 5);
    CHECK(free4[0].second.rank() == 4);

    auto loops3 = proof_constructions(named("U(0,3)"));
    CHECK(loops3[0].second.size() == 4);
    CHECK(loops3[0].second.rank() == 1);
  }

  SUBCASE("loop-plus-coloop targets") {
    auto k4_case = proof_constructions(named("U(0,1)+U(1,1)"));
    REQUIRE(k4_case.size() == 1);
    CHECK(isomorphic(k4_case[0].second, named("MK4")).has_value());

    auto bigger = proof_constructions(named("U(0,2)+U(2,2)"));
    REQUIRE(bigger.size() == 1);
    CHECK(subset_size(bigger[0].second.loops()) == 3);
    CHECK(subset_size(bigger[0].second.coloops()) == 2);
  }

  SUBCASE("doubled wheel target: truncated glued construction") {
    auto doubled = proof_constructions(named("MW(2)+MW(2)"));
    REQUIRE(doubled.size() == 1);
    CHECK(doubled[0].first.find("truncated") != std::string::npos);
    CHECK(doubled[0].second.size() == 11);
    CHECK(doubled[0].second.rank() == 5);
    CHECK(doubled[0].second.is_connected());
  }

  SUBCASE("wheel plus a small uniform component") {
    auto lines = proof_constructions(named("MW(2)+U(1,2)"));
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].second.size() == 7);
    CHECK(lines[0].second.rank() == 4);

    auto colines = proof_constructions(named("MW(2)+U(2,3)"));
    REQUIRE(colines.size() == 1);
    CHECK(colines[0].first.find("dual") == 0);
    CHECK(colines[0].second.size() == 9);
    CHECK(colines[0].second.rank() == 5);
  }

  SUBCASE("targets with no recorded construction") {
    CHECK_THROWS_AS(proof_constructions(named("U(2,4)")), MatroidError);
    CHECK_THROWS_AS(proof_constructions(named("U(1,2)")), MatroidError);
  }
}

TEST_SUITE_END();
