#include <array>
#include <vector>

#include "doctest.h"
#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/matroid.hpp"

using namespace matroid;

TEST_SUITE_BEGIN("connectivity");

TEST_CASE("connectivity function values") {
  Matroid u24 = named("U(2,4)");
  CHECK(lambda(u24, 0b0001) == 1);
  CHECK(lambda(u24, 0b0011) == 2);
  CHECK(lambda(u24, 0b0111) == 1);
  CHECK(lambda(u24, 0) == 0);
  CHECK(lambda(u24, 0b1111) == 0);

  Matroid mk4 = named("MK4");
  CHECK(lambda(mk4, 0b000111) == 2);  // vertex star vs opposite triangle
  CHECK(lambda(mk4, 0b001011) == 2);  // a triangle

  Matroid split = named("U(1,2)+U(1,1)");
  CHECK(lambda(split, 0b011) == 0);  // a full component
}

TEST_CASE("kappa") {
  Matroid u24 = named("U(2,4)");
  CHECK(kappa(u24, 0b0001, 0b0010) == 1);
  CHECK(kappa(u24, 0b0011, 0b1100) == 2);

  Matroid mk4 = named("MK4");
  CHECK(kappa(mk4, 0b000011, 0b110000) == 2);

  Matroid m4 = proof_constructions(named("U(2,3)"))[1].second;
  CHECK(kappa(m4, m4.ground().subset_of({"a"}), m4.ground().subset_of({"d"})) == 1);

  SUBCASE("monotone under minors") {
    Matroid small = contraction(mk4, 0b000001);
    Subset a = small.ground().subset_of({"b", "d"});
    Subset b = small.ground().subset_of({"c", "e"});
    Subset a_host = mk4.ground().subset_of({"b", "d"});
    Subset b_host = mk4.ground().subset_of({"c", "e"});
    CHECK(kappa(small, a, b) <= kappa(mk4, a_host, b_host));
  }

  SUBCASE("overlapping sides are rejected") {
    CHECK_THROWS_AS(kappa(u24, 0b0011, 0b0010), MatroidError);
  }
}

TEST_CASE("two-separations") {
  CHECK(two_separations(named("U(2,4)")).empty());
  CHECK(two_separations(named("MK4")).empty());

  Matroid m4 = proof_constructions(named("U(2,3)"))[1].second;
  std::vector<TwoSeparation> seps = two_separations(m4);
  REQUIRE(seps.size() == 2);
  Subset ab = m4.ground().subset_of({"a", "b"});
  Subset abg = m4.ground().subset_of({"a", "b", "g"});
  CHECK(seps[0].side_x == ab);
  CHECK(seps[1].side_x == abg);
  for (const TwoSeparation& s : seps) {
    CHECK(s.order == 1);
    CHECK((s.side_x | s.side_y) == m4.ground_mask());
    CHECK((s.side_x & s.side_y) == 0);
  }
}

TEST_CASE("k-connectivity") {
  CHECK(is_k_connected(named("U(2,4)"), 3));
  CHECK(is_k_connected(named("MK4"), 3));
  CHECK(is_k_connected(named("W(3)"), 3));
  CHECK(!is_k_connected(named("MK23"), 3));
  CHECK(!is_k_connected(named("MW(2)"), 3));
  CHECK(is_k_connected(named("MW(2)"), 2));
  CHECK(!is_k_connected(named("U(1,2)+U(1,1)"), 2));
}

TEST_CASE("fans") {
  SUBCASE("every ordering of the four-point line is a fan") {
    std::vector<Fan> fans = find_fans(named("U(2,4)"));
    CHECK(fans.size() == 12);
    for (const Fan& f : fans) CHECK(f.ordering.size() == 4);
  }

  SUBCASE("triangle") {
    std::vector<Fan> fans = find_fans(named("U(2,3)"));
    CHECK(fans.size() == 3);
  }

  SUBCASE("wheel fans alternate and re-verify") {
    Matroid w3 = named("MW(3)");
    std::vector<Fan> fans = find_fans(w3);
    CHECK(!fans.empty());
    for (const Fan& f : fans) {
      REQUIRE(f.ordering.size() >= 3);
      REQUIRE(f.step_types.size() == f.ordering.size() - 2);
      for (std::size_t i = 0; i + 2 < f.ordering.size(); ++i) {
        Subset window = 0;
        for (std::size_t j = i; j < i + 3; ++j)
          window = with(window, f.ordering[j]);
        bool triangle = w3.is_circuit(window);
        bool triad = w3.is_cocircuit(window);
        char type = f.step_types[i];
        CHECK((triangle || triad));
        if (type == 'T') CHECK((triangle && !triad));
        if (type == 'D') CHECK((triad && !triangle));
        if (type == 'B') CHECK((triangle && triad));
      }
    }
  }

  SUBCASE("a special fan of the rank-2 wheel") {
    Matroid mw2 = named("MW(2)");
    std::vector<Fan> fans = find_fans(mw2);
    bool found_special = false;
    for (const Fan& f : fans)
      if (is_special_fan(mw2, f)) found_special = true;
    CHECK(found_special);
  }

  SUBCASE("qualifying fans span components") {
    for (const char* name : {"MW(2)", "MW(3)", "W(3)", "MK4", "MK23"}) {
      FanLemmaReport report = check_special_fan_lemma(named(name));
      CHECK(report.violations.empty());
    }
  }
}

TEST_CASE("transitivity counterexample search") {
  Matroid m = named("U(1,2)+U(1,1)");
  Matroid u22 = named("U(2,2)");

  SUBCASE("the two-element-independent relation is intransitive here") {
    auto triple = transitivity_counterexample(m, u22);
    REQUIRE(triple.has_value());
    CHECK(*triple == std::array<int, 3>{0, 2, 1});
  }

  SUBCASE("searching the small classes finds it") {
    std::vector<Matroid> universe;
    for (int n = 2; n <= 3; ++n)
      for (const Matroid& c : matroid_classes(n)) universe.push_back(c);
    auto found = search_transitivity_counterexample(u22, universe);
    REQUIRE(found.has_value());
    CHECK(found->first.size() <= 3);
  }

  SUBCASE("no counterexample in a transitive case") {
    CHECK(!transitivity_counterexample(named("MK4"), named("U(1,2)")).has_value());
  }
}

TEST_CASE("hereditary removal bookkeeping") {
  Matroid u24 = named("U(2,4)");
  Matroid u23 = named("U(2,3)");
  RemovalReport rep = hereditary_removal_check(u24, u23);
  CHECK(rep.failures.empty());
  REQUIRE(rep.outcomes.size() == 4);
  for (const RemovalOutcome& o : rep.outcomes) {
    CHECK(o.delete_ok);
    CHECK(!o.contract_ok);  // contracting drops the rank below 2
  }

  SUBCASE("precondition: host must be N-connected and strictly larger") {
    CHECK_THROWS_AS(hereditary_removal_check(u23, u23), MatroidError);
    CHECK_THROWS_AS(hereditary_removal_check(named("MW(2)"), u23), MatroidError);
  }
}

TEST_SUITE_END();
