#include <algorithm>
#include <vector>

#include "doctest.h"
#include "matroid/errors.hpp"
#include "matroid/matroid.hpp"

using namespace matroid;

namespace {

Matroid u24() {
  return Matroid::from_bases(
      {"a", "b", "c", "d"},
      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

Matroid wheel2() {
  // Rank-2 wheel: spokes s1, s2, parallel rim pair r1, r2.
  return Matroid::from_circuits(
      {"s1", "s2", "r1", "r2"},
      {{"r1", "r2"}, {"s1", "s2", "r1"}, {"s1", "s2", "r2"}});
}

Matroid k4() {
  return Matroid::from_graph({{"1", "2", "a"},
                              {"1", "3", "b"},
                              {"1", "4", "c"},
                              {"2", "3", "d"},
                              {"2", "4", "e"},
                              {"3", "4", "f"}});
}

}  // namespace

TEST_SUITE_BEGIN("matroid core");

TEST_CASE("uniform rank-2 on four elements") {
  Matroid m = u24();
  CHECK(m.size() == 4);
  CHECK(m.rank() == 2);
  CHECK(m.corank() == 2);
  CHECK(m.is_uniform());
  CHECK(m.is_simple());
  CHECK(m.is_cosimple());
  CHECK(m.is_connected());

  SUBCASE("rank table basics") {
    CHECK(m.rank(0) == 0);
    CHECK(m.rank(0b0001) == 1);
    CHECK(m.rank(0b0011) == 2);
    CHECK(m.rank(0b0111) == 2);
    CHECK(m.independent(0b0101));
    CHECK(!m.independent(0b0111));
    CHECK(m.spanning(0b1010));
    CHECK(!m.spanning(0b0001));
  }

  SUBCASE("circuits and cocircuits are the four triples") {
    std::vector<Subset> expect{0b0111, 0b1011, 0b1101, 0b1110};
    CHECK(m.circuits() == expect);
    CHECK(m.cocircuits() == expect);
    CHECK(m.is_circuit(0b0111));
    CHECK(!m.is_circuit(0b1111));
    CHECK(m.is_cocircuit(0b1101));
  }

  SUBCASE("flats, hyperplanes, cyclic flats") {
    CHECK(m.flats() ==
          std::vector<Subset>{0, 0b0001, 0b0010, 0b0100, 0b1000, 0b1111});
    CHECK(m.hyperplanes() ==
          std::vector<Subset>{0b0001, 0b0010, 0b0100, 0b1000});
    CHECK(m.cyclic_flats() == std::vector<Subset>{0, 0b1111});
    CHECK(m.closure(0b0011) == 0b1111);
    CHECK(m.closure(0b0001) == 0b0001);
    CHECK(m.closure(0) == 0);
  }

  SUBCASE("one clonal class") {
    CHECK(m.clonal_classes() == std::vector<Subset>{0b1111});
  }

  SUBCASE("self-dual as labeled") {
    CHECK(same_labeled_matroid(dual(m), m));
  }

  SUBCASE("every element is free") {
    for (int e = 0; e < 4; ++e) CHECK(m.is_free_element(e));
  }

  SUBCASE("bases round-trip through circuits") {
    Matroid again = Matroid::from_circuits(m.ground(), m.circuits());
    CHECK(same_labeled_matroid(again, m));
  }
}

TEST_CASE("rank-2 wheel") {
  Matroid m = wheel2();
  CHECK(m.size() == 4);
  CHECK(m.rank() == 2);
  CHECK(!m.is_uniform());
  CHECK(!m.is_simple());
  CHECK(m.is_connected());
  CHECK(m.bases().size() == 5);
  CHECK(m.circuits().size() == 3);

  SUBCASE("parallel and series classes") {
    ElementClassification cls = m.classify_elements();
    CHECK(cls.loops == 0);
    CHECK(cls.coloops == 0);
    // r1, r2 are indices 2, 3; s1, s2 are 0, 1.
    CHECK(cls.parallel_classes == std::vector<Subset>{0b1100});
    CHECK(cls.series_classes == std::vector<Subset>{0b0011});
  }

  SUBCASE("cocircuits") {
    CHECK(m.cocircuits() == std::vector<Subset>{0b0011, 0b1101, 0b1110});
  }

  SUBCASE("spokes are free, rim elements are not") {
    CHECK(m.is_free_element(0));
    CHECK(m.is_free_element(1));
    CHECK(!m.is_free_element(2));
    CHECK(!m.is_free_element(3));
  }

  SUBCASE("clonal classes split spokes from rim") {
    CHECK(m.clonal_classes() == std::vector<Subset>{0b0011, 0b1100});
  }
}

TEST_CASE("cycle matroid of the complete graph on four vertices") {
  Matroid m = k4();
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  CHECK(m.circuits().size() == 7);
  CHECK(m.cocircuits().size() == 7);
  CHECK(m.is_simple());
  CHECK(m.is_connected());
  CHECK(m.is_uniform() == false);

  SUBCASE("triangles and quads") {
    // a:12 b:13 c:14 d:23 e:24 f:34.
    Subset abd = 0b001011, def = 0b111000, abef = 0b110011;
    CHECK(m.is_circuit(abd));
    CHECK(m.is_circuit(def));
    CHECK(m.is_circuit(abef));
    CHECK(!m.is_circuit(0b000011));
  }

  SUBCASE("vertex stars are cocircuits") {
    CHECK(m.is_cocircuit(0b000111));  // edges at vertex 1
    CHECK(m.is_cocircuit(0b011001));  // edges at vertex 2
  }

  SUBCASE("no free elements") {
    for (int e = 0; e < 6; ++e) CHECK(!m.is_free_element(e));
  }

  SUBCASE("self-dual up to isomorphism via rank counts") {
    Matroid d = dual(m);
    CHECK(d.rank() == 3);
    CHECK(d.circuits().size() == 7);
  }
}

TEST_CASE("graphs with loops and parallel edges") {
  Matroid m = Matroid::from_graph(
      {{"u", "u", "l"}, {"u", "v", "p"}, {"u", "v", "q"}, {"v", "w", "t"}});
  CHECK(m.size() == 4);
  CHECK(m.rank() == 2);
  CHECK(m.loops() == 0b0001);
  CHECK(m.coloops() == 0b1000);
  ElementClassification cls = m.classify_elements();
  CHECK(cls.parallel_classes == std::vector<Subset>{0b0110});
}

TEST_CASE("duality on small uniforms") {
  Matroid u13 = Matroid::from_bases({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}});
  Matroid u23 =
      Matroid::from_bases({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK(same_labeled_matroid(dual(u13), u23));
  CHECK(same_labeled_matroid(dual(u23), u13));
  CHECK(same_labeled_matroid(dual(dual(u13)), u13));
  CHECK(u13.corank(0b011) == 2);
  CHECK(u13.coindependent(0b011));
  CHECK(!u13.coindependent(0b111));
}

TEST_CASE("loops, components, connectivity edge cases") {
  Matroid two_loops = Matroid::from_circuits({"a", "b"}, {{"a"}, {"b"}});
  CHECK(two_loops.rank() == 0);
  CHECK(two_loops.loops() == 0b11);
  CHECK(two_loops.components() == std::vector<Subset>{0b01, 0b10});
  CHECK(!two_loops.is_connected());
  CHECK(two_loops.flats() == std::vector<Subset>{0b11});
  CHECK(two_loops.cyclic_flats() == std::vector<Subset>{0b11});
  CHECK(two_loops.clonal_classes() == std::vector<Subset>{0b11});

  Matroid coloop = Matroid::from_bases({"a"}, {{"a"}});
  CHECK(coloop.rank() == 1);
  CHECK(coloop.coloops() == 0b1);
  CHECK(!coloop.is_connected());  // fewer than two elements

  Matroid empty = Matroid::from_bases(GroundSet(std::vector<std::string>{}),
                                      std::vector<Subset>{0});
  CHECK(empty.size() == 0);
  CHECK(empty.rank() == 0);
  CHECK(empty.bases() == std::vector<Subset>{0});
  CHECK(empty.circuits().empty());
  CHECK(!empty.is_connected());
}

TEST_CASE("a pair in a two-element circuit makes one component") {
  Matroid pair_plus_coloop = Matroid::from_circuits({"a", "b", "c"}, {{"a", "b"}});
  CHECK(pair_plus_coloop.components() == std::vector<Subset>{0b011, 0b100});
  CHECK(!pair_plus_coloop.is_connected());
  CHECK(pair_plus_coloop.coloops() == 0b100);
}

TEST_CASE("constructor validation") {
  SUBCASE("bases must be nonempty and equicardinal") {
    CHECK_THROWS_AS(Matroid::from_bases({"a"}, std::vector<std::vector<std::string>>{}),
                    MatroidError);
    CHECK_THROWS_AS(Matroid::from_bases({"a", "b"}, {{"a"}, {"a", "b"}}),
                    MatroidError);
  }
  SUBCASE("basis exchange is enforced") {
    CHECK_THROWS_AS(
        Matroid::from_bases({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
        MatroidError);
  }
  SUBCASE("circuits may not nest") {
    CHECK_THROWS_AS(
        Matroid::from_circuits({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}}),
        MatroidError);
  }
  SUBCASE("circuit elimination is enforced") {
    CHECK_THROWS_AS(
        Matroid::from_circuits({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}),
        MatroidError);
  }
  SUBCASE("unknown labels are rejected") {
    CHECK_THROWS_AS(Matroid::from_bases({"a", "b"}, {{"a", "z"}}), MatroidError);
  }
  SUBCASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(Matroid::from_bases({"a", "a"}, {{"a"}}), MatroidError);
  }
  SUBCASE("ground sets are capped at sixteen elements") {
    std::vector<std::string> labels;
    for (int i = 0; i < 17; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::vector<std::string>> bases{{labels[0]}};
    CHECK_THROWS_AS(Matroid::from_bases(labels, bases), MatroidError);
  }
  SUBCASE("bad graph edges are rejected") {
    CHECK_THROWS_AS(Matroid::from_graph({{"u", "v", "a"}, {"u", "v", "a"}}),
                    MatroidError);
  }
}

TEST_SUITE_END();
