#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/json_io.hpp"
#include "matroid/treedecomp.hpp"

using namespace matroid;

namespace {

Matroid m4() { return proof_constructions(named("U(2,3)"))[1].second; }

int count_class(const std::vector<VertexInfo>& info, VertexClass cls) {
  int n = 0;
  for (const VertexInfo& i : info)
    if (i.cls == cls) ++n;
  return n;
}

// Original elements on the far side of the edge (v, w): the ground elements
// of the component of the tree minus that edge containing w.
Subset far_side(const DecompTree& t, int v, int w) {
  std::vector<char> seen(t.vertices.size(), 0);
  seen[v] = 1;
  std::vector<int> queue{w};
  seen[w] = 1;
  Subset out = 0;
  auto adj = t.adjacency();
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    out |= t.ground_elements(x);
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("tree decomposition");

TEST_CASE("already-3-connected and degenerate inputs") {
  SUBCASE("four-point line stays one vertex") {
    DecompTree t = canonical_tree(named("U(2,4)"));
    CHECK(t.vertices.size() == 1);
    CHECK(t.edges.empty());
    CHECK(classify_vertices(t)[0].cls == VertexClass::three_connected);
    CHECK(same_labeled_matroid(reconstruct(t), named("U(2,4)")));
  }
  SUBCASE("a circuit stays one circuit vertex") {
    DecompTree t = canonical_tree(named("U(3,4)"));
    CHECK(t.vertices.size() == 1);
    CHECK(classify_vertices(t)[0].cls == VertexClass::circuit);
  }
  SUBCASE("a parallel pair is a circuit vertex") {
    DecompTree t = canonical_tree(named("U(1,2)"));
    CHECK(t.vertices.size() == 1);
    CHECK(classify_vertices(t)[0].cls == VertexClass::circuit);
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(canonical_tree(named("U(1,2)+U(1,1)")), MatroidError);
    CHECK_THROWS_AS(canonical_tree(named("U(1,1)")), MatroidError);
  }
}

TEST_CASE("rank-2 wheel splits into a circuit and a cocircuit") {
  DecompTree t = canonical_tree(named("MW(2)"));
  REQUIRE(t.vertices.size() == 2);
  CHECK(t.edges.size() == 1);
  std::vector<VertexInfo> info = classify_vertices(t);
  CHECK(count_class(info, VertexClass::circuit) == 1);
  CHECK(count_class(info, VertexClass::cocircuit) == 1);
  CHECK(same_labeled_matroid(reconstruct(t), named("MW(2)")));
}

TEST_CASE("glued-lines-minus-a-point decomposes into a three-vertex path") {
  Matroid m = m4();
  DecompTree t = canonical_tree(m);
  REQUIRE(t.vertices.size() == 3);
  CHECK(t.edges.size() == 2);
  std::vector<VertexInfo> info = classify_vertices(t);
  CHECK(count_class(info, VertexClass::circuit) == 1);
  CHECK(count_class(info, VertexClass::cocircuit) == 1);
  CHECK(count_class(info, VertexClass::three_connected) == 1);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    switch (info[v].cls) {
      case VertexClass::circuit:
        CHECK(t.vertices[v].size() == 3);
        CHECK(info[v].ground_count == 2);
        CHECK(t.ground_elements(v) == m.ground().subset_of({"a", "b"}));
        break;
      case VertexClass::cocircuit:
        CHECK(t.vertices[v].size() == 3);
        CHECK(info[v].ground_count == 1);
        CHECK(t.ground_elements(v) == m.ground().subset_of({"g"}));
        break;
      case VertexClass::three_connected:
        CHECK(t.vertices[v].size() == 4);
        CHECK(info[v].ground_count == 3);
        CHECK(isomorphic(t.vertices[v], named("U(2,4)")).has_value());
        break;
    }
  }
  CHECK(same_labeled_matroid(reconstruct(t), m));

  SUBCASE("each edge displays an exact 2-separation of the original") {
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      TwoSeparation sep = displayed_separation(t, static_cast<int>(e));
      CHECK((sep.side_x | sep.side_y) == m.ground_mask());
      CHECK(lambda(m, sep.side_x) == 1);
    }
  }

  SUBCASE("basepoints are shared by exactly the joined vertices") {
    for (const TreeEdge& e : t.edges) {
      int holders = 0;
      for (const Matroid& vm : t.vertices)
        if (vm.ground().index_of(e.basepoint) >= 0) ++holders;
      CHECK(holders == 2);
      CHECK(t.vertices[e.u].ground().index_of(e.basepoint) >= 0);
      CHECK(t.vertices[e.v].ground().index_of(e.basepoint) >= 0);
    }
  }
}

TEST_CASE("the complete bipartite cycle matroid is a star of triangles") {
  Matroid m = named("MK23");
  DecompTree t = canonical_tree(m);
  REQUIRE(t.vertices.size() == 4);
  CHECK(t.edges.size() == 3);
  std::vector<VertexInfo> info = classify_vertices(t);
  CHECK(count_class(info, VertexClass::circuit) == 3);
  CHECK(count_class(info, VertexClass::cocircuit) == 1);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (info[v].cls == VertexClass::cocircuit) {
      CHECK(t.degree(static_cast<int>(v)) == 3);
      CHECK(info[v].ground_count == 0);
      CHECK(t.vertices[v].rank() == 1);
    } else {
      CHECK(t.degree(static_cast<int>(v)) == 1);
      CHECK(info[v].ground_count == 2);
      CHECK(isomorphic(t.vertices[v], named("U(2,3)")).has_value());
    }
  }
  CHECK(same_labeled_matroid(reconstruct(t), m));
}

TEST_CASE("tree predicates") {
  SUBCASE("four-point-line condition") {
    Matroid two_lines = named("U(2,4)~U(2,4)@a");
    DecompTree good = canonical_tree(two_lines);
    CHECK(u24_condition(good));
    CHECK(is_n_connected(two_lines, named("U(2,4)")));

    DecompTree bad = canonical_tree(m4());
    CHECK(!u24_condition(bad));
    CHECK(!is_n_connected(m4(), named("U(2,4)")));
  }

  SUBCASE("general condition agrees on hand cases") {
    DecompTree t = canonical_tree(m4());
    CHECK(general_condition(t, named("U(2,4)")) ==
          is_n_connected(m4(), named("U(2,4)")));
    CHECK(general_condition(t, named("MK4")) ==
          is_n_connected(m4(), named("MK4")));
  }

  SUBCASE("two triangles sharing a point fail the cocircuit-neighbor check") {
    Matroid p5 = named("U(2,3)||U(2,3)@c");
    DecompTree t = canonical_tree(p5);
    CHECK(!u34_forbidden_config_absent(t));
    CHECK(!is_n_connected(p5, named("U(3,4)")));
  }

  SUBCASE("the bipartite star passes the cocircuit-neighbor check") {
    DecompTree t = canonical_tree(named("MK23"));
    CHECK(u34_forbidden_config_absent(t));
  }

  SUBCASE("rank-3/corank-3 vertex condition") {
    CHECK(mk4_vertex_condition(canonical_tree(named("MK4"))));
    CHECK(!mk4_vertex_condition(canonical_tree(m4())));

    Matroid two_k4 = named("MK4~MK4@a");
    DecompTree t = canonical_tree(two_k4);
    REQUIRE(t.vertices.size() == 2);
    CHECK(mk4_vertex_condition(t));
    bool every_triple = for_each_k_subset(
        two_k4.ground_mask(), 3, [&](Subset z) -> bool {
          return has_minor_using(two_k4, named("MK4"), z).has_value();
        });
    CHECK(every_triple);
  }
}

TEST_CASE("randomized split orders give equivalent trees") {
  std::mt19937_64 rng(42);
  for (const char* name :
       {"MW(2)", "MK23", "U(2,4)~U(2,4)@a", "MK4~MK4@a", "W(3)~U(2,4)@a"}) {
    Matroid m = named(name);
    DecompTree reference = canonical_tree(m);
    for (int trial = 0; trial < 10; ++trial) {
      DecompTree shuffled = canonical_tree(m, rng);
      CHECK(trees_equivalent(reference, shuffled));
      CHECK(same_labeled_matroid(reconstruct(shuffled), m));
    }
  }
  DecompTree a = canonical_tree(m4());
  CHECK(trees_equivalent(a, canonical_tree(m4())));
  CHECK(tree_to_json(a) == tree_to_json(canonical_tree(m4())));
}

TEST_CASE("vertex labels are realized as minors with chosen far elements") {
  Matroid m = m4();
  DecompTree t = canonical_tree(m);
  std::vector<VertexInfo> info = classify_vertices(t);

  SUBCASE("triangle vertex with the far element d") {
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      if (info[v].cls != VertexClass::circuit) continue;
      REQUIRE(t.degree(static_cast<int>(v)) == 1);
      const TreeEdge* edge = nullptr;
      for (const TreeEdge& e : t.edges)
        if (e.u == static_cast<int>(v) || e.v == static_cast<int>(v)) edge = &e;
      REQUIRE(edge != nullptr);
      Matroid minor_copy =
          specially_relabeled(m, t, static_cast<int>(v), {{edge->basepoint, "d"}});
      CHECK(minor_copy.size() == 3);
      CHECK(minor_copy.ground().index_of("d") >= 0);
      CHECK(minor_copy.is_circuit(minor_copy.ground_mask()));
    }
  }

  SUBCASE("random far-side choices on the bipartite star") {
    Matroid star = named("MK23");
    DecompTree st = canonical_tree(star);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
      for (std::size_t v = 0; v < st.vertices.size(); ++v) {
        std::map<std::string, std::string> choices;
        for (const TreeEdge& e : st.edges) {
          if (e.u != static_cast<int>(v) && e.v != static_cast<int>(v)) continue;
          int w = e.u == static_cast<int>(v) ? e.v : e.u;
          Subset far = far_side(st, static_cast<int>(v), w);
          std::vector<int> pool = elements_of(far);
          REQUIRE(!pool.empty());
          choices[e.basepoint] =
              star.ground().label(pool[rng() % pool.size()]);
        }
        Matroid copy = specially_relabeled(star, st, static_cast<int>(v), choices);
        CHECK(copy.size() == st.vertices[v].size());
        CHECK(isomorphic(copy, st.vertices[v]).has_value());
      }
    }
  }
}

TEST_SUITE_END();
