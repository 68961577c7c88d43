#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matroid/connectivity.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

struct TreeEdge {
  int u = 0;
  int v = 0;
  std::string basepoint;  // shared label of the two endpoint matroids
};

// Tree of matroids whose iterated 2-sums along the edges rebuild `original`.
// Vertex grounds consist of elements of the original matroid plus basepoint
// labels; two vertices share a label exactly when an edge joins them.
struct DecompTree {
  Matroid original;
  std::vector<Matroid> vertices;
  std::vector<TreeEdge> edges;

  // Elements of the original matroid held by vertex v (excludes basepoints),
  // as a subset in the original's indexing.
  Subset ground_elements(int v) const;
  std::vector<std::vector<int>> adjacency() const;
  int degree(int v) const;
};

enum class VertexClass { circuit, cocircuit, three_connected };

struct VertexInfo {
  VertexClass cls = VertexClass::circuit;
  bool binary = false;
  int ground_count = 0;
  std::optional<bool> n_connected;
};

// Splits along exact 2-separations until every vertex is a circuit, a
// cocircuit or 3-connected, then merges adjacent circuit pairs and adjacent
// cocircuit pairs. Deterministic: always splits on the first exact
// 2-separation in ascending bitmask order.
DecompTree canonical_tree(const Matroid& m);
// Same result up to basepoint naming regardless of the randomized split
// choices drawn from rng.
DecompTree canonical_tree(const Matroid& m, std::mt19937_64& rng);

// Folds all edges by 2-sums.
Matroid reconstruct(const DecompTree& t);

// The bipartition of the original ground set displayed by one tree edge.
TwoSeparation displayed_separation(const DecompTree& t, int edge);

std::vector<VertexInfo> classify_vertices(const DecompTree& t);
std::vector<VertexInfo> classify_vertices(const DecompTree& t,
                                          const Matroid& n);

// The 4-point-line analogue of general_condition: the original matroid is
// connected and non-binary, every binary vertex holds at most one original
// element, and between any two binary vertices holding exactly one original
// element each there is a non-binary vertex.
bool u24_condition(const DecompTree& t);

// For 3-connected n with at least 4 elements: the original matroid is
// connected with an n-minor, every vertex that is not n-connected holds at
// most one original element, and between two such single-element vertices
// there is an n-connected vertex.
bool general_condition(const DecompTree& t, const Matroid& n);

// True when no vertex of degree at most two is a rank-2 uniform matroid all
// of whose neighbors are cocircuit vertices holding original elements.
bool u34_forbidden_config_absent(const DecompTree& t);

// Every vertex has rank and corank at least 3.
bool mk4_vertex_condition(const DecompTree& t);

// Equality up to a vertex bijection that preserves adjacency, maps each
// basepoint to the matched edge's basepoint, and fixes original elements.
bool trees_equivalent(const DecompTree& a, const DecompTree& b);

// The minor of the original matroid, certified by exhaustive search, that is
// a copy of vertex v's label with each basepoint replaced by the chosen
// element from the far side of its edge.
Matroid specially_relabeled(const Matroid& m, const DecompTree& t, int v,
                            const std::map<std::string, std::string>& choices);

}  // namespace matroid
