#include "matroid/treedecomp.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"

namespace matroid {

Subset DecompTree::ground_elements(int v) const {
  Subset out = 0;
  for (const auto& label : vertices[v].ground().labels()) {
    int idx = original.ground().index_of(label);
    if (idx >= 0) out = with(out, idx);
  }
  return out;
}

std::vector<std::vector<int>> DecompTree::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const TreeEdge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

int DecompTree::degree(int v) const {
  int d = 0;
  for (const TreeEdge& e : edges) {
    if (e.u == v || e.v == v) ++d;
  }
  return d;
}

namespace {

enum class Kind { circuit, cocircuit, three_connected, splittable };

Kind vertex_kind(const Matroid& m) {
  if (m.is_circuit(m.ground_mask())) return Kind::circuit;
  if (m.is_cocircuit(m.ground_mask())) return Kind::cocircuit;
  if (two_separations(m).empty()) return Kind::three_connected;
  return Kind::splittable;
}

// Vertex sets of the two components of the tree after removing one edge;
// returns the component containing `start`.
std::vector<int> component_without_edge(const DecompTree& t, int edge,
                                        int start) {
  std::vector<char> seen(t.vertices.size(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  std::vector<int> out;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    out.push_back(v);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      if (static_cast<int>(i) == edge) continue;
      const TreeEdge& e = t.edges[i];
      int next = -1;
      if (e.u == v) next = e.v;
      if (e.v == v) next = e.u;
      if (next >= 0 && !seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return out;
}

Subset ground_of_side(const DecompTree& t, const std::vector<int>& side) {
  Subset out = 0;
  for (int v : side) out |= t.ground_elements(v);
  return out;
}

DecompTree build_tree(
    const Matroid& m,
    const std::function<std::size_t(std::size_t)>& pick) {
  if (!m.is_connected()) {
    fail(Errc::not_connected,
         "tree decomposition requires a connected matroid");
  }
  DecompTree t;
  t.original = m;
  t.vertices = {m};

  int basepoint_counter = 0;
  auto fresh_basepoint = [&]() {
    while (true) {
      std::string name = "p" + std::to_string(basepoint_counter++);
      if (m.ground().index_of(name) < 0) return name;
    }
  };

  // Split phase: break any vertex that is neither a circuit, a cocircuit nor
  // 3-connected along one of its exact 2-separations.
  while (true) {
    std::vector<int> splittable;
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      if (vertex_kind(t.vertices[v]) == Kind::splittable) {
        splittable.push_back(static_cast<int>(v));
      }
    }
    if (splittable.empty()) break;
    int vi = splittable[pick(splittable.size())];
    Matroid label = t.vertices[vi];
    std::vector<TwoSeparation> seps = two_separations(label);
    const TwoSeparation& sep = seps[pick(seps.size())];
    std::string p = fresh_basepoint();
    TwoSumDecomposition parts = split_on(label, sep.side_x, p);
    int fresh_index = static_cast<int>(t.vertices.size());
    for (TreeEdge& e : t.edges) {
      int* end = e.u == vi ? &e.u : (e.v == vi ? &e.v : nullptr);
      if (!end) continue;
      int bp = label.ground().require(e.basepoint);
      if (!contains(sep.side_x, bp)) *end = fresh_index;
    }
    t.vertices[vi] = parts.part_x;
    t.vertices.push_back(parts.part_y);
    t.edges.push_back(TreeEdge{vi, fresh_index, p});
  }

  // Merge phase: contract edges joining two circuits or two cocircuits.
  std::vector<char> alive(t.vertices.size(), 1);
  while (true) {
    int hit = -1;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
      Kind ku = vertex_kind(t.vertices[t.edges[i].u]);
      Kind kv = vertex_kind(t.vertices[t.edges[i].v]);
      if (ku == kv && (ku == Kind::circuit || ku == Kind::cocircuit)) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit < 0) break;
    TreeEdge merged_edge = t.edges[hit];
    int u = merged_edge.u;
    int v = merged_edge.v;
    t.vertices[u] =
        two_sum(t.vertices[u], t.vertices[v], merged_edge.basepoint);
    alive[v] = 0;
    t.edges.erase(t.edges.begin() + hit);
    for (TreeEdge& e : t.edges) {
      if (e.u == v) e.u = u;
      if (e.v == v) e.v = u;
    }
  }

  std::vector<int> remap(t.vertices.size(), -1);
  std::vector<Matroid> compact;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (alive[v]) {
      remap[v] = static_cast<int>(compact.size());
      compact.push_back(std::move(t.vertices[v]));
    }
  }
  t.vertices = std::move(compact);
  for (TreeEdge& e : t.edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  return t;
}

}  // namespace

DecompTree canonical_tree(const Matroid& m) {
  return build_tree(m, [](std::size_t) { return std::size_t{0}; });
}

DecompTree canonical_tree(const Matroid& m, std::mt19937_64& rng) {
  return build_tree(
      m, [&rng](std::size_t bound) { return rng() % bound; });
}

Matroid reconstruct(const DecompTree& t) {
  std::vector<Matroid> verts = t.vertices;
  std::vector<TreeEdge> edges = t.edges;
  int root = 0;
  while (!edges.empty()) {
    TreeEdge e = edges.back();
    edges.pop_back();
    verts[e.u] = two_sum(verts[e.u], verts[e.v], e.basepoint);
    root = e.u;
    for (TreeEdge& rest : edges) {
      if (rest.u == e.v) rest.u = e.u;
      if (rest.v == e.v) rest.v = e.u;
    }
  }
  return verts[root];
}

TwoSeparation displayed_separation(const DecompTree& t, int edge) {
  if (edge < 0 || edge >= static_cast<int>(t.edges.size())) {
    fail(Errc::bad_edge, "no tree edge with index " + std::to_string(edge));
  }
  Subset x = ground_of_side(t, component_without_edge(t, edge, t.edges[edge].u));
  Subset full = t.original.ground_mask();
  Subset y = full & ~x;
  if (!contains(x, 0)) std::swap(x, y);
  return TwoSeparation{x, y, lambda(t.original, x)};
}

std::vector<VertexInfo> classify_vertices(const DecompTree& t) {
  std::vector<VertexInfo> out;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const Matroid& label = t.vertices[v];
    VertexInfo info;
    switch (vertex_kind(label)) {
      case Kind::circuit:
        info.cls = VertexClass::circuit;
        break;
      case Kind::cocircuit:
        info.cls = VertexClass::cocircuit;
        break;
      case Kind::three_connected:
        if (label.size() < 4) {
          fail(Errc::internal, "3-connected tree vertex with fewer than four "
                               "elements");
        }
        info.cls = VertexClass::three_connected;
        break;
      case Kind::splittable:
        fail(Errc::internal, "tree vertex is not canonical");
    }
    info.binary = is_binary(label);
    info.ground_count = subset_size(t.ground_elements(static_cast<int>(v)));
    out.push_back(info);
  }
  return out;
}

std::vector<VertexInfo> classify_vertices(const DecompTree& t,
                                          const Matroid& n) {
  std::vector<VertexInfo> out = classify_vertices(t);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    out[v].n_connected = is_n_connected(t.vertices[v], n);
  }
  return out;
}

namespace {

// Vertices strictly between `from` and `to` in the tree.
std::vector<int> path_interior(const DecompTree& t,
                               const std::vector<std::vector<int>>& adj,
                               int from, int to) {
  std::vector<int> parent(t.vertices.size(), -1);
  std::deque<int> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adj[v]) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> interior;
  for (int v = parent[to]; v != from; v = parent[v]) interior.push_back(v);
  return interior;
}

// Common shape of the two tree conditions: flagged vertices may hold at most
// one original element, and between two flagged vertices holding exactly one
// original element there must be an unflagged vertex.
bool flagged_vertex_condition(const DecompTree& t,
                              const std::vector<VertexInfo>& info,
                              const std::vector<char>& flagged) {
  int count = static_cast<int>(t.vertices.size());
  for (int v = 0; v < count; ++v) {
    if (flagged[v] && info[v].ground_count > 1) return false;
  }
  std::vector<std::vector<int>> adj = t.adjacency();
  for (int u = 0; u < count; ++u) {
    if (!flagged[u] || info[u].ground_count != 1) continue;
    for (int v = u + 1; v < count; ++v) {
      if (!flagged[v] || info[v].ground_count != 1) continue;
      bool rescued = false;
      for (int w : path_interior(t, adj, u, v)) {
        if (!flagged[w]) {
          rescued = true;
          break;
        }
      }
      if (!rescued) return false;
    }
  }
  return true;
}

}  // namespace

bool u24_condition(const DecompTree& t) {
  if (!t.original.is_connected() || is_binary(t.original)) return false;
  std::vector<VertexInfo> info = classify_vertices(t);
  std::vector<char> flagged(t.vertices.size(), 0);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    flagged[v] = info[v].binary;
  }
  return flagged_vertex_condition(t, info, flagged);
}

bool general_condition(const DecompTree& t, const Matroid& n) {
  if (n.size() < 4 || !is_k_connected(n, 3)) {
    fail(Errc::bad_n,
         "pattern must be 3-connected with at least four elements");
  }
  if (!t.original.is_connected()) return false;
  if (!has_minor_using(t.original, n, 0)) return false;
  std::vector<VertexInfo> info = classify_vertices(t, n);
  std::vector<char> flagged(t.vertices.size(), 0);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    flagged[v] = !info[v].n_connected.value();
  }
  return flagged_vertex_condition(t, info, flagged);
}

bool u34_forbidden_config_absent(const DecompTree& t) {
  if (t.vertices.size() <= 1) return true;
  std::vector<VertexInfo> info = classify_vertices(t);
  std::vector<std::vector<int>> adj = t.adjacency();
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (adj[v].size() > 2) continue;
    const Matroid& label = t.vertices[v];
    if (label.rank() != 2 || !label.is_uniform()) continue;
    bool all_bad = true;
    for (int w : adj[v]) {
      if (info[w].cls != VertexClass::cocircuit || info[w].ground_count == 0) {
        all_bad = false;
        break;
      }
    }
    if (all_bad) return false;
  }
  return true;
}

bool mk4_vertex_condition(const DecompTree& t) {
  for (const Matroid& label : t.vertices) {
    if (label.rank() < 3 || label.corank() < 3) return false;
  }
  return true;
}

namespace {

bool labels_match(const DecompTree& a, const DecompTree& b,
                  const std::vector<int>& phi, int u) {
  const Matroid& la = a.vertices[u];
  const Matroid& lb = b.vertices[phi[u]];
  if (la.size() != lb.size()) return false;
  // Basepoint of each a-edge at u maps to the basepoint of the matched
  // b-edge; original elements keep their names.
  std::map<std::string, std::string> rename;
  for (const TreeEdge& e : a.edges) {
    if (e.u != u && e.v != u) continue;
    int other = e.u == u ? e.v : e.u;
    bool found = false;
    for (const TreeEdge& f : b.edges) {
      if ((f.u == phi[u] && f.v == phi[other]) ||
          (f.v == phi[u] && f.u == phi[other])) {
        rename[e.basepoint] = f.basepoint;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return same_labeled_matroid(relabeled(la, rename), lb);
}

}  // namespace

bool trees_equivalent(const DecompTree& a, const DecompTree& b) {
  if (a.vertices.size() != b.vertices.size() ||
      a.edges.size() != b.edges.size()) {
    return false;
  }
  int count = static_cast<int>(a.vertices.size());
  std::vector<int> phi(count, -1);
  std::vector<char> used(count, 0);
  std::vector<std::vector<int>> adj_a = a.adjacency();

  auto rec = [&](auto&& self, int u) -> bool {
    if (u == count) return true;
    for (int w = 0; w < count; ++w) {
      if (used[w]) continue;
      if (a.ground_elements(u) != b.ground_elements(w)) continue;
      if (a.degree(u) != b.degree(w)) continue;
      bool adjacency_ok = true;
      for (int prev = 0; prev < u && adjacency_ok; ++prev) {
        bool edge_a = std::find(adj_a[u].begin(), adj_a[u].end(), prev) !=
                      adj_a[u].end();
        bool edge_b = false;
        for (const TreeEdge& f : b.edges) {
          if ((f.u == w && f.v == phi[prev]) ||
              (f.v == w && f.u == phi[prev])) {
            edge_b = true;
            break;
          }
        }
        if (edge_a != edge_b) adjacency_ok = false;
      }
      if (!adjacency_ok) continue;
      phi[u] = w;
      used[w] = 1;
      if (self(self, u + 1)) return true;
      used[w] = 0;
      phi[u] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  for (int u = 0; u < count; ++u) {
    if (!labels_match(a, b, phi, u)) return false;
  }
  return true;
}

Matroid specially_relabeled(const Matroid& m, const DecompTree& t, int v,
                            const std::map<std::string, std::string>& choices) {
  if (v < 0 || v >= static_cast<int>(t.vertices.size())) {
    fail(Errc::bad_choice, "no tree vertex with index " + std::to_string(v));
  }
  const Matroid& label = t.vertices[v];
  Subset kept = t.ground_elements(v);
  std::map<std::string, std::string> rename;
  std::size_t basepoints_at_v = 0;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const TreeEdge& e = t.edges[i];
    if (e.u != v && e.v != v) continue;
    ++basepoints_at_v;
    auto it = choices.find(e.basepoint);
    if (it == choices.end()) {
      fail(Errc::bad_choice, "missing choice for basepoint " + e.basepoint);
    }
    int y = m.ground().require(it->second);
    int far_vertex = e.u == v ? e.v : e.u;
    Subset far = ground_of_side(
        t, component_without_edge(t, static_cast<int>(i), far_vertex));
    if (!contains(far, y)) {
      fail(Errc::bad_choice, "element '" + it->second +
                                 "' is not on the far side of basepoint " +
                                 e.basepoint);
    }
    rename[e.basepoint] = it->second;
    kept = with(kept, y);
  }
  if (choices.size() != basepoints_at_v) {
    fail(Errc::bad_choice, "choices do not match the basepoints at the vertex");
  }

  Matroid target = relabeled(label, rename);
  int c_size = m.rank() - target.rank();
  Subset rest = m.ground_mask() & ~kept;
  std::optional<Matroid> result;
  for_each_k_subset(rest, c_size, [&](Subset c) -> bool {
    if (!m.independent(c)) return true;
    Subset d = rest & ~c;
    if (!m.coindependent(d)) return true;
    Matroid candidate = minor(m, c, d);
    if (same_labeled_matroid(candidate, target)) {
      result = candidate;
      return false;
    }
    return true;
  });
  if (!result) {
    fail(Errc::internal,
         "no certified minor realizes the requested relabeling");
  }
  return *result;
}

}  // namespace matroid
