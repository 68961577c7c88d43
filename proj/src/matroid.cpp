#include "matroid/matroid.hpp"

#include <algorithm>
#include <array>

#include "matroid/errors.hpp"

namespace matroid {

namespace {

// r(S) = |S| for independent S, otherwise the best rank among the sets
// obtained by dropping one element; filled in ascending mask order.
std::vector<std::int8_t> rank_table_from_independent(
    int n, const std::vector<char>& independent) {
  std::size_t total = std::size_t{1} << n;
  std::vector<std::int8_t> rank(total, 0);
  for (Subset s = 1; s < total; ++s) {
    if (independent[s]) {
      rank[s] = static_cast<std::int8_t>(subset_size(s));
    } else {
      std::int8_t best = 0;
      for (Subset rest = s; rest;) {
        int e = lowest_element(rest);
        rest &= rest - 1;
        best = std::max(best, rank[without(s, e)]);
      }
      rank[s] = best;
    }
  }
  return rank;
}

}  // namespace

Matroid Matroid::from_bases(GroundSet ground,
                            const std::vector<Subset>& bases_in) {
  if (bases_in.empty()) fail(Errc::empty_family, "basis family is empty");
  int n = ground.size();
  Subset full = ground.full();
  std::vector<Subset> bases = bases_in;
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int r = subset_size(bases.front());
  for (Subset b : bases) {
    if (b & ~full) {
      fail(Errc::unknown_element, "basis uses elements outside the ground set");
    }
    if (subset_size(b) != r) {
      fail(Errc::axiom_violation, "bases " + ground.render(bases.front()) +
                                      " and " + ground.render(b) +
                                      " differ in size");
    }
  }

  std::size_t total = std::size_t{1} << n;
  std::vector<char> is_basis(total, 0);
  for (Subset b : bases) is_basis[b] = 1;

  // Exchange: for all bases B1, B2 and x in B1 - B2 there is y in B2 - B1
  // with B1 - x + y a basis. Y[x] collects every usable y for fixed B1.
  for (Subset b1 : bases) {
    std::array<Subset, kMaxGroundSize> exchangeable{};
    for (Subset xs = b1; xs;) {
      int x = lowest_element(xs);
      xs &= xs - 1;
      Subset dropped = without(b1, x);
      for (Subset ys = full & ~b1; ys;) {
        int y = lowest_element(ys);
        ys &= ys - 1;
        if (is_basis[with(dropped, y)]) {
          exchangeable[x] = with(exchangeable[x], y);
        }
      }
    }
    for (Subset b2 : bases) {
      if (b2 == b1) continue;
      Subset incoming = b2 & ~b1;
      for (Subset xs = b1 & ~b2; xs;) {
        int x = lowest_element(xs);
        xs &= xs - 1;
        if (!(incoming & exchangeable[x])) {
          fail(Errc::axiom_violation, "basis exchange fails between " +
                                          ground.render(b1) + " and " +
                                          ground.render(b2));
        }
      }
    }
  }

  std::vector<char> independent(total, 0);
  for (Subset b : bases) independent[b] = 1;
  for (Subset s = static_cast<Subset>(total - 1); s > 0; --s) {
    if (!independent[s]) continue;
    for (Subset rest = s; rest;) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      independent[without(s, e)] = 1;
    }
  }
  independent[0] = 1;

  return from_rank_table(std::move(ground),
                         rank_table_from_independent(n, independent));
}

Matroid Matroid::from_bases(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& bases) {
  GroundSet ground(labels);
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) masks.push_back(ground.subset_of(b));
  return from_bases(std::move(ground), masks);
}

Matroid Matroid::from_circuits(GroundSet ground,
                               const std::vector<Subset>& circuits_in) {
  int n = ground.size();
  Subset full = ground.full();
  std::vector<Subset> circuits = circuits_in;
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()),
                 circuits.end());
  for (Subset c : circuits) {
    if (c == 0) fail(Errc::axiom_violation, "the empty set cannot be a circuit");
    if (c & ~full) {
      fail(Errc::unknown_element,
           "circuit uses elements outside the ground set");
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if ((circuits[i] & circuits[j]) == circuits[i]) {
        fail(Errc::axiom_violation, "circuit " + ground.render(circuits[i]) +
                                        " is contained in circuit " +
                                        ground.render(circuits[j]));
      }
    }
  }

  std::size_t total = std::size_t{1} << n;
  std::vector<char> dependent(total, 0);
  for (Subset c : circuits) dependent[c] = 1;
  for (Subset s = 1; s < total; ++s) {
    if (!dependent[s]) continue;
    for (Subset rest = full & ~s; rest;) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      dependent[with(s, e)] = 1;
    }
  }

  // Weak elimination: merging two circuits and removing a shared element
  // must leave a dependent set.
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      Subset shared = circuits[i] & circuits[j];
      for (Subset rest = shared; rest;) {
        int e = lowest_element(rest);
        rest &= rest - 1;
        if (!dependent[without(circuits[i] | circuits[j], e)]) {
          fail(Errc::axiom_violation,
               "circuit elimination fails for " + ground.render(circuits[i]) +
                   " and " + ground.render(circuits[j]) + " at element " +
                   ground.label(e));
        }
      }
    }
  }

  std::vector<char> independent(total, 0);
  for (Subset s = 0; s < total; ++s) independent[s] = !dependent[s];

  return from_rank_table(std::move(ground),
                         rank_table_from_independent(n, independent));
}

Matroid Matroid::from_circuits(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::string>>& circuits) {
  GroundSet ground(labels);
  std::vector<Subset> masks;
  masks.reserve(circuits.size());
  for (const auto& c : circuits) masks.push_back(ground.subset_of(c));
  return from_circuits(std::move(ground), masks);
}

Matroid Matroid::from_graph(const std::vector<GraphEdge>& edges) {
  std::vector<std::string> labels;
  std::vector<std::string> vertex_names;
  auto vertex_index = [&vertex_names](const std::string& name) {
    for (std::size_t i = 0; i < vertex_names.size(); ++i) {
      if (vertex_names[i] == name) return static_cast<int>(i);
    }
    vertex_names.push_back(name);
    return static_cast<int>(vertex_names.size() - 1);
  };
  std::vector<std::pair<int, int>> ends;
  for (const auto& edge : edges) {
    labels.push_back(edge.label);
    ends.emplace_back(vertex_index(edge.tail), vertex_index(edge.head));
  }
  GroundSet ground(labels);

  int n = ground.size();
  int v = static_cast<int>(vertex_names.size());
  std::size_t total = std::size_t{1} << n;
  std::vector<std::int8_t> rank(total, 0);
  std::vector<int> parent(v);
  for (Subset s = 1; s < total; ++s) {
    for (int i = 0; i < v; ++i) parent[i] = i;
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    // Rank of an edge set = edges that join two different components when
    // added one at a time (forest size).
    std::int8_t forest = 0;
    for (Subset rest = s; rest;) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      int a = find(ends[e].first);
      int b = find(ends[e].second);
      if (a != b) {
        parent[a] = b;
        ++forest;
      }
    }
    rank[s] = forest;
  }
  return from_rank_table(std::move(ground), std::move(rank));
}

Matroid Matroid::from_rank_table(GroundSet ground,
                                 std::vector<std::int8_t> rank_table) {
  if (rank_table.size() != (std::size_t{1} << ground.size())) {
    fail(Errc::internal, "rank table size does not match ground set");
  }
  Matroid m;
  m.ground_ = std::move(ground);
  m.rank_table_ = std::move(rank_table);
  m.rank_full_ = m.rank_table_[m.ground_.full()];
  return m;
}

bool Matroid::is_circuit(Subset s) const {
  if (independent(s)) return false;
  for (Subset rest = s; rest; rest &= rest - 1) {
    if (!independent(without(s, lowest_element(rest)))) return false;
  }
  return true;
}

bool Matroid::is_cocircuit(Subset s) const {
  if (coindependent(s)) return false;
  for (Subset rest = s; rest; rest &= rest - 1) {
    Subset t = without(s, lowest_element(rest));
    if (corank(t) != subset_size(t)) return false;
  }
  return true;
}

Subset Matroid::closure(Subset s) const {
  Subset out = s;
  int r = rank_table_[s];
  for (Subset rest = ground_.full() & ~s; rest;) {
    int e = lowest_element(rest);
    rest &= rest - 1;
    if (rank_table_[with(s, e)] == r) out = with(out, e);
  }
  return out;
}

std::vector<Subset> Matroid::bases() const {
  std::vector<Subset> out;
  for_each_k_subset(ground_.full(), rank_full_, [&](Subset s) {
    if (independent(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  Subset full = ground_.full();
  for (Subset s = 1; s <= full && full; ++s) {
    if (independent(s)) continue;
    bool minimal = true;
    for (Subset rest = s; rest && minimal; rest &= rest - 1) {
      if (!independent(without(s, lowest_element(rest)))) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Subset> Matroid::cocircuits() const { return dual(*this).circuits(); }

std::vector<Subset> Matroid::flats() const {
  std::vector<Subset> out;
  Subset full = ground_.full();
  for (Subset s = 0;; ++s) {
    if (closure(s) == s) out.push_back(s);
    if (s == full) break;
  }
  return out;
}

std::vector<Subset> Matroid::hyperplanes() const {
  std::vector<Subset> out;
  for (Subset f : flats()) {
    if (rank_table_[f] == rank_full_ - 1) out.push_back(f);
  }
  return out;
}

std::vector<Subset> Matroid::cyclic_flats() const {
  std::vector<Subset> out;
  for (Subset f : flats()) {
    bool cyclic = true;
    for (Subset rest = f; rest && cyclic; rest &= rest - 1) {
      int e = lowest_element(rest);
      if (rank_table_[without(f, e)] != rank_table_[f]) cyclic = false;
    }
    if (cyclic) out.push_back(f);
  }
  return out;
}

std::vector<Subset> Matroid::clonal_classes() const {
  std::vector<Subset> cyclic = cyclic_flats();
  int n = size();
  // Membership pattern of each element across the cyclic flats.
  auto same_pattern = [&cyclic](int e, int f) {
    for (Subset flat : cyclic) {
      if (contains(flat, e) != contains(flat, f)) return false;
    }
    return true;
  };
  std::vector<Subset> out;
  Subset assigned = 0;
  for (int e = 0; e < n; ++e) {
    if (contains(assigned, e)) continue;
    Subset cls = Subset{1} << e;
    for (int f = e + 1; f < n; ++f) {
      if (!contains(assigned, f) && same_pattern(e, f)) cls = with(cls, f);
    }
    assigned |= cls;
    out.push_back(cls);
  }
  return out;
}

Subset Matroid::loops() const {
  Subset out = 0;
  for (int e = 0; e < size(); ++e) {
    if (rank_table_[Subset{1} << e] == 0) out = with(out, e);
  }
  return out;
}

Subset Matroid::coloops() const {
  Subset out = 0;
  Subset full = ground_.full();
  for (int e = 0; e < size(); ++e) {
    if (rank_table_[without(full, e)] == rank_full_ - 1) out = with(out, e);
  }
  return out;
}

ElementClassification Matroid::classify_elements() const {
  ElementClassification out;
  out.loops = loops();
  out.coloops = coloops();
  int n = size();
  // Parallel: non-loop elements spanning each other pairwise (rank-1 pairs);
  // series is the same relation in the dual.
  auto collect = [n](Subset skip, auto&& related, std::vector<Subset>& into) {
    Subset assigned = skip;
    for (int e = 0; e < n; ++e) {
      if (contains(assigned, e)) continue;
      Subset cls = Subset{1} << e;
      for (int f = e + 1; f < n; ++f) {
        if (!contains(assigned, f) && related(e, f)) cls = with(cls, f);
      }
      assigned |= cls;
      if (subset_size(cls) >= 2) into.push_back(cls);
    }
  };
  collect(
      out.loops,
      [this](int e, int f) {
        return rank((Subset{1} << e) | (Subset{1} << f)) == 1;
      },
      out.parallel_classes);
  collect(
      out.coloops,
      [this](int e, int f) {
        return corank((Subset{1} << e) | (Subset{1} << f)) == 1;
      },
      out.series_classes);
  return out;
}

std::vector<Subset> Matroid::components() const {
  int n = size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Subset c : circuits()) {
    int head = lowest_element(c);
    for (Subset rest = c & (c - 1); rest; rest &= rest - 1) {
      parent[find(lowest_element(rest))] = find(head);
    }
  }
  std::vector<Subset> masks(n, 0);
  for (int e = 0; e < n; ++e) masks[find(e)] = with(masks[find(e)], e);
  std::vector<Subset> out;
  for (int e = 0; e < n; ++e) {
    if (masks[e]) out.push_back(masks[e]);
  }
  std::sort(out.begin(), out.end(),
            [](Subset a, Subset b) { return (a & (~a + 1)) < (b & (~b + 1)); });
  return out;
}

bool Matroid::is_connected() const {
  return size() >= 2 && components().size() == 1;
}

bool Matroid::is_uniform() const {
  std::int64_t count = 0;
  for_each_k_subset(ground_.full(), rank_full_, [&](Subset s) {
    if (independent(s)) ++count;
  });
  return count == binomial(size(), rank_full_);
}

bool Matroid::is_simple() const {
  int n = size();
  for (int e = 0; e < n; ++e) {
    if (rank_table_[Subset{1} << e] == 0) return false;
    for (int f = e + 1; f < n; ++f) {
      if (rank_table_[(Subset{1} << e) | (Subset{1} << f)] < 2) return false;
    }
  }
  return true;
}

bool Matroid::is_cosimple() const {
  int n = size();
  for (int e = 0; e < n; ++e) {
    if (corank(Subset{1} << e) == 0) return false;
    for (int f = e + 1; f < n; ++f) {
      if (corank((Subset{1} << e) | (Subset{1} << f)) < 2) return false;
    }
  }
  return true;
}

bool Matroid::is_free_element(int e) const {
  if (contains(coloops(), e)) return false;
  for (Subset c : circuits()) {
    if (contains(c, e) && !spanning(c)) return false;
  }
  return true;
}

Matroid dual(const Matroid& m) {
  int n = m.size();
  Subset full = m.ground_mask();
  std::size_t total = std::size_t{1} << n;
  std::vector<std::int8_t> rank(total, 0);
  for (Subset s = 0; s < total; ++s) {
    rank[s] = static_cast<std::int8_t>(subset_size(s) + m.rank(full & ~s) -
                                       m.rank());
  }
  return Matroid::from_rank_table(m.ground(), std::move(rank));
}

bool same_labeled_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size());
  for (int e = 0; e < a.size(); ++e) {
    int idx = b.ground().index_of(a.ground().label(e));
    if (idx < 0) return false;
    map[e] = idx;
  }
  std::size_t total = std::size_t{1} << a.size();
  for (Subset s = 0; s < total; ++s) {
    Subset t = 0;
    for (Subset rest = s; rest; rest &= rest - 1) {
      t = with(t, map[lowest_element(rest)]);
    }
    if (a.rank(s) != b.rank(t)) return false;
  }
  return true;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

}  // namespace matroid
