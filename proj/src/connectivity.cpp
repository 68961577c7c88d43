#include "matroid/connectivity.hpp"

#include <algorithm>
#include <set>

#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"

namespace matroid {

int lambda(const Matroid& m, Subset x) {
  if (x & ~m.ground_mask()) {
    fail(Errc::unknown_element, "subset uses elements outside the ground set");
  }
  return m.rank(x) + m.rank(m.ground_mask() & ~x) - m.rank();
}

int kappa(const Matroid& m, Subset a, Subset b) {
  if ((a | b) & ~m.ground_mask()) {
    fail(Errc::unknown_element, "subset uses elements outside the ground set");
  }
  if (a & b) {
    fail(Errc::overlap,
         "sides overlap on " + m.ground().render(a & b));
  }
  Subset free = m.ground_mask() & ~(a | b);
  int best = lambda(m, a | free);
  for (Subset s = free; s;) {
    s = (s - 1) & free;
    best = std::min(best, lambda(m, a | s));
    if (s == 0) break;
  }
  return best;
}

std::vector<TwoSeparation> two_separations(const Matroid& m) {
  std::vector<TwoSeparation> out;
  int n = m.size();
  if (n < 4) return out;
  Subset full = m.ground_mask();
  for (Subset x = 1; x < full; ++x) {
    if (!contains(x, 0)) continue;
    int k = subset_size(x);
    if (k < 2 || n - k < 2) continue;
    int order = lambda(m, x);
    if (order <= 1) out.push_back(TwoSeparation{x, full & ~x, order});
  }
  return out;
}

bool is_k_connected(const Matroid& m, int k) {
  if (k == 2) return m.is_connected();
  if (k == 3) return m.is_connected() && two_separations(m).empty();
  fail(Errc::bad_n, "k-connectivity is supported for k = 2 and k = 3 only");
}

namespace {

struct FanTables {
  const Matroid* m;
  std::vector<char> triangle;  // indexed by 3-element mask
  std::vector<char> triad;
};

FanTables make_fan_tables(const Matroid& m) {
  FanTables t;
  t.m = &m;
  std::size_t total = std::size_t{1} << m.size();
  t.triangle.assign(total, 0);
  t.triad.assign(total, 0);
  for_each_k_subset(m.ground_mask(), 3, [&](Subset s) {
    t.triangle[s] = m.is_circuit(s);
    t.triad[s] = m.is_cocircuit(s);
  });
  return t;
}

bool window_ok(const FanTables& t, Subset w) {
  return t.triangle[w] || t.triad[w];
}

// Alternation between two consecutive windows: a triangle window forces a
// triad next and a triad window forces a triangle next.
bool step_ok(const FanTables& t, Subset prev, Subset next) {
  if (t.triangle[prev] && !t.triad[next]) return false;
  if (t.triad[prev] && !t.triangle[next]) return false;
  return true;
}

Subset window_mask(const std::vector<int>& path, std::size_t i) {
  return (Subset{1} << path[i]) | (Subset{1} << path[i + 1]) |
         (Subset{1} << path[i + 2]);
}

bool can_append(const FanTables& t, const std::vector<int>& path, int e,
                Subset used) {
  if (contains(used, e)) return false;
  std::size_t k = path.size();
  Subset next = (Subset{1} << path[k - 2]) | (Subset{1} << path[k - 1]) |
                (Subset{1} << e);
  if (!window_ok(t, next)) return false;
  return step_ok(t, window_mask(path, k - 3), next);
}

bool can_prepend(const FanTables& t, const std::vector<int>& path, int e,
                 Subset used) {
  if (contains(used, e)) return false;
  Subset first = (Subset{1} << e) | (Subset{1} << path[0]) |
                 (Subset{1} << path[1]);
  if (!window_ok(t, first)) return false;
  return step_ok(t, first, window_mask(path, 0));
}

std::string step_types_of(const FanTables& t, const std::vector<int>& path) {
  std::string out;
  for (std::size_t i = 0; i + 2 < path.size(); ++i) {
    Subset w = window_mask(path, i);
    if (t.triangle[w] && t.triad[w]) {
      out += 'B';
    } else if (t.triangle[w]) {
      out += 'T';
    } else {
      out += 'D';
    }
  }
  return out;
}

std::vector<int> reversed(const std::vector<int>& path) {
  return std::vector<int>(path.rbegin(), path.rend());
}

// Depth-first walk over every fan ordering; `visit` sees each valid path of
// length >= 3 exactly once per direction.
template <typename Visit>
void walk_fans(const Matroid& m, const FanTables& t, Visit&& visit) {
  int n = m.size();
  std::vector<int> path;
  Subset used = 0;
  auto extend = [&](auto&& self) -> void {
    visit(path, used);
    for (int e = 0; e < n; ++e) {
      if (!can_append(t, path, e, used)) continue;
      path.push_back(e);
      used = with(used, e);
      self(self);
      used = without(used, e);
      path.pop_back();
    }
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        Subset w = (Subset{1} << a) | (Subset{1} << b) | (Subset{1} << c);
        if (!window_ok(t, w)) continue;
        path = {a, b, c};
        used = w;
        extend(extend);
      }
    }
  }
}

}  // namespace

std::vector<Fan> find_fans(const Matroid& m) {
  if (m.size() < 3) return {};
  FanTables t = make_fan_tables(m);
  std::set<std::vector<int>> canonical;
  walk_fans(m, t, [&](const std::vector<int>& path, Subset used) {
    int n = m.size();
    for (int e = 0; e < n; ++e) {
      if (can_append(t, path, e, used)) return;  // extendable: not maximal
    }
    for (int e = 0; e < n; ++e) {
      if (can_prepend(t, path, e, used)) return;
    }
    canonical.insert(std::min(path, reversed(path)));
  });
  std::vector<Fan> out;
  for (const auto& path : canonical) {
    out.push_back(Fan{path, step_types_of(t, path)});
  }
  return out;
}

bool is_special_fan(const Matroid& m, const Fan& fan) {
  if (fan.ordering.size() < 2) return false;
  Subset pair =
      (Subset{1} << fan.ordering[0]) | (Subset{1} << fan.ordering[1]);
  return m.is_cocircuit(pair);
}

FanLemmaReport check_special_fan_lemma(const Matroid& m) {
  FanLemmaReport report;
  if (m.size() < 3) return report;
  FanTables t = make_fan_tables(m);
  std::vector<Subset> components = m.components();
  auto end_pair_ok = [&m](int a, int b) {
    Subset pair = (Subset{1} << a) | (Subset{1} << b);
    return m.is_circuit(pair) || m.is_cocircuit(pair);
  };
  walk_fans(m, t, [&](const std::vector<int>& path, Subset used) {
    if (path > reversed(path)) return;  // count each fan once per direction
    report.fans_seen++;
    std::size_t k = path.size();
    if (!end_pair_ok(path[0], path[1]) ||
        !end_pair_ok(path[k - 2], path[k - 1])) {
      return;
    }
    report.fans_qualifying++;
    bool is_component =
        std::find(components.begin(), components.end(), used) !=
        components.end();
    if (!is_component) {
      report.violations.push_back(Fan{path, step_types_of(t, path)});
    }
  });
  return report;
}

std::optional<std::array<int, 3>> transitivity_counterexample(
    const Matroid& m, const Matroid& n) {
  PairRelation rel = pair_relation(m, n);
  for (int e = 0; e < rel.n; ++e) {
    for (int f = 0; f < rel.n; ++f) {
      if (f == e || !rel.adjacent(e, f)) continue;
      for (int g = 0; g < rel.n; ++g) {
        if (g == e || g == f) continue;
        if (rel.adjacent(f, g) && !rel.adjacent(e, g)) {
          return std::array<int, 3>{e, f, g};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Matroid, std::array<int, 3>>>
search_transitivity_counterexample(const Matroid& n,
                                   const std::vector<Matroid>& universe) {
  for (const Matroid& m : universe) {
    if (m.size() < 2) continue;
    if (auto triple = transitivity_counterexample(m, n)) {
      return std::make_pair(m, *triple);
    }
  }
  return std::nullopt;
}

RemovalReport hereditary_removal_check(const Matroid& m, const Matroid& n) {
  if (m.size() <= n.size()) {
    fail(Errc::precondition_failed,
         "host must have more elements than the minor pattern");
  }
  if (!is_n_connected(m, n)) {
    fail(Errc::precondition_failed, "host matroid is not N-connected");
  }
  auto still_connected = [&n](const Matroid& reduced) {
    return reduced.size() >= 2 && is_n_connected(reduced, n);
  };
  RemovalReport report;
  for (int e = 0; e < m.size(); ++e) {
    RemovalOutcome outcome;
    outcome.element = e;
    outcome.delete_ok = still_connected(deletion(m, Subset{1} << e));
    outcome.contract_ok = still_connected(contraction(m, Subset{1} << e));
    report.outcomes.push_back(outcome);
    if (!outcome.delete_ok && !outcome.contract_ok) {
      report.failures.push_back(e);
    }
  }
  return report;
}

}  // namespace matroid
