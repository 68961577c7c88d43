#include "matroid/iso.hpp"

#include <algorithm>
#include <thread>

#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"

namespace matroid {

Fingerprint fingerprint(const Matroid& m) {
  Fingerprint fp;
  fp.size = m.size();
  fp.rank = m.rank();
  fp.corank = m.corank();
  fp.per_element.resize(m.size());
  for (Subset c : m.circuits()) {
    int k = subset_size(c);
    fp.circuit_sizes.push_back(k);
    for (Subset rest = c; rest; rest &= rest - 1) {
      fp.per_element[lowest_element(rest)].circuit_sizes[k]++;
    }
  }
  for (Subset c : m.cocircuits()) {
    int k = subset_size(c);
    fp.cocircuit_sizes.push_back(k);
    for (Subset rest = c; rest; rest &= rest - 1) {
      fp.per_element[lowest_element(rest)].cocircuit_sizes[k]++;
    }
  }
  std::sort(fp.circuit_sizes.begin(), fp.circuit_sizes.end());
  std::sort(fp.cocircuit_sizes.begin(), fp.cocircuit_sizes.end());
  fp.sorted_signatures = fp.per_element;
  std::sort(fp.sorted_signatures.begin(), fp.sorted_signatures.end());
  return fp;
}

bool Fingerprint::invariant_equal(const Fingerprint& other) const {
  return size == other.size && rank == other.rank && corank == other.corank &&
         circuit_sizes == other.circuit_sizes &&
         cocircuit_sizes == other.cocircuit_sizes &&
         sorted_signatures == other.sorted_signatures;
}

std::string Fingerprint::key() const {
  std::string out = std::to_string(size) + "r" + std::to_string(rank) + "|";
  for (int k : circuit_sizes) out += std::to_string(k) + ",";
  out += "|";
  for (int k : cocircuit_sizes) out += std::to_string(k) + ",";
  out += "|";
  for (const ElementSignature& sig : sorted_signatures) {
    for (std::size_t i = 0; i < sig.circuit_sizes.size(); ++i) {
      if (sig.circuit_sizes[i]) {
        out += std::to_string(i) + "." + std::to_string(sig.circuit_sizes[i]) +
               " ";
      }
    }
    out += "/";
    for (std::size_t i = 0; i < sig.cocircuit_sizes.size(); ++i) {
      if (sig.cocircuit_sizes[i]) {
        out += std::to_string(i) + "." +
               std::to_string(sig.cocircuit_sizes[i]) + " ";
      }
    }
    out += ";";
  }
  return out;
}

namespace {

// Backtracking over element matchings in label order, keeping the synced
// subset pairs of the matched prefix; rank agreement over all these pairs is
// exactly rank-table agreement once every element is matched.
std::optional<IsoMap> isomorphic_with(const Matroid& a, const Fingerprint& fa,
                                      const Matroid& b, const Fingerprint& fb) {
  if (!fa.invariant_equal(fb)) return std::nullopt;
  int n = a.size();
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (fa.per_element[i] == fb.per_element[j]) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) return std::nullopt;
  }

  std::vector<std::pair<Subset, Subset>> pairs{{0, 0}};
  IsoMap map(n, -1);
  Subset used_b = 0;

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j : candidates[i]) {
      if (contains(used_b, j)) continue;
      std::size_t base = pairs.size();
      bool ok = true;
      for (std::size_t idx = 0; idx < base && ok; ++idx) {
        if (a.rank(with(pairs[idx].first, i)) !=
            b.rank(with(pairs[idx].second, j))) {
          ok = false;
        }
      }
      if (!ok) continue;
      for (std::size_t idx = 0; idx < base; ++idx) {
        pairs.emplace_back(with(pairs[idx].first, i),
                           with(pairs[idx].second, j));
      }
      map[i] = j;
      used_b = with(used_b, j);
      if (self(self, i + 1)) return true;
      used_b = without(used_b, j);
      map[i] = -1;
      pairs.resize(base);
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

}  // namespace

std::optional<IsoMap> isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return std::nullopt;
  return isomorphic_with(a, fingerprint(a), b, fingerprint(b));
}

std::optional<MinorWitness> has_minor_using(const Matroid& m, const Matroid& n,
                                            Subset z) {
  if (z & ~m.ground_mask()) {
    fail(Errc::unknown_element,
         "kept set uses elements outside the ground set");
  }
  int c_size = m.rank() - n.rank();
  int d_size = m.corank() - n.corank();
  if (c_size < 0 || d_size < 0) return std::nullopt;
  if (m.size() - n.size() != c_size + d_size) return std::nullopt;
  if (subset_size(z) > n.size()) return std::nullopt;

  if (subset_size(z) == 2 && n.size() >= 2) {
    // Kappa can only drop when passing to minors, so a pair whose
    // connectivity in m is below every pair's connectivity in n is hopeless.
    int floor_n = -1;
    for (int x = 0; x < n.size(); ++x) {
      for (int y = x + 1; y < n.size(); ++y) {
        int k = kappa(n, Subset{1} << x, Subset{1} << y);
        if (floor_n < 0 || k < floor_n) floor_n = k;
      }
    }
    std::vector<int> ze = elements_of(z);
    if (kappa(m, Subset{1} << ze[0], Subset{1} << ze[1]) < floor_n) {
      return std::nullopt;
    }
  }

  Fingerprint fn = fingerprint(n);
  std::optional<MinorWitness> found;
  for_each_k_subset(m.ground_mask() & ~z, c_size, [&](Subset c) -> bool {
    if (!m.independent(c)) return true;
    for_each_k_subset(
        m.ground_mask() & ~z & ~c, d_size, [&](Subset d) -> bool {
          if (!m.coindependent(d)) return true;
          Matroid candidate = minor(m, c, d);
          Fingerprint fc = fingerprint(candidate);
          auto iso = isomorphic_with(candidate, fc, n, fn);
          if (!iso) return true;
          MinorWitness w;
          w.contract = c;
          w.remove = d;
          w.map.assign(m.size(), -1);
          std::vector<int> kept = elements_of(m.ground_mask() & ~c & ~d);
          for (std::size_t idx = 0; idx < kept.size(); ++idx) {
            w.map[kept[idx]] = (*iso)[idx];
          }
          found = w;
          return false;
        });
    return !found.has_value();
  });
  return found;
}

bool verify_witness(const Matroid& m, const Matroid& n,
                    const MinorWitness& w) {
  if (w.contract & w.remove) return false;
  if ((w.contract | w.remove) & ~m.ground_mask()) return false;
  if (!m.independent(w.contract)) return false;
  if (!m.coindependent(w.remove)) return false;
  Subset kept = m.ground_mask() & ~(w.contract | w.remove);
  if (subset_size(kept) != n.size()) return false;
  if (static_cast<int>(w.map.size()) != m.size()) return false;
  Subset hit = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (!contains(kept, e)) {
      if (w.map[e] != -1) return false;
      continue;
    }
    int v = w.map[e];
    if (v < 0 || v >= n.size() || contains(hit, v)) return false;
    hit = with(hit, v);
  }
  Matroid candidate = minor(m, w.contract, w.remove);
  std::vector<int> kept_list = elements_of(kept);
  std::size_t total = std::size_t{1} << kept_list.size();
  for (Subset s = 0; s < total; ++s) {
    Subset target = 0;
    for (Subset rest = s; rest; rest &= rest - 1) {
      target = with(target, w.map[kept_list[lowest_element(rest)]]);
    }
    if (candidate.rank(s) != n.rank(target)) return false;
  }
  return true;
}

bool PairRelation::complete() const {
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) {
      if (e != f && !adjacent(e, f)) return false;
    }
  }
  return true;
}

PairRelation pair_relation(const Matroid& m, const Matroid& n, int jobs) {
  if (m.size() < 2) {
    fail(Errc::too_small, "pair relation needs at least two elements");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < m.size(); ++e) {
    for (int f = e + 1; f < m.size(); ++f) pairs.emplace_back(e, f);
  }
  std::vector<std::uint8_t> hit(pairs.size(), 0);
  auto run = [&](int offset, int stride) {
    for (std::size_t i = offset; i < pairs.size(); i += stride) {
      Subset z = (Subset{1} << pairs[i].first) | (Subset{1} << pairs[i].second);
      if (has_minor_using(m, n, z)) hit[i] = 1;
    }
  };
  if (jobs <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) workers.emplace_back(run, t, jobs);
    for (auto& w : workers) w.join();
  }
  PairRelation rel;
  rel.n = m.size();
  rel.adj.assign(static_cast<std::size_t>(rel.n) * rel.n, 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (hit[i]) {
      rel.adj[static_cast<std::size_t>(pairs[i].first) * rel.n +
              pairs[i].second] = 1;
      rel.adj[static_cast<std::size_t>(pairs[i].second) * rel.n +
              pairs[i].first] = 1;
    }
  }
  return rel;
}

bool is_n_connected(const Matroid& m, const Matroid& n, int jobs) {
  if (m.size() < 2) {
    fail(Errc::too_small, "N-connectivity needs at least two elements");
  }
  if (jobs > 1) return pair_relation(m, n, jobs).complete();
  for (int e = 0; e < m.size(); ++e) {
    for (int f = e + 1; f < m.size(); ++f) {
      Subset z = (Subset{1} << e) | (Subset{1} << f);
      if (!has_minor_using(m, n, z)) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::string, MinorWitness>> has_minor_using_triple(
    const Matroid& m,
    const std::vector<std::pair<std::string, Matroid>>& oracles, Subset z3) {
  if (subset_size(z3) != 3) {
    fail(Errc::bad_size, "expected exactly three kept elements");
  }
  for (const auto& [name, pattern] : oracles) {
    if (auto w = has_minor_using(m, pattern, z3)) {
      return std::make_pair(name, *w);
    }
  }
  return std::nullopt;
}

bool is_binary(const Matroid& m) {
  static const Matroid four_point_line = [] {
    std::vector<std::int8_t> table(16, 0);
    for (Subset s = 0; s < 16; ++s) {
      table[s] = static_cast<std::int8_t>(std::min(subset_size(s), 2));
    }
    return Matroid::from_rank_table(GroundSet({"a", "b", "c", "d"}),
                                    std::move(table));
  }();
  return !has_minor_using(m, four_point_line, 0).has_value();
}

}  // namespace matroid
