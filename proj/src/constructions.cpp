#include "matroid/constructions.hpp"

#include <algorithm>

#include "matroid/errors.hpp"

namespace matroid {

namespace {

// Builds the matroid on the kept elements of m, with ranks supplied by
// `rank_of` evaluated on subsets in m's original indexing.
template <typename RankOf>
Matroid restrict_to(const Matroid& m, Subset keep, RankOf&& rank_of) {
  std::vector<int> pos = elements_of(keep);
  int k = static_cast<int>(pos.size());
  std::vector<std::string> labels;
  labels.reserve(pos.size());
  for (int e : pos) labels.push_back(m.ground().label(e));
  std::size_t total = std::size_t{1} << k;
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    Subset old = 0;
    for (Subset rest = s; rest; rest &= rest - 1) {
      old = with(old, pos[lowest_element(rest)]);
    }
    table[s] = static_cast<std::int8_t>(rank_of(old));
  }
  return Matroid::from_rank_table(GroundSet(std::move(labels)),
                                  std::move(table));
}

void require_inside(const Matroid& m, Subset s, const char* what) {
  if (s & ~m.ground_mask()) {
    fail(Errc::unknown_element,
         std::string(what) + " uses elements outside the ground set");
  }
}

void require_basepoint(const Matroid& m, int e) {
  if (m.rank(Subset{1} << e) == 0) {
    fail(Errc::degenerate_basepoint,
         "basepoint '" + m.ground().label(e) + "' is a loop");
  }
  if (contains(m.coloops(), e)) {
    fail(Errc::degenerate_basepoint,
         "basepoint '" + m.ground().label(e) + "' is a coloop");
  }
}

}  // namespace

Matroid deletion(const Matroid& m, Subset remove) {
  require_inside(m, remove, "deleted set");
  return restrict_to(m, m.ground_mask() & ~remove,
                     [&m](Subset a) { return m.rank(a); });
}

Matroid contraction(const Matroid& m, Subset contract) {
  require_inside(m, contract, "contracted set");
  int base = m.rank(contract);
  return restrict_to(m, m.ground_mask() & ~contract, [&](Subset a) {
    return m.rank(a | contract) - base;
  });
}

Matroid minor(const Matroid& m, Subset contract, Subset remove) {
  require_inside(m, contract, "contracted set");
  require_inside(m, remove, "deleted set");
  if (contract & remove) {
    fail(Errc::overlap, "contracted and deleted sets overlap on " +
                            m.ground().render(contract & remove));
  }
  int base = m.rank(contract);
  return restrict_to(m, m.ground_mask() & ~(contract | remove),
                     [&](Subset a) { return m.rank(a | contract) - base; });
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  std::vector<std::string> labels = a.ground().labels();
  for (const auto& l : b.ground().labels()) labels.push_back(l);
  GroundSet ground(std::move(labels));
  int na = a.size();
  Subset mask_a = a.ground_mask();
  std::size_t total = std::size_t{1} << ground.size();
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    table[s] =
        static_cast<std::int8_t>(a.rank(s & mask_a) + b.rank(s >> na));
  }
  return Matroid::from_rank_table(std::move(ground), std::move(table));
}

Matroid parallel_connection(const Matroid& a, const Matroid& b,
                            const std::string& pa, const std::string& pb) {
  int ia = a.ground().require(pa);
  int ib = b.ground().require(pb);
  require_basepoint(a, ia);
  require_basepoint(b, ib);

  std::vector<std::string> labels = a.ground().labels();
  std::vector<int> map_b(b.size());
  for (int j = 0; j < b.size(); ++j) {
    if (j == ib) {
      map_b[j] = ia;
    } else {
      map_b[j] = static_cast<int>(labels.size());
      labels.push_back(b.ground().label(j));
    }
  }
  GroundSet ground(std::move(labels));

  auto mapped = [&map_b](Subset s) {
    Subset out = 0;
    for (Subset rest = s; rest; rest &= rest - 1) {
      out = with(out, map_b[lowest_element(rest)]);
    }
    return out;
  };

  std::vector<Subset> circuits = a.circuits();
  std::vector<Subset> through_a;
  for (Subset c : circuits) {
    if (contains(c, ia)) through_a.push_back(c);
  }
  for (Subset c : b.circuits()) {
    Subset mc = mapped(c);
    circuits.push_back(mc);
    if (contains(c, ib)) {
      for (Subset ca : through_a) {
        circuits.push_back(without(ca, ia) | without(mc, ia));
      }
    }
  }
  return Matroid::from_circuits(std::move(ground), circuits);
}

Matroid series_connection(const Matroid& a, const Matroid& b,
                          const std::string& pa, const std::string& pb) {
  return dual(parallel_connection(dual(a), dual(b), pa, pb));
}

Matroid two_sum(const Matroid& a, const Matroid& b, const std::string& p) {
  if (a.size() < 3 || b.size() < 3) {
    fail(Errc::too_small, "2-sum requires at least three elements per side");
  }
  Matroid joined = parallel_connection(a, b, p, p);
  return deletion(joined, Subset{1} << joined.ground().require(p));
}

Matroid extract_part(const Matroid& m, Subset x, const std::string& p) {
  require_inside(m, x, "separation side");
  Subset y = m.ground_mask() & ~x;
  if (subset_size(x) < 2 || subset_size(y) < 2) {
    fail(Errc::not_a_2_separation, "both sides need at least two elements");
  }
  if (!m.is_connected()) {
    fail(Errc::not_a_2_separation,
         "exact 2-separations require a connected matroid");
  }
  if (m.rank(x) + m.rank(y) - m.rank() != 1) {
    fail(Errc::not_a_2_separation,
         m.ground().render(x) + " is not an exact 2-separation side");
  }

  std::vector<int> pos = elements_of(x);
  int k = static_cast<int>(pos.size());
  std::vector<std::string> labels;
  for (int e : pos) labels.push_back(m.ground().label(e));
  labels.push_back(p);
  int ry = m.rank(y);
  std::size_t total = std::size_t{1} << (k + 1);
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    Subset a = 0;
    for (Subset rest = s & ((Subset{1} << k) - 1); rest; rest &= rest - 1) {
      a = with(a, pos[lowest_element(rest)]);
    }
    int r;
    if (contains(s, k)) {
      r = std::min(m.rank(a) + 1, m.rank(a | y) - ry + 1);
    } else {
      r = m.rank(a);
    }
    table[s] = static_cast<std::int8_t>(r);
  }
  return Matroid::from_rank_table(GroundSet(std::move(labels)),
                                  std::move(table));
}

TwoSumDecomposition split_on(const Matroid& m, Subset x,
                             const std::string& basepoint) {
  return TwoSumDecomposition{
      extract_part(m, x, basepoint),
      extract_part(m, m.ground_mask() & ~x, basepoint), basepoint};
}

Matroid add_parallel(const Matroid& m, const std::string& of,
                     const std::string& fresh) {
  int e = m.ground().require(of);
  if (m.rank(Subset{1} << e) == 0) {
    fail(Errc::degenerate_element,
         "cannot add an element parallel to the loop '" + of + "'");
  }
  std::vector<std::string> labels = m.ground().labels();
  labels.push_back(fresh);
  GroundSet ground(std::move(labels));
  int n = m.size();
  Subset old_full = m.ground_mask();
  std::size_t total = std::size_t{1} << (n + 1);
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    Subset base = s & old_full;
    if (contains(s, n)) base = with(base, e);
    table[s] = static_cast<std::int8_t>(m.rank(base));
  }
  return Matroid::from_rank_table(std::move(ground), std::move(table));
}

Matroid add_series(const Matroid& m, const std::string& of,
                   const std::string& fresh) {
  int e = m.ground().require(of);
  if (contains(m.coloops(), e)) {
    fail(Errc::degenerate_element,
         "cannot add an element in series to the coloop '" + of + "'");
  }
  return dual(add_parallel(dual(m), of, fresh));
}

Matroid truncation(const Matroid& m) {
  if (m.rank() == 0) fail(Errc::rank_zero, "cannot truncate a rank-0 matroid");
  std::int8_t cap = static_cast<std::int8_t>(m.rank() - 1);
  std::size_t total = std::size_t{1} << m.size();
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    table[s] = std::min(static_cast<std::int8_t>(m.rank(s)), cap);
  }
  return Matroid::from_rank_table(m.ground(), std::move(table));
}

Matroid relax(const Matroid& m, Subset c) {
  require_inside(m, c, "relaxed set");
  bool hyperplane = m.rank(c) == m.rank() - 1 && m.closure(c) == c;
  if (!m.is_circuit(c) || !hyperplane) {
    fail(Errc::not_circuit_hyperplane,
         m.ground().render(c) + " is not a circuit-hyperplane");
  }
  std::size_t total = std::size_t{1} << m.size();
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    table[s] = static_cast<std::int8_t>(m.rank(s));
  }
  table[c] = static_cast<std::int8_t>(m.rank());
  return Matroid::from_rank_table(m.ground(), std::move(table));
}

Matroid relabeled(const Matroid& m, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != m.size()) {
    fail(Errc::bad_size, "expected " + std::to_string(m.size()) +
                             " labels, got " + std::to_string(labels.size()));
  }
  std::size_t total = std::size_t{1} << m.size();
  std::vector<std::int8_t> table(total, 0);
  for (Subset s = 0; s < total; ++s) {
    table[s] = static_cast<std::int8_t>(m.rank(s));
  }
  return Matroid::from_rank_table(GroundSet(labels), std::move(table));
}

Matroid relabeled(const Matroid& m,
                  const std::map<std::string, std::string>& rename) {
  for (const auto& entry : rename) {
    m.ground().require(entry.first);
  }
  std::vector<std::string> labels = m.ground().labels();
  for (auto& l : labels) {
    auto it = rename.find(l);
    if (it != rename.end()) l = it->second;
  }
  return relabeled(m, labels);
}

}  // namespace matroid
