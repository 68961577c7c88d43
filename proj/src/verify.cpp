#include "matroid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/treedecomp.hpp"

namespace matroid {

namespace {

constexpr int kMaxCounterexamples = 8;

void record(VerificationReport& rep, const Matroid& m, std::string note) {
  if (static_cast<int>(rep.counterexamples.size()) < kMaxCounterexamples)
    rep.counterexamples.push_back({m, std::move(note)});
}

std::string range_string(int lo, int hi) {
  return "isomorphism classes on " + std::to_string(lo) + ".." +
         std::to_string(hi) + " elements";
}

int free_element_count(const Matroid& m) {
  int count = 0;
  for (int e = 0; e < m.size(); ++e)
    if (m.is_free_element(e)) ++count;
  return count;
}

// A biconditional "is_n_connected(M, N) == predicate(M)" scanned over every
// class in the size range.
struct Biconditional {
  std::string name;
  Matroid n;
  std::function<bool(const Matroid&)> predicate;
};

void scan_biconditionals(VerificationReport& rep, int lo, int hi, int jobs,
                         const std::vector<Biconditional>& cases,
                         const std::function<bool(const Matroid&)>& in_scope) {
  for (int k = lo; k <= hi; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      if (in_scope && !in_scope(m)) continue;
      ++rep.instances_checked;
      for (const Biconditional& c : cases) {
        bool lhs = is_n_connected(m, c.n, jobs);
        bool rhs = c.predicate(m);
        if (lhs != rhs) {
          record(rep, m,
                 c.name + "-connected=" + (lhs ? "true" : "false") +
                     " but characterization says " + (rhs ? "true" : "false"));
        }
      }
    }
  }
}

// Pseudo-random 2-sums of catalog matroids; connected by construction.
class CompositeSampler {
 public:
  explicit CompositeSampler(std::uint64_t seed) : rng_(seed) {
    for (const char* name :
         {"U(2,3)", "U(1,3)", "U(2,4)", "MW(2)", "MW(3)", "W(3)", "MK4", "Q6"})
      pool_.push_back(named(name));
  }

  Matroid sample(int max_size) {
    Matroid m = pool_[rng_() % pool_.size()];
    int extra = 1 + static_cast<int>(rng_() % 3);
    for (int i = 0; i < extra; ++i) {
      const Matroid& piece = pool_[rng_() % pool_.size()];
      if (m.size() + piece.size() - 2 > max_size) break;
      std::vector<std::string> fresh;
      for (int j = 0; j < piece.size(); ++j)
        fresh.push_back("g" + std::to_string(fresh_++));
      Matroid q = relabeled(piece, fresh);
      std::string pm = m.ground().label(static_cast<int>(rng_() % m.size()));
      std::string pq = q.ground().label(static_cast<int>(rng_() % q.size()));
      q = relabeled(q, std::map<std::string, std::string>{{pq, pm}});
      m = two_sum(m, q, pm);
    }
    return m;
  }

  std::uint64_t draw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
  std::vector<Matroid> pool_;
  int fresh_ = 0;
};

// ---------------------------------------------------------------------------

void suite_t1(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(2, o.max_n);
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"U(2,3)", named("U(2,3)"),
        [](const Matroid& m) { return m.is_connected() && m.is_simple(); }},
       {"U(1,3)", named("U(1,3)"),
        [](const Matroid& m) { return m.is_connected() && m.is_cosimple(); }}},
      nullptr);
}

void suite_t4(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(2, o.max_n);
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"MW(2)", named("MW(2)"),
        [](const Matroid& m) { return m.is_connected() && !m.is_uniform(); }}},
      nullptr);
}

void suite_t7(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(2, o.max_n);
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"U(2,2)", named("U(2,2)"),
        [](const Matroid& m) { return m.is_simple() && m.rank() >= 2; }},
       {"U(3,3)", named("U(3,3)"),
        [](const Matroid& m) { return m.is_simple() && m.rank() >= 3; }}},
      nullptr);
}

void suite_t8(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(2, o.max_n);
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"U(0,1)+U(1,1)", named("U(0,1)+U(1,1)"), [](const Matroid& m) {
          for (Subset c : m.clonal_classes())
            if (subset_size(c) > 1) return false;
          return true;
        }}},
      nullptr);
}

void suite_t9(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(2, o.max_n);
  auto primal = [](const Matroid& m) {
    return m.loops() == 0 && subset_size(m.coloops()) <= 1 &&
           free_element_count(m) <= 1;
  };
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"U(1,2)+U(1,1)", named("U(1,2)+U(1,1)"), primal},
       {"U(1,2)+U(0,1)", named("U(1,2)+U(0,1)"),
        [primal](const Matroid& m) { return primal(dual(m)); }}},
      nullptr);
}

void suite_t5(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "3-connected " + range_string(2, o.max_n);
  scan_biconditionals(
      rep, 2, o.max_n, o.jobs,
      {{"U(1,4)", named("U(1,4)"),
        [](const Matroid& m) {
          bool line = m.rank() == 2 && m.is_uniform() && m.size() >= 5;
          return line || (m.rank() >= 3 && m.corank() >= 3);
        }},
       {"U(3,4)", named("U(3,4)"),
        [](const Matroid& m) {
          bool coline = m.corank() == 2 && m.is_uniform() && m.size() >= 5;
          return coline || (m.rank() >= 3 && m.corank() >= 3);
        }}},
      [](const Matroid& m) { return is_k_connected(m, 3); });
}

// Shared by T2 and T3: the tree-condition agreement checks over connected
// classes plus seeded random 2-sum composites.
void tree_agreement_scan(VerificationReport& rep, const VerifyOptions& o,
                         bool use_u24_condition) {
  rep.universe = "connected " + range_string(2, o.max_n) +
                 " plus 200 seeded 2-sum composites up to 12 elements";
  Matroid u24 = named("U(2,4)");
  Matroid mk4 = named("MK4");
  Matroid w3 = named("W(3)");

  auto check_one = [&](const Matroid& m) {
    ++rep.instances_checked;
    DecompTree tree = canonical_tree(m);
    if (use_u24_condition) {
      bool direct = is_n_connected(m, u24, o.jobs);
      bool via_tree = u24_condition(tree);
      if (direct != via_tree)
        record(rep, m,
               std::string("u24_condition=") + (via_tree ? "true" : "false") +
                   " but U(2,4)-connected=" + (direct ? "true" : "false"));
      return;
    }
    for (const auto& [name, n] : {std::pair<const char*, const Matroid&>{"U(2,4)", u24},
                                  {"MK4", mk4},
                                  {"W(3)", w3}}) {
      bool direct = is_n_connected(m, n, o.jobs);
      bool via_tree = general_condition(tree, n);
      if (direct != via_tree)
        record(rep, m,
               std::string("general_condition for ") + name + "=" +
                   (via_tree ? "true" : "false") + " but " + name +
                   "-connected=" + (direct ? "true" : "false"));
    }
  };

  for (int k = 2; k <= o.max_n; ++k)
    for (const Matroid& m : matroid_classes(k))
      if (m.is_connected()) check_one(m);
  CompositeSampler sampler(o.seed);
  for (int i = 0; i < 200; ++i) check_one(sampler.sample(12));
}

void suite_t2(VerificationReport& rep, const VerifyOptions& o) {
  tree_agreement_scan(rep, o, true);
}

void suite_t3(VerificationReport& rep, const VerifyOptions& o) {
  tree_agreement_scan(rep, o, false);
}

void suite_t6(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe =
      "connected simple non-3-connected " + range_string(2, o.max_n) +
      " plus MK23";
  Matroid u34 = named("U(3,4)");
  for (int k = 2; k <= o.max_n; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      if (!m.is_connected() || !m.is_simple() || is_k_connected(m, 3)) continue;
      ++rep.instances_checked;
      bool direct = is_n_connected(m, u34, o.jobs);
      bool via_tree = u34_forbidden_config_absent(canonical_tree(m));
      if (direct != via_tree)
        record(rep, m,
               std::string("forbidden-configuration-absent=") +
                   (via_tree ? "true" : "false") +
                   " but U(3,4)-connected=" + (direct ? "true" : "false"));
    }
  }
  // Anchor: M(K_{2,3}) is U(3,4)-connected although no single tree vertex is.
  Matroid mk23 = named("MK23");
  ++rep.instances_checked;
  if (!is_n_connected(mk23, u34, o.jobs))
    record(rep, mk23, "MK23 should be U(3,4)-connected");
  DecompTree tree = canonical_tree(mk23);
  for (const Matroid& vertex : tree.vertices) {
    if (vertex.size() >= 2 && is_n_connected(vertex, u34))
      record(rep, vertex, "MK23 tree vertex should not be U(3,4)-connected");
  }
}

void suite_t10(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "U(1,2)-, U(0,2)- and U(2,2)-connected " +
                 range_string(3, o.max_n);
  for (const char* name : {"U(1,2)", "U(0,2)", "U(2,2)"}) {
    Matroid n = named(name);
    for (int k = 3; k <= o.max_n; ++k) {
      for (const Matroid& m : matroid_classes(k)) {
        if (!is_n_connected(m, n, o.jobs)) continue;
        ++rep.instances_checked;
        RemovalReport removal = hereditary_removal_check(m, n);
        for (int e : removal.failures)
          record(rep, m,
                 std::string(name) + "-connectivity lost both ways at '" +
                     m.ground().label(e) + "'");
      }
    }
  }
}

void suite_t11(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe =
      "recorded witness constructions for U(2,3), U(3,3), U(0,1)+U(1,1)";
  // 1. The glued-lines witness: some element has no connectivity-preserving
  //    removal, namely the series pair {a,b}.
  {
    Matroid u23 = named("U(2,3)");
    Matroid m4 = proof_constructions(u23)[1].second;
    ++rep.instances_checked;
    if (!is_n_connected(m4, u23, o.jobs)) {
      record(rep, m4, "witness should be U(2,3)-connected");
    } else {
      RemovalReport removal = hereditary_removal_check(m4, u23);
      for (const char* label : {"a", "b"}) {
        int e = m4.ground().require(label);
        if (std::find(removal.failures.begin(), removal.failures.end(), e) ==
            removal.failures.end())
          record(rep, m4,
                 std::string("expected no removal to work at '") + label + "'");
      }
    }
  }
  // 2. Triangle plus coloop: heredity fails exactly at the coloop.
  {
    Matroid u33 = named("U(3,3)");
    Matroid witness = proof_constructions(u33)[0].second;
    ++rep.instances_checked;
    if (!is_n_connected(witness, u33, o.jobs)) {
      record(rep, witness, "witness should be U(3,3)-connected");
    } else {
      RemovalReport removal = hereditary_removal_check(witness, u33);
      Subset coloop = witness.coloops();
      bool exact = removal.failures.size() == 1 &&
                   with(Subset{0}, removal.failures[0]) == coloop;
      if (!exact)
        record(rep, witness, "heredity should fail exactly at the coloop");
    }
  }
  // 3. M(K4): heredity fails at every element.
  {
    Matroid n = named("U(0,1)+U(1,1)");
    Matroid witness = proof_constructions(n)[0].second;
    ++rep.instances_checked;
    if (!is_n_connected(witness, n, o.jobs)) {
      record(rep, witness, "witness should be U(0,1)+U(1,1)-connected");
    } else {
      RemovalReport removal = hereditary_removal_check(witness, n);
      if (static_cast<int>(removal.failures.size()) != witness.size())
        record(rep, witness, "heredity should fail at every element");
    }
  }
}

std::vector<Matroid> transitivity_universe(const Matroid& n, int max_n) {
  std::vector<Matroid> out;
  for (int k = 3; k <= max_n; ++k)
    for (const Matroid& m : matroid_classes(k)) out.push_back(m);
  try {
    for (const auto& [description, m] : proof_constructions(n)) out.push_back(m);
  } catch (const MatroidError& e) {
    if (e.code() != Errc::unsupported_n) throw;
  }
  return out;
}

void suite_t12(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(3, o.max_n) + " plus recorded witnesses";
  // Transitive side: no counterexample may exist for U(1,2) and MW(2).
  for (const char* name : {"U(1,2)", "MW(2)"}) {
    Matroid n = named(name);
    for (int k = 3; k <= o.max_n; ++k) {
      for (const Matroid& m : matroid_classes(k)) {
        ++rep.instances_checked;
        if (auto triple = transitivity_counterexample(m, n)) {
          record(rep, m,
                 std::string("pair relation for ") + name +
                     " is not transitive at (" +
                     m.ground().label((*triple)[0]) + "," +
                     m.ground().label((*triple)[1]) + "," +
                     m.ground().label((*triple)[2]) + ")");
        }
      }
    }
  }
  // Intransitive side: a counterexample must exist for each of these. Hosts
  // with at most as many elements as the target have a complete or empty
  // relation, both transitive, so a target is only searched once the scanned
  // range can hold a strictly larger host.
  for (const char* name : {"U(2,2)", "U(0,2)", "U(2,3)", "U(1,3)", "U(2,4)",
                           "U(1,4)", "U(3,4)", "U(2,5)"}) {
    Matroid n = named(name);
    if (n.size() + 1 > o.max_n) continue;
    ++rep.instances_checked;
    auto found =
        search_transitivity_counterexample(n, transitivity_universe(n, o.max_n));
    if (!found) {
      record(rep, n,
             std::string("no transitivity counterexample found for ") + name);
      continue;
    }
    if (std::string(name) == "U(2,2)" && found->first.size() > 3)
      record(rep, found->first,
             "U(2,2) counterexample should have at most 3 elements");
  }
}

void suite_t13(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = range_string(3, o.max_n);
  for (int k = 3; k <= o.max_n; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      ++rep.instances_checked;
      FanLemmaReport fans = check_special_fan_lemma(m);
      for (const Fan& fan : fans.violations) {
        std::string ordering;
        for (int e : fan.ordering)
          ordering += (ordering.empty() ? "" : ",") + m.ground().label(e);
        record(rep, m,
               "fan (" + ordering + ") with circuit/cocircuit end pairs is "
               "not a component");
      }
    }
  }
}

void suite_t14(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "3-connected " + range_string(2, o.max_n);
  Matroid u24 = named("U(2,4)");
  std::vector<std::pair<std::string, Matroid>> oracles;
  for (const char* name : {"U(3,6)", "P6", "Q6", "W(3)", "MK4"})
    oracles.emplace_back(name, named(name));
  for (int k = 2; k <= o.max_n; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      if (!is_k_connected(m, 3)) continue;
      if (!is_binary(m)) {
        ++rep.instances_checked;
        if (!is_n_connected(m, u24, o.jobs))
          record(rep, m,
                 "3-connected non-binary but some pair lies in no U(2,4)-minor");
      }
      if (m.rank() >= 3 && m.corank() >= 3) {
        ++rep.instances_checked;
        for_each_k_subset(m.ground_mask(), 3, [&](Subset triple) {
          if (!has_minor_using_triple(m, oracles, triple))
            record(rep, m,
                   "no minor from the rank-3/corank-3 list through " +
                       m.ground().render(triple));
        });
      }
    }
  }
}

void suite_t15(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "connected binary " + range_string(3, o.max_n);
  Matroid mk4 = named("MK4");
  for (int k = 3; k <= o.max_n; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      if (!m.is_connected() || !is_binary(m)) continue;
      ++rep.instances_checked;
      bool all_triples = for_each_k_subset(
          m.ground_mask(), 3,
          [&](Subset triple) -> bool { return has_minor_using(m, mk4, triple).has_value(); });
      bool via_tree = mk4_vertex_condition(canonical_tree(m));
      if (all_triples != via_tree)
        record(rep, m,
               std::string("every-triple-in-MK4-minor=") +
                   (all_triples ? "true" : "false") +
                   " but vertex condition says " + (via_tree ? "true" : "false"));
    }
  }
}

void suite_t16(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "1000 seeded random minor instances on up to 10 elements";
  CompositeSampler sampler(o.seed);
  for (int i = 0; i < 1000; ++i) {
    Matroid m = sampler.sample(10);
    Subset kept = 0, contract = 0, remove = 0;
    for (;;) {
      contract = remove = 0;
      for (int e = 0; e < m.size(); ++e) {
        switch (sampler.draw() % 4) {
          case 0: contract = with(contract, e); break;
          case 1: remove = with(remove, e); break;
          default: break;
        }
      }
      kept = m.ground_mask() & ~(contract | remove);
      if (subset_size(kept) >= 2) break;
    }
    Matroid small = minor(m, contract, remove);
    // Disjoint nonempty A and B inside the minor.
    std::vector<int> order(small.size());
    for (int e = 0; e < small.size(); ++e) order[e] = e;
    for (int e = small.size() - 1; e > 0; --e)
      std::swap(order[e], order[sampler.draw() % (e + 1)]);
    int a_size = 1 + static_cast<int>(sampler.draw() % 2);
    a_size = std::min(a_size, small.size() - 1);
    int b_size = 1 + static_cast<int>(sampler.draw() %
                                      std::min<std::uint64_t>(2, small.size() - a_size));
    Subset a = 0, b = 0;
    for (int j = 0; j < a_size; ++j) a = with(a, order[j]);
    for (int j = 0; j < b_size; ++j) b = with(b, order[a_size + j]);
    Subset a_host = m.ground().subset_of(small.ground().labels_of(a));
    Subset b_host = m.ground().subset_of(small.ground().labels_of(b));
    ++rep.instances_checked;
    int kappa_minor = kappa(small, a, b);
    int kappa_host = kappa(m, a_host, b_host);
    if (kappa_minor > kappa_host)
      record(rep, m,
             "kappa rose from " + std::to_string(kappa_host) + " to " +
                 std::to_string(kappa_minor) + " in the minor for A=" +
                 small.ground().render(a) + " B=" + small.ground().render(b));
  }
}

void suite_t17(VerificationReport& rep, const VerifyOptions& o) {
  rep.universe = "connected " + range_string(2, o.max_n) +
                 ", 10 random split orders each";
  std::mt19937_64 rng(o.seed);
  for (int k = 2; k <= o.max_n; ++k) {
    for (const Matroid& m : matroid_classes(k)) {
      if (!m.is_connected()) continue;
      ++rep.instances_checked;
      DecompTree reference = canonical_tree(m);
      if (!same_labeled_matroid(reconstruct(reference), m)) {
        record(rep, m, "folding the tree back does not rebuild the matroid");
        continue;
      }
      classify_vertices(reference);
      for (int trial = 0; trial < 10; ++trial) {
        DecompTree shuffled = canonical_tree(m, rng);
        if (!trees_equivalent(reference, shuffled)) {
          record(rep, m,
                 "split order " + std::to_string(trial) +
                     " produced an inequivalent tree");
          break;
        }
      }
    }
  }
}

void suite_enum(VerificationReport& rep, const VerifyOptions& o) {
  int oracle_limit = std::min(o.max_n, 5);
  int duality_limit = std::min(o.max_n, 7);
  rep.universe = "enumerated classes vs the basis-family oracle on 0.." +
                 std::to_string(oracle_limit) + " elements; duality closure on 0.." +
                 std::to_string(duality_limit);
  const std::vector<std::int64_t> expected{1, 2, 4, 8, 17, 38};
  std::vector<std::int64_t> oracle = brute_force_class_counts(oracle_limit);
  for (int n = 0; n <= oracle_limit; ++n) {
    ++rep.instances_checked;
    std::int64_t enumerated =
        static_cast<std::int64_t>(matroid_classes(n).size());
    if (oracle[n] != expected[n])
      record(rep, Matroid(),
             "oracle count at " + std::to_string(n) + " elements is " +
                 std::to_string(oracle[n]) + ", expected " +
                 std::to_string(expected[n]));
    if (enumerated != expected[n])
      record(rep, Matroid(),
             "enumerated count at " + std::to_string(n) + " elements is " +
                 std::to_string(enumerated) + ", expected " +
                 std::to_string(expected[n]));
  }
  for (int n = 0; n <= duality_limit; ++n) {
    ++rep.instances_checked;
    std::vector<std::string> keys, dual_keys;
    for (const Matroid& m : matroid_classes(n)) {
      keys.push_back(fingerprint(m).key());
      dual_keys.push_back(fingerprint(dual(m)).key());
    }
    std::sort(keys.begin(), keys.end());
    std::sort(dual_keys.begin(), dual_keys.end());
    if (keys != dual_keys)
      record(rep, Matroid(),
             "duality closure fails at " + std::to_string(n) + " elements");
  }
}

}  // namespace

std::vector<std::string> verification_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 17; ++i) ids.push_back("T" + std::to_string(i));
  ids.push_back("ENUM");
  return ids;
}

VerificationReport run_verification(const std::string& theorem_id,
                                    const VerifyOptions& options) {
  VerificationReport rep;
  rep.theorem_id = theorem_id;
  auto start = std::chrono::steady_clock::now();

  if (theorem_id == "T1") suite_t1(rep, options);
  else if (theorem_id == "T2") suite_t2(rep, options);
  else if (theorem_id == "T3") suite_t3(rep, options);
  else if (theorem_id == "T4") suite_t4(rep, options);
  else if (theorem_id == "T5") suite_t5(rep, options);
  else if (theorem_id == "T6") suite_t6(rep, options);
  else if (theorem_id == "T7") suite_t7(rep, options);
  else if (theorem_id == "T8") suite_t8(rep, options);
  else if (theorem_id == "T9") suite_t9(rep, options);
  else if (theorem_id == "T10") suite_t10(rep, options);
  else if (theorem_id == "T11") suite_t11(rep, options);
  else if (theorem_id == "T12") suite_t12(rep, options);
  else if (theorem_id == "T13") suite_t13(rep, options);
  else if (theorem_id == "T14") suite_t14(rep, options);
  else if (theorem_id == "T15") suite_t15(rep, options);
  else if (theorem_id == "T16") suite_t16(rep, options);
  else if (theorem_id == "T17") suite_t17(rep, options);
  else if (theorem_id == "ENUM") suite_enum(rep, options);
  else fail(Errc::unknown_name, "unknown verification id '" + theorem_id + "'");

  // T3's claim is recorded as an open question: agreement is reported as
  // conjecture-pass rather than pass.
  if (rep.counterexamples.empty())
    rep.status = theorem_id == "T3" ? "conjecture-pass" : "pass";
  else
    rep.status = "fail";
  rep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::vector<std::int64_t> brute_force_class_counts(int max_n) {
  if (max_n > 6)
    fail(Errc::cap_exceeded,
         "the brute-force oracle enumerates raw basis families and is capped "
         "at 6 elements");
  std::vector<std::int64_t> counts;
  for (int n = 0; n <= max_n; ++n) {
    // Permutations as subset-image tables.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<Subset>> images;
    do {
      std::vector<Subset> image(std::size_t{1} << n, 0);
      for (Subset s = 0; s < (Subset{1} << n); ++s)
        for (int e = 0; e < n; ++e)
          if (contains(s, e)) image[s] = with(image[s], perm[e]);
      images.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    Subset full = n == 0 ? 0 : (Subset{1} << n) - 1;
    std::set<std::vector<Subset>> seen;
    for (int r = 0; r <= n; ++r) {
      std::vector<Subset> rsets;
      for_each_k_subset(full, r, [&](Subset s) { rsets.push_back(s); });
      int k = static_cast<int>(rsets.size());
      for (std::uint32_t family = 1; family < (std::uint32_t{1} << k); ++family) {
        std::vector<Subset> bases;
        for (int i = 0; i < k; ++i)
          if ((family >> i) & 1u) bases.push_back(rsets[i]);
        bool in_family[1 << 10] = {};
        for (Subset b : bases) in_family[b] = true;
        // Basis exchange.
        bool ok = true;
        for (std::size_t i = 0; ok && i < bases.size(); ++i) {
          for (std::size_t j = 0; ok && j < bases.size(); ++j) {
            Subset only_i = bases[i] & ~bases[j];
            for (int x : elements_of(only_i)) {
              bool exchangeable = false;
              for (int y : elements_of(bases[j] & ~bases[i])) {
                if (in_family[with(without(bases[i], x), y)]) {
                  exchangeable = true;
                  break;
                }
              }
              if (!exchangeable) {
                ok = false;
                break;
              }
            }
          }
        }
        if (!ok) continue;
        std::vector<Subset> best;
        for (const std::vector<Subset>& image : images) {
          std::vector<Subset> mapped;
          mapped.reserve(bases.size());
          for (Subset b : bases) mapped.push_back(image[b]);
          std::sort(mapped.begin(), mapped.end());
          if (best.empty() || mapped < best) best = std::move(mapped);
        }
        seen.insert(best);
      }
    }
    counts.push_back(static_cast<std::int64_t>(seen.size()));
  }
  return counts;
}

}  // namespace matroid
