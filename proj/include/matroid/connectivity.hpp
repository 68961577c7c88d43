#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

struct TwoSeparation {
  Subset side_x = 0;  // canonical side: contains element 0
  Subset side_y = 0;
  int order = 0;  // lambda value, at most 1
};

// A fan ordering (s_1, ..., s_n), n >= 3: every window of three consecutive
// elements is a triangle or a triad, and a triangle window is always followed
// by a triad window and vice versa. step_types records each window as
// 'T' (triangle only), 'D' (triad only) or 'B' (both).
struct Fan {
  std::vector<int> ordering;
  std::string step_types;
};

struct FanLemmaReport {
  long long fans_seen = 0;      // all fan orderings, up to reversal
  long long fans_qualifying = 0;  // both end-pairs a circuit or cocircuit
  std::vector<Fan> violations;  // qualifying fans whose set is no component
};

struct RemovalOutcome {
  int element = 0;
  bool delete_ok = false;
  bool contract_ok = false;
};

struct RemovalReport {
  std::vector<RemovalOutcome> outcomes;
  // Elements where neither the deletion nor the contraction stays
  // N-connected.
  std::vector<int> failures;
};

int lambda(const Matroid& m, Subset x);
// Minimum of lambda over all X with a ⊆ X ⊆ E − b.
int kappa(const Matroid& m, Subset a, Subset b);

// All partitions (X, Y) with both sides of size >= 2 and lambda(X) <= 1,
// reported once each with the side containing element 0 first.
std::vector<TwoSeparation> two_separations(const Matroid& m);
bool is_k_connected(const Matroid& m, int k);

// Maximal fan orderings, each reported once up to reversal, in ascending
// lexicographic order of the canonical ordering.
std::vector<Fan> find_fans(const Matroid& m);
bool is_special_fan(const Matroid& m, const Fan& fan);

// Checks, over every fan ordering of m whose two end-pairs are each a
// circuit or a cocircuit, that the fan's element set is a component.
FanLemmaReport check_special_fan_lemma(const Matroid& m);

// First ordered triple (e, f, g), in lexicographic order, with e ~ f and
// f ~ g but not e ~ g in the N-minor pair relation; empty when the relation
// is transitive.
std::optional<std::array<int, 3>> transitivity_counterexample(
    const Matroid& m, const Matroid& n);

// Scans the universe in order and returns the first matroid on which the
// N-minor pair relation fails to be transitive.
std::optional<std::pair<Matroid, std::array<int, 3>>>
search_transitivity_counterexample(const Matroid& n,
                                   const std::vector<Matroid>& universe);

// For N-connected m with more elements than n: records, per element e,
// whether deleting or contracting e preserves N-connectivity.
RemovalReport hereditary_removal_check(const Matroid& m, const Matroid& n);

}  // namespace matroid
