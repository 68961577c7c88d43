#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// Selection predicate for enumerate(); unset fields mean "no constraint".
struct EnumFilter {
  bool connected = false;
  bool simple = false;
  bool three_connected = false;
  bool binary = false;
  std::optional<int> min_rank;
  std::optional<int> max_rank;
};

// Builds a catalog matroid or a composition expression over catalog names.
//
// Atoms: "U(r,n)" uniform, "MW(n)" rank-n wheel (spokes s1..sn, rim edges
// r1..rn), "W(r)" rank-r whirl, "MK4", "MK23" (cycle matroids of K4 and
// K_{2,3}), "Q6", "P6" (relaxations of the rank-3 whirl).
//
// Compositions: "A+B" direct sum, "A~B@p" 2-sum at p, "A||B@p" parallel
// connection at p, left associative. When an expression contains more than
// one atom, the atoms' elements are renamed to fresh letters a, b, c, ...
// left to right; "@p" names an element of the left operand by its current
// label and of the right operand by its own catalog label.
Matroid named(const std::string& expression);

// One representative per isomorphism class of matroids on n elements,
// produced by single-element extensions (one per modular cut of the flat
// lattice) of the classes on n - 1 elements. Results are memoized in memory
// and, when MATROID_CACHE_DIR is set, in a newline-delimited JSON cache file.
const std::vector<Matroid>& matroid_classes(int n);

// The classes on exactly n elements that satisfy the filter.
std::vector<Matroid> enumerate(int n, const EnumFilter& filter = {});

// Explicit witness matroids, labeled by the construction they instantiate,
// for the finitely many N whose connectivity classes admit hand-built
// counterexamples (heredity failures and transitivity failures).
std::vector<std::pair<std::string, Matroid>> proof_constructions(
    const Matroid& n);

}  // namespace matroid
