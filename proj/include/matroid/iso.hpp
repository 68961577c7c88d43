#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// Histogram of the circuit and cocircuit sizes through one element; equal
// signatures are necessary for two elements to correspond under an
// isomorphism.
struct ElementSignature {
  std::array<std::int16_t, kMaxGroundSize + 1> circuit_sizes{};
  std::array<std::int16_t, kMaxGroundSize + 1> cocircuit_sizes{};
  auto operator<=>(const ElementSignature&) const = default;
};

struct Fingerprint {
  int size = 0;
  int rank = 0;
  int corank = 0;
  std::vector<int> circuit_sizes;    // sorted multiset
  std::vector<int> cocircuit_sizes;  // sorted multiset
  std::vector<ElementSignature> per_element;
  std::vector<ElementSignature> sorted_signatures;
  // Stable textual form of the label-independent parts, usable as a bucket
  // key when grouping candidate-isomorphic matroids.
  std::string key() const;
  bool invariant_equal(const Fingerprint& other) const;
};

Fingerprint fingerprint(const Matroid& m);

// map[i] = index in b of the element matched with element i of a.
using IsoMap = std::vector<int>;

// Lexicographically first rank-preserving bijection, if any.
std::optional<IsoMap> isomorphic(const Matroid& a, const Matroid& b);

struct MinorWitness {
  Subset contract = 0;
  Subset remove = 0;
  // Indexed by elements of the host: target element index, or -1 for
  // elements that were contracted or deleted.
  std::vector<int> map;
};

// First witness, in ascending (contract, remove) bitmask order, of a minor
// of m isomorphic to n that keeps every element of z.
std::optional<MinorWitness> has_minor_using(const Matroid& m, const Matroid& n,
                                            Subset z);

// Recomputes the minor and checks the witness map subset-by-subset.
bool verify_witness(const Matroid& m, const Matroid& n, const MinorWitness& w);

struct PairRelation {
  int n = 0;
  std::vector<std::uint8_t> adj;  // row-major n x n, symmetric
  bool adjacent(int e, int f) const { return adj[static_cast<std::size_t>(e) * n + f] != 0; }
  bool complete() const;
};

// Edge {e,f} present iff some minor isomorphic to n keeps both e and f.
PairRelation pair_relation(const Matroid& m, const Matroid& n, int jobs = 1);
bool is_n_connected(const Matroid& m, const Matroid& n, int jobs = 1);

// First named oracle matroid that appears as a minor keeping all three
// elements of z3.
std::optional<std::pair<std::string, MinorWitness>> has_minor_using_triple(
    const Matroid& m, const std::vector<std::pair<std::string, Matroid>>& oracles,
    Subset z3);

// No minor isomorphic to the 4-point line.
bool is_binary(const Matroid& m);

}  // namespace matroid
