#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matroid/bitset.hpp"
#include "matroid/ground.hpp"

namespace matroid {

struct GraphEdge {
  std::string tail;
  std::string head;
  std::string label;
};

struct ElementClassification {
  Subset loops = 0;
  Subset coloops = 0;
  // Nontrivial (size >= 2) classes, sorted by lowest element.
  std::vector<Subset> parallel_classes;
  std::vector<Subset> series_classes;
};

// A matroid on a labeled ground set, represented by its full rank table.
// All constructors validate their input against the relevant axioms except
// from_rank_table, which trusts the caller and exists for internal use by
// constructions that compute ranks directly.
class Matroid {
 public:
  Matroid() = default;

  static Matroid from_bases(GroundSet ground, const std::vector<Subset>& bases);
  static Matroid from_bases(const std::vector<std::string>& labels,
                            const std::vector<std::vector<std::string>>& bases);
  static Matroid from_circuits(GroundSet ground,
                               const std::vector<Subset>& circuits);
  static Matroid from_circuits(
      const std::vector<std::string>& labels,
      const std::vector<std::vector<std::string>>& circuits);
  // Cycle matroid of a multigraph; loops and parallel edges are allowed.
  static Matroid from_graph(const std::vector<GraphEdge>& edges);
  static Matroid from_rank_table(GroundSet ground,
                                 std::vector<std::int8_t> rank_table);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Subset ground_mask() const { return ground_.full(); }

  int rank() const { return rank_full_; }
  int corank() const { return size() - rank_full_; }
  int rank(Subset s) const { return rank_table_[s]; }
  // Rank of s in the dual matroid.
  int corank(Subset s) const {
    return subset_size(s) + rank_table_[ground_.full() & ~s] - rank_full_;
  }

  bool independent(Subset s) const { return rank_table_[s] == subset_size(s); }
  bool coindependent(Subset s) const { return corank(s) == subset_size(s); }
  bool spanning(Subset s) const { return rank_table_[s] == rank_full_; }
  bool is_circuit(Subset s) const;
  bool is_cocircuit(Subset s) const;
  Subset closure(Subset s) const;

  std::vector<Subset> bases() const;
  std::vector<Subset> circuits() const;
  std::vector<Subset> cocircuits() const;
  std::vector<Subset> flats() const;
  std::vector<Subset> hyperplanes() const;
  std::vector<Subset> cyclic_flats() const;
  // Partition of the ground set into maximal sets of mutual clones (elements
  // lying in exactly the same cyclic flats), sorted by lowest element.
  std::vector<Subset> clonal_classes() const;

  Subset loops() const;
  Subset coloops() const;
  ElementClassification classify_elements() const;

  // Connected components: classes of the transitive closure of "lie on a
  // common circuit"; loops and coloops form singleton components.
  std::vector<Subset> components() const;
  // Requires at least two elements in addition to a single component.
  bool is_connected() const;

  bool is_uniform() const;
  bool is_simple() const;
  bool is_cosimple() const;
  // True when e is not a coloop and every circuit through e is spanning.
  bool is_free_element(int e) const;

  // Labeled equality: same labels in the same order with the same ranks.
  bool operator==(const Matroid&) const = default;

 private:
  GroundSet ground_;
  std::vector<std::int8_t> rank_table_;
  int rank_full_ = 0;
};

Matroid dual(const Matroid& m);

// True when both matroids have the same set of labels (possibly in different
// order) and assign equal ranks to every set of labels.
bool same_labeled_matroid(const Matroid& a, const Matroid& b);

std::int64_t binomial(int n, int k);

}  // namespace matroid
