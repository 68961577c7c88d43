#pragma once

#include <map>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

// Result of splitting a matroid across an exact 2-separation (X, Y): two
// parts on X ∪ {p} and Y ∪ {p} whose 2-sum at p rebuilds the original.
struct TwoSumDecomposition {
  Matroid part_x;
  Matroid part_y;
  std::string basepoint;
};

Matroid deletion(const Matroid& m, Subset remove);
Matroid contraction(const Matroid& m, Subset contract);
// Contract then delete; the two commute for disjoint sets.
Matroid minor(const Matroid& m, Subset contract, Subset remove);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Glues the two matroids along pa ~ pb; the identified element keeps the
// label pa. Both basepoints must be non-loops and non-coloops.
Matroid parallel_connection(const Matroid& a, const Matroid& b,
                            const std::string& pa, const std::string& pb);
Matroid series_connection(const Matroid& a, const Matroid& b,
                          const std::string& pa, const std::string& pb);

// Parallel connection at the shared label p, then delete p. Both sides need
// at least three elements.
Matroid two_sum(const Matroid& a, const Matroid& b, const std::string& p);

// The part of m on X ∪ {p} induced by an exact 2-separation (X, E−X).
Matroid extract_part(const Matroid& m, Subset x, const std::string& p);

TwoSumDecomposition split_on(const Matroid& m, Subset x,
                             const std::string& basepoint);

Matroid add_parallel(const Matroid& m, const std::string& of,
                     const std::string& fresh);
Matroid add_series(const Matroid& m, const std::string& of,
                   const std::string& fresh);

// Drops the rank by one: bases become the independent (r-1)-sets.
Matroid truncation(const Matroid& m);

// Turns the circuit-hyperplane c into a basis.
Matroid relax(const Matroid& m, Subset c);

Matroid relabeled(const Matroid& m, const std::vector<std::string>& labels);
Matroid relabeled(const Matroid& m,
                  const std::map<std::string, std::string>& rename);

}  // namespace matroid
