#pragma once

#include <bit>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace matroid {

// Subsets of a ground set with at most 16 elements are packed into the low
// bits of a 32-bit word; element i corresponds to bit (1u << i).
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline bool contains(Subset s, int element) {
  return (s >> element) & 1u;
}

inline Subset with(Subset s, int element) { return s | (Subset{1} << element); }

inline Subset without(Subset s, int element) {
  return s & ~(Subset{1} << element);
}

inline int lowest_element(Subset s) { return std::countr_zero(s); }

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  while (s) {
    int e = std::countr_zero(s);
    out.push_back(e);
    s &= s - 1;
  }
  return out;
}

// Visits every k-element subset of `universe` in ascending order as bitmasks.
// Iterates Gosper's hack over the compressed index space and expands through
// the positions of `universe`; the expansion preserves bitmask order because
// it is monotone on each bit position. The callable may return void, or bool
// with false meaning "stop"; the function returns false when stopped early.
template <typename F>
bool for_each_k_subset(Subset universe, int k, F&& f) {
  int n = subset_size(universe);
  if (k < 0 || k > n) return true;
  std::vector<int> pos;
  pos.reserve(n);
  for (Subset rest = universe; rest;) {
    int e = std::countr_zero(rest);
    pos.push_back(e);
    rest &= rest - 1;
  }
  auto visit = [&f](Subset s) {
    if constexpr (std::is_same_v<decltype(f(Subset{})), bool>) {
      return f(s);
    } else {
      f(s);
      return true;
    }
  };
  if (k == 0) return visit(Subset{0});
  Subset comb = (Subset{1} << k) - 1;
  Subset limit = Subset{1} << n;
  while (comb < limit) {
    Subset expanded = 0;
    for (Subset c = comb; c;) {
      int i = std::countr_zero(c);
      expanded |= Subset{1} << pos[i];
      c &= c - 1;
    }
    if (!visit(expanded)) return false;
    Subset low = comb & (~comb + 1);
    Subset ripple = comb + low;
    comb = ripple | (((comb ^ ripple) >> 2) / low);
  }
  return true;
}

}  // namespace matroid
