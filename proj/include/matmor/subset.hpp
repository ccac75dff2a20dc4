#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace matmor {

// Ground sets are {1..n}; element i lives at bit i-1.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset singleton(int element) { return Subset{1} << (element - 1); }

inline Subset full_set(int n) {
  return n == 0 ? 0 : (Subset{1} << n) - 1;
}

inline bool contains(Subset s, int element) {
  return (s >> (element - 1)) & 1u;
}

std::vector<int> elements_of(Subset s);                       // ascending, 1-based
Subset subset_of(const std::vector<int>& elements, int n);    // validates range

// Order on subsets as sorted element lists compared lexicographically
// ({1,4} < {2,3}; a proper prefix sorts first).
bool lex_less(Subset a, Subset b);

// (cardinality, lex) order on subsets: used to pick minimal witnesses.
bool card_lex_less(Subset a, Subset b);

// All subsets of [n] sorted by card_lex_less. Intended for witness scans.
std::vector<Subset> subsets_by_card_lex(int n);

}  // namespace matmor
