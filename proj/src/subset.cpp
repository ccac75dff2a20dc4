#include "matmor/subset.hpp"

#include <algorithm>
#include <string>

#include "matmor/error.hpp"

namespace matmor {

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  while (s) {
    Subset low = s & (~s + 1);
    out.push_back(std::countr_zero(low) + 1);
    s ^= low;
  }
  return out;
}

Subset subset_of(const std::vector<int>& elements, int n) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw Error("out-of-range", "element " + std::to_string(e) +
                                      " outside ground set [" +
                                      std::to_string(n) + "]");
    }
    s |= singleton(e);
  }
  return s;
}

bool lex_less(Subset a, Subset b) {
  if (a == b) return false;
  Subset diff = a ^ b;
  Subset low = diff & (~diff + 1);          // smallest differing element
  Subset above = ~((low << 1) - 1);         // elements strictly above it
  if (a & low) return (b & above) != 0;     // ...unless b is a proper prefix
  return (a & above) == 0;
}

bool card_lex_less(Subset a, Subset b) {
  int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

std::vector<Subset> subsets_by_card_lex(int n) {
  std::vector<Subset> out(std::size_t{1} << n);
  for (Subset s = 0; s < out.size(); ++s) out[s] = s;
  std::sort(out.begin(), out.end(), card_lex_less);
  return out;
}

}  // namespace matmor
