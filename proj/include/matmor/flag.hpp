#pragma once

#include <vector>

#include "matmor/matroid.hpp"

namespace matmor {

// Sequence (M_1, ..., M_l) on a common ground set with M_k a quotient of
// M_{k+1}; equality of adjacent constituents allowed. Validated on
// construction; throws Error("not-a-flag") with the failing index and a
// witnessing pair.
class FlagMatroid {
 public:
  explicit FlagMatroid(std::vector<Matroid> constituents);

  int size() const;    // n
  int length() const { return static_cast<int>(constituents_.size()); }
  const Matroid& constituent(int k) const { return constituents_.at(k); }  // 0-based
  const std::vector<Matroid>& constituents() const { return constituents_; }

  FlagMatroid deleted(int element) const;
  FlagMatroid contracted(int element) const;

 private:
  std::vector<Matroid> constituents_;
};

}  // namespace matmor
