#include "matmor/flag.hpp"

#include <string>

#include "matmor/error.hpp"
#include "matmor/morphism.hpp"

namespace matmor {

FlagMatroid::FlagMatroid(std::vector<Matroid> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) {
    throw Error("invalid-argument", "flag matroid needs >= 1 constituent");
  }
  const int n = constituents_[0].size();
  for (const Matroid& m : constituents_) {
    if (m.size() != n) {
      throw Error("ground-set-mismatch",
                  "flag constituents live on different ground sets");
    }
  }
  // M_k must be a quotient of M_{k+1}
  for (std::size_t k = 0; k + 1 < constituents_.size(); ++k) {
    auto verdict = is_quotient(constituents_[k + 1], constituents_[k]);
    if (!verdict) {
      throw Error("not-a-flag",
                  "constituent " + std::to_string(k + 1) +
                      " is not a quotient of constituent " +
                      std::to_string(k + 2),
                  {{"index", k + 1},
                   {"s1", elements_of(verdict.s1)},
                   {"s2", elements_of(verdict.s2)}});
    }
  }
}

int FlagMatroid::size() const { return constituents_[0].size(); }

FlagMatroid FlagMatroid::deleted(int element) const {
  std::vector<Matroid> out;
  out.reserve(constituents_.size());
  for (const Matroid& m : constituents_) out.push_back(m.deleted(element));
  return FlagMatroid(std::move(out));
}

FlagMatroid FlagMatroid::contracted(int element) const {
  std::vector<Matroid> out;
  out.reserve(constituents_.size());
  for (const Matroid& m : constituents_) out.push_back(m.contracted(element));
  return FlagMatroid(std::move(out));
}

}  // namespace matmor
