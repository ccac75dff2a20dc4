#pragma once

#include <cstdint>
#include <random>
#include <tuple>
#include <utility>

#include "matmor/flag.hpp"
#include "matmor/morphism.hpp"
#include "matmor/rational.hpp"

namespace matmor {

inline constexpr std::uint64_t kDefaultSeed = 7402;

// Deterministic instance generator for the property suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform_int(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);
  // Nonzero rational with |num| <= max_abs_num, 1 <= den <= max_den.
  Rat nonzero_rational(int max_abs_num, int max_den);
  Rat rational_01(int max_den);         // in (0, 1]
  Rat rational_01_closed(int max_den);  // in [0, 1]
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

// Mix of uniform, graphic, linear (GF(2)/GF(3)) backings, optionally
// dualized or truncated.
Matroid random_matroid(Rng& rng, int n);

// (M, N) with N a quotient of M, built as (P \ T, P / T) for a random P
// on n + |T| elements.
std::pair<Matroid, Matroid> random_quotient_pair(Rng& rng, int n);

// Constituents from a nested contraction chain of one random matroid.
FlagMatroid random_flag(Rng& rng, int n, int max_length);

// Valid morphism: random target N and map g, source a random elongation of
// the induced matroid g^{-1}(N).
MatroidMorphism random_morphism(Rng& rng, int n, int m);

// Unconstrained triple; need not be a morphism.
std::tuple<Matroid, Matroid, GroundMap> random_triple(Rng& rng, int n, int m);

}  // namespace matmor
