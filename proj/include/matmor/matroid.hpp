#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "matmor/graph.hpp"
#include "matmor/subset.hpp"

namespace matmor {

// Immutable matroid on {1..n}. Values are cheap to copy; the full rank
// table is memoized lazily behind a call_once, so concurrent rank queries
// are safe.
class Matroid {
 public:
  struct BasisListBacking {
    std::vector<Subset> bases;
  };
  struct GraphicBacking {
    Graph graph;
  };
  struct LinearBacking {
    long prime;
    std::vector<std::vector<long>> rows;  // rows x n, entries reduced mod prime
  };
  struct UniformBacking {
    int rank;
  };
  struct TableBacking {
    std::vector<std::uint8_t> table;  // 2^n entries
  };
  using Backing = std::variant<BasisListBacking, GraphicBacking, LinearBacking,
                               UniformBacking, TableBacking>;

  // Validates equal cardinality and the basis exchange axiom; throws
  // Error("exchange-axiom") with a witnessing (B1, B2, i) payload.
  static Matroid from_bases(int n, std::vector<Subset> bases);
  static Matroid cycle_matroid(Graph g);
  // Columns are the ground set; prime must be a prime <= 2^31.
  static Matroid linear(long prime, std::vector<std::vector<long>> rows);
  static Matroid uniform(int n, int rank);
  // Trusts the table; check_rank_axioms is the explicit validator.
  static Matroid from_rank_table(int n, std::vector<std::uint8_t> table);

  int size() const { return n_; }
  int rank(Subset s) const { return rank_table()[s]; }
  int rank() const { return rank_table()[full_set(n_)]; }
  bool is_independent(Subset s) const { return rank(s) == popcount(s); }
  bool is_spanning(Subset s) const { return rank(s) == rank(); }
  bool is_basis(Subset s) const { return is_independent(s) && is_spanning(s); }
  bool is_loop(int element) const { return rank(singleton(element)) == 0; }

  const std::vector<std::uint8_t>& rank_table() const;

  Matroid dual() const;
  Matroid deleted(int element) const;     // ground set relabeled order-preservingly
  Matroid contracted(int element) const;
  Matroid truncated(int rank) const;      // rk'(S) = min(rk(S), rank)

  std::vector<Subset> bases() const;
  std::vector<Subset> circuits() const;   // exhaustive; n <= kStructureEnumerationCap
  std::vector<Subset> cocircuits() const; // circuits of the dual
  std::vector<Subset> flats() const;
  std::vector<int> loops() const;
  // rk(i) + rk(j) - rk({i,j}): 1 iff i, j are parallel, else 0.
  int parallel_indicator(int i, int j) const;

  const Backing& backing() const { return state_->backing; }

 private:
  struct State {
    explicit State(Backing b) : backing(std::move(b)) {}
    Backing backing;
    mutable std::once_flag once;
    mutable std::vector<std::uint8_t> table;
  };

  Matroid(int n, Backing backing);

  void build_table() const;

  int n_;
  std::shared_ptr<const State> state_;
};

struct RankAxiomReport {
  bool unit_bound_ok = true;   // rk(S) <= |S|
  bool monotone_ok = true;
  bool submodular_ok = true;
  Subset unit_bound_witness = 0;
  Subset monotone_witness = 0;      // S with rk(S) > rk(S + i) for the stored i
  int monotone_element = 0;
  Subset submodular_s1 = 0, submodular_s2 = 0;
  bool ok() const { return unit_bound_ok && monotone_ok && submodular_ok; }
};

// Checks the three rank axioms via their local equivalents (one-element
// monotone steps; diminishing returns for submodularity), O(2^n n^2).
RankAxiomReport check_rank_axioms(int n,
                                  const std::function<int(Subset)>& rank);
RankAxiomReport check_rank_axioms(int n,
                                  const std::vector<std::uint8_t>& table);

}  // namespace matmor
