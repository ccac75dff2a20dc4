#include "matmor/matroid.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "matmor/config.hpp"
#include "matmor/error.hpp"
#include "matmor/rational.hpp"

namespace matmor {

namespace {

void require_ground_size(int n) {
  if (n < 0) throw Error("invalid-argument", "negative ground set size");
  if (n > max_ground_size()) {
    throw Error("bound-exceeded",
                "ground set size " + std::to_string(n) +
                    " exceeds the enumeration bound " +
                    std::to_string(max_ground_size()) +
                    " (override with MATMOR_MAX_N)");
  }
}

int gf_rank(long p, const std::vector<std::vector<long>>& rows, Subset cols) {
  // Gaussian elimination over GF(p) on the selected columns.
  int m = static_cast<int>(rows.size());
  std::vector<std::vector<long>> mat;
  for (int j = 0; cols != 0; ++j, cols >>= 1) {
    if (!(cols & 1)) continue;
    std::vector<long> col(m);
    for (int i = 0; i < m; ++i) col[i] = rows[i][j];
    mat.push_back(std::move(col));
  }
  int rank = 0;
  for (int row = 0; row < m && rank < static_cast<int>(mat.size()); ++row) {
    int pivot = -1;
    for (int j = rank; j < static_cast<int>(mat.size()); ++j) {
      if (mat[j][row] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    long inv = 1, a = mat[rank][row] % p, e = p - 2;
    // a^(p-2) = a^{-1} mod p
    while (e > 0) {
      if (e & 1) inv = (inv * a) % p;
      a = (a * a) % p;
      e >>= 1;
    }
    for (int j = 0; j < static_cast<int>(mat.size()); ++j) {
      if (j == rank || mat[j][row] == 0) continue;
      long factor = (mat[j][row] * inv) % p;
      for (int i = row; i < m; ++i) {
        mat[j][i] = ((mat[j][i] - factor * mat[rank][i]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid::Matroid(int n, Backing backing)
    : n_(n), state_(std::make_shared<State>(std::move(backing))) {
  require_ground_size(n);
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  require_ground_size(n);
  if (bases.empty()) {
    throw Error("invalid-argument", "empty basis list");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  for (Subset b : bases) {
    if ((b & ~full_set(n)) != 0) {
      throw Error("out-of-range", "basis outside ground set");
    }
  }
  int card = popcount(bases[0]);
  for (Subset b : bases) {
    if (popcount(b) != card) {
      throw Error("exchange-axiom", "bases of unequal cardinality",
                  {{"b1", elements_of(bases[0])}, {"b2", elements_of(b)}});
    }
  }
  std::unordered_set<Subset> in_family(bases.begin(), bases.end());
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      Subset only1 = b1 & ~b2;
      for (Subset rest = only1; rest != 0;) {
        Subset i = rest & (~rest + 1);
        rest ^= i;
        bool exchanged = false;
        for (Subset cand = b2 & ~b1; cand != 0;) {
          Subset j = cand & (~cand + 1);
          cand ^= j;
          if (in_family.count((b1 ^ i) | j)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          throw Error("exchange-axiom", "basis exchange axiom violated",
                      {{"b1", elements_of(b1)},
                       {"b2", elements_of(b2)},
                       {"i", std::countr_zero(i) + 1}});
        }
      }
    }
  }
  return Matroid(n, BasisListBacking{std::move(bases)});
}

Matroid Matroid::cycle_matroid(Graph g) {
  int n = g.edge_count();
  require_ground_size(n);
  return Matroid(n, GraphicBacking{std::move(g)});
}

Matroid Matroid::linear(long prime, std::vector<std::vector<long>> rows) {
  if (prime < 2 || prime > (1L << 31) ||
      mpz_probab_prime_p(BigInt(prime).get_mpz_t(), 30) == 0) {
    throw Error("invalid-argument",
                "modulus " + std::to_string(prime) + " is not a usable prime");
  }
  if (rows.empty()) throw Error("invalid-argument", "matrix has no rows");
  std::size_t n = rows[0].size();
  for (auto& row : rows) {
    if (row.size() != n) {
      throw Error("invalid-argument", "ragged matrix");
    }
    for (long& x : row) x = ((x % prime) + prime) % prime;
  }
  require_ground_size(static_cast<int>(n));
  return Matroid(static_cast<int>(n), LinearBacking{prime, std::move(rows)});
}

Matroid Matroid::uniform(int n, int rank) {
  require_ground_size(n);
  if (rank < 0 || rank > n) {
    throw Error("invalid-argument", "uniform rank outside [0, n]");
  }
  return Matroid(n, UniformBacking{rank});
}

Matroid Matroid::from_rank_table(int n, std::vector<std::uint8_t> table) {
  require_ground_size(n);
  if (table.size() != (std::size_t{1} << n)) {
    throw Error("invalid-argument", "rank table must have 2^n entries");
  }
  return Matroid(n, TableBacking{std::move(table)});
}

void Matroid::build_table() const {
  const std::size_t size = std::size_t{1} << n_;
  auto& table = state_->table;
  table.resize(size);
  if (const auto* u = std::get_if<UniformBacking>(&state_->backing)) {
    for (Subset s = 0; s < size; ++s) {
      table[s] = static_cast<std::uint8_t>(std::min(popcount(s), u->rank));
    }
  } else if (const auto* b = std::get_if<BasisListBacking>(&state_->backing)) {
    for (Subset s = 0; s < size; ++s) {
      int best = 0;
      for (Subset basis : b->bases) best = std::max(best, popcount(s & basis));
      table[s] = static_cast<std::uint8_t>(best);
    }
  } else if (const auto* g = std::get_if<GraphicBacking>(&state_->backing)) {
    for (Subset s = 0; s < size; ++s) {
      table[s] = static_cast<std::uint8_t>(g->graph.rank_of(s));
    }
  } else if (const auto* l = std::get_if<LinearBacking>(&state_->backing)) {
    for (Subset s = 0; s < size; ++s) {
      table[s] = static_cast<std::uint8_t>(gf_rank(l->prime, l->rows, s));
    }
  } else {
    table = std::get<TableBacking>(state_->backing).table;
  }
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  std::call_once(state_->once, [this] { build_table(); });
  return state_->table;
}

Matroid Matroid::dual() const {
  const auto& t = rank_table();
  const Subset full = full_set(n_);
  const int full_rank = t[full];
  std::vector<std::uint8_t> out(t.size());
  for (Subset s = 0; s <= full; ++s) {
    out[s] =
        static_cast<std::uint8_t>(popcount(s) + t[full & ~s] - full_rank);
    if (full == 0) break;
  }
  return Matroid(n_, TableBacking{std::move(out)});
}

Matroid Matroid::deleted(int element) const {
  if (element < 1 || element > n_) {
    throw Error("out-of-range", "element to delete outside ground set");
  }
  const auto& t = rank_table();
  const Subset low_mask = full_set(element - 1);
  std::vector<std::uint8_t> out(std::size_t{1} << (n_ - 1));
  for (Subset s = 0; s < out.size(); ++s) {
    Subset parent = (s & low_mask) | ((s & ~low_mask) << 1);
    out[s] = t[parent];
  }
  return Matroid(n_ - 1, TableBacking{std::move(out)});
}

Matroid Matroid::contracted(int element) const {
  if (element < 1 || element > n_) {
    throw Error("out-of-range", "element to contract outside ground set");
  }
  const auto& t = rank_table();
  const Subset low_mask = full_set(element - 1);
  const Subset bit = singleton(element);
  const int base = t[bit];
  std::vector<std::uint8_t> out(std::size_t{1} << (n_ - 1));
  for (Subset s = 0; s < out.size(); ++s) {
    Subset parent = (s & low_mask) | ((s & ~low_mask) << 1);
    out[s] = static_cast<std::uint8_t>(t[parent | bit] - base);
  }
  return Matroid(n_ - 1, TableBacking{std::move(out)});
}

Matroid Matroid::truncated(int rank) const {
  if (rank < 0) throw Error("invalid-argument", "negative truncation rank");
  const auto& t = rank_table();
  std::vector<std::uint8_t> out(t.size());
  for (std::size_t s = 0; s < t.size(); ++s) {
    out[s] = static_cast<std::uint8_t>(std::min<int>(t[s], rank));
  }
  return Matroid(n_, TableBacking{std::move(out)});
}

std::vector<Subset> Matroid::bases() const {
  const auto& t = rank_table();
  const int r = rank();
  std::vector<Subset> out;
  for (Subset s = 0; s < t.size(); ++s) {
    if (popcount(s) == r && t[s] == r) out.push_back(s);
  }
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  if (n_ > kStructureEnumerationCap) {
    throw Error("bound-exceeded",
                "circuit enumeration capped at n <= " +
                    std::to_string(kStructureEnumerationCap));
  }
  const auto& t = rank_table();
  std::vector<Subset> out;
  for (Subset s = 1; s < t.size(); ++s) {
    if (t[s] >= popcount(s)) continue;  // independent
    bool minimal = true;
    for (Subset rest = s; rest != 0 && minimal;) {
      Subset e = rest & (~rest + 1);
      rest ^= e;
      minimal = t[s ^ e] == popcount(s) - 1;
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<Subset> Matroid::cocircuits() const { return dual().circuits(); }

std::vector<Subset> Matroid::flats() const {
  if (n_ > kStructureEnumerationCap) {
    throw Error("bound-exceeded",
                "flat enumeration capped at n <= " +
                    std::to_string(kStructureEnumerationCap));
  }
  const auto& t = rank_table();
  std::vector<Subset> out;
  for (Subset s = 0; s < t.size(); ++s) {
    bool flat = true;
    for (int j = 1; j <= n_ && flat; ++j) {
      if (!contains(s, j)) flat = t[s | singleton(j)] > t[s];
    }
    if (flat) out.push_back(s);
  }
  return out;
}

std::vector<int> Matroid::loops() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (is_loop(i)) out.push_back(i);
  }
  return out;
}

int Matroid::parallel_indicator(int i, int j) const {
  if (i == j) throw Error("invalid-argument", "parallel_indicator needs i != j");
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw Error("out-of-range", "element outside ground set");
  }
  return rank(singleton(i)) + rank(singleton(j)) -
         rank(singleton(i) | singleton(j));
}

RankAxiomReport check_rank_axioms(int n,
                                  const std::function<int(Subset)>& rank) {
  RankAxiomReport report;
  const Subset full = full_set(n);
  for (Subset s = 0;; ++s) {
    int rs = rank(s);
    if (report.unit_bound_ok && rs > popcount(s)) {
      report.unit_bound_ok = false;
      report.unit_bound_witness = s;
    }
    for (int i = 1; i <= n; ++i) {
      if (contains(s, i)) continue;
      int rsi = rank(s | singleton(i));
      if (report.monotone_ok && rsi < rs) {
        report.monotone_ok = false;
        report.monotone_witness = s;
        report.monotone_element = i;
      }
      // diminishing returns: rk(S+i) + rk(S+j) >= rk(S+i+j) + rk(S)
      for (int j = i + 1; j <= n; ++j) {
        if (contains(s, j)) continue;
        if (!report.submodular_ok) break;
        int rsj = rank(s | singleton(j));
        int rsij = rank(s | singleton(i) | singleton(j));
        if (rsi + rsj < rsij + rs) {
          report.submodular_ok = false;
          report.submodular_s1 = s | singleton(i);
          report.submodular_s2 = s | singleton(j);
        }
      }
    }
    if (s == full) break;
  }
  return report;
}

RankAxiomReport check_rank_axioms(int n,
                                  const std::vector<std::uint8_t>& table) {
  if (table.size() != (std::size_t{1} << n)) {
    throw Error("invalid-argument", "rank table must have 2^n entries");
  }
  return check_rank_axioms(n, [&table](Subset s) { return int{table[s]}; });
}

}  // namespace matmor
