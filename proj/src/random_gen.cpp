#include "matmor/random_gen.hpp"

#include <algorithm>

#include "matmor/error.hpp"

namespace matmor {

int Rng::uniform_int(int lo, int hi) {
  // modulo reduction keeps streams identical across standard libraries
  return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool Rng::coin(double p) {
  return (eng_() >> 11) * 0x1.0p-53 < p;
}

Rat Rng::nonzero_rational(int max_abs_num, int max_den) {
  int num = uniform_int(1, max_abs_num) * (coin() ? 1 : -1);
  int den = uniform_int(1, max_den);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat Rng::rational_01(int max_den) {
  int den = uniform_int(1, max_den);
  Rat r(uniform_int(1, den), den);
  r.canonicalize();
  return r;
}

Rat Rng::rational_01_closed(int max_den) {
  int den = uniform_int(1, max_den);
  Rat r(uniform_int(0, den), den);
  r.canonicalize();
  return r;
}

Matroid random_matroid(Rng& rng, int n) {
  Matroid m = [&]() -> Matroid {
    switch (rng.uniform_int(0, 2)) {
      case 0:
        return Matroid::uniform(n, rng.uniform_int(0, n));
      case 1: {
        int v = rng.uniform_int(1, n + 1);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(n);
        for (int e = 0; e < n; ++e) {
          edges.push_back({rng.uniform_int(1, v), rng.uniform_int(1, v)});
        }
        return Matroid::cycle_matroid(Graph(v, std::move(edges)));
      }
      default: {
        long p = rng.coin() ? 2 : 3;
        int r = rng.uniform_int(1, std::max(1, std::min(n, 5)));
        std::vector<std::vector<long>> rows(r, std::vector<long>(n));
        for (auto& row : rows) {
          for (long& x : row) x = rng.uniform_int(0, static_cast<int>(p) - 1);
        }
        return Matroid::linear(p, std::move(rows));
      }
    }
  }();
  if (rng.coin(0.25)) m = m.dual();
  if (rng.coin(0.2)) m = m.truncated(rng.uniform_int(0, std::max(0, m.rank())));
  return m;
}

namespace {

// (P / U) \ (T \ U) materialized on [n]; elements of T sit above n.
Matroid contract_slice(const Matroid& p, int n, Subset u) {
  const auto& t = p.rank_table();
  const int base = t[u];
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Subset s = 0; s < table.size(); ++s) {
    table[s] = static_cast<std::uint8_t>(t[s | u] - base);
  }
  return Matroid::from_rank_table(n, std::move(table));
}

}  // namespace

std::pair<Matroid, Matroid> random_quotient_pair(Rng& rng, int n) {
  int t = rng.uniform_int(0, 3);
  Matroid p = random_matroid(rng, n + t);
  Subset extension = full_set(n + t) & ~full_set(n);
  return {contract_slice(p, n, 0), contract_slice(p, n, extension)};
}

FlagMatroid random_flag(Rng& rng, int n, int max_length) {
  int length = rng.uniform_int(1, max_length);
  if (rng.coin(0.4)) {
    // truncation chain; adjacent equalities allowed
    Matroid top = random_matroid(rng, n);
    std::vector<Matroid> constituents(length, top);
    int r = top.rank();
    for (int k = length - 2; k >= 0; --k) {
      r = rng.uniform_int(0, r);
      constituents[k] = top.truncated(r);
    }
    return FlagMatroid(std::move(constituents));
  }
  int t = rng.uniform_int(0, 4);
  Matroid p = random_matroid(rng, n + t);
  // nested contraction sets: U_length = {} growing toward U_1
  std::vector<Matroid> constituents(length, contract_slice(p, n, 0));
  Subset u = 0;
  for (int k = length - 2; k >= 0; --k) {
    for (int e = n + 1; e <= n + t; ++e) {
      if (!contains(u, e) && rng.coin()) u |= singleton(e);
    }
    constituents[k] = contract_slice(p, n, u);
  }
  return FlagMatroid(std::move(constituents));
}

MatroidMorphism random_morphism(Rng& rng, int n, int m) {
  Matroid target = random_matroid(rng, m);
  std::vector<int> targets(n);
  for (int& t : targets) t = rng.uniform_int(1, m);
  GroundMap map(n, m, std::move(targets));
  Matroid induced = induced_matroid(map, target);
  Matroid source = [&]() -> Matroid {
    switch (rng.uniform_int(0, 2)) {
      case 0:
        return induced;
      case 1:
        return Matroid::uniform(n, n);
      default: {
        // an elongation of the induced matroid: spanning sets of size k
        int k = rng.uniform_int(induced.rank(), n);
        std::vector<Subset> bases;
        const auto& rk = induced.rank_table();
        for (Subset s = 0; s < rk.size(); ++s) {
          if (popcount(s) == k && rk[s] == induced.rank()) bases.push_back(s);
        }
        return Matroid::from_bases(n, std::move(bases));
      }
    }
  }();
  return MatroidMorphism(std::move(source), std::move(target), std::move(map));
}

std::tuple<Matroid, Matroid, GroundMap> random_triple(Rng& rng, int n, int m) {
  Matroid source = random_matroid(rng, n);
  Matroid target = random_matroid(rng, m);
  std::vector<int> targets(n);
  for (int& t : targets) t = rng.uniform_int(1, m);
  return {std::move(source), std::move(target),
          GroundMap(n, m, std::move(targets))};
}

}  // namespace matmor
