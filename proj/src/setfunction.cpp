#include "matmor/setfunction.hpp"

#include <algorithm>
#include <cmath>

#include "matmor/config.hpp"
#include "matmor/error.hpp"

namespace matmor {

SetFunction::SetFunction(int n, std::vector<Rat> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || n > max_ground_size()) {
    throw Error("bound-exceeded", "set function ground size out of bounds");
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw Error("invalid-argument", "set function table must have 2^n entries");
  }
}

SetFunction SetFunction::from_matroid_rank(const Matroid& m) {
  const auto& t = m.rank_table();
  std::vector<Rat> values(t.size());
  for (std::size_t s = 0; s < t.size(); ++s) values[s] = int{t[s]};
  return SetFunction(m.size(), std::move(values));
}

bool SetFunction::integer_valued() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return v.get_den() == 1; });
}

SetFunction SetFunction::plus(const SetFunction& o) const {
  if (o.n_ != n_) throw Error("ground-set-mismatch", "set function sizes differ");
  std::vector<Rat> values(values_.size());
  for (std::size_t s = 0; s < values_.size(); ++s) {
    values[s] = values_[s] + o.values_[s];
  }
  return SetFunction(n_, std::move(values));
}

SetFunction SetFunction::scaled(const Rat& c) const {
  std::vector<Rat> values(values_.size());
  for (std::size_t s = 0; s < values_.size(); ++s) values[s] = values_[s] * c;
  return SetFunction(n_, std::move(values));
}

SetFunction SetFunction::shifted(const Rat& c) const {
  std::vector<Rat> values(values_.size());
  for (std::size_t s = 0; s < values_.size(); ++s) values[s] = values_[s] + c;
  return SetFunction(n_, std::move(values));
}

namespace {

Polynomial::Expt homogenized_expt(int n, Subset s) {
  Polynomial::Expt e(n + 1, 0);
  e[0] = n - popcount(s);
  for (int i = 1; i <= n; ++i) {
    if (contains(s, i)) e[i] = 1;
  }
  return e;
}

}  // namespace

Polynomial z_of_setfunction(const SetFunction& r, const Rat& p) {
  if (p <= 0) throw Error("invalid-argument", "p must be positive");
  if (!r.integer_valued()) {
    throw Error("not-integer-valued",
                "exact Z_{p,r} needs an integer-valued set function; "
                "use the approx form for rational values");
  }
  const int n = r.size();
  Polynomial z(n + 1);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    z.add_term(homogenized_expt(n, s),
               rat_pow(p, -r.value(s).get_num().get_si()));
  }
  return z;
}

Polynomial z_of_setfunction_approx(const SetFunction& r, const Rat& p) {
  if (p <= 0) throw Error("invalid-argument", "p must be positive");
  const int n = r.size();
  Polynomial z(n + 1);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    double c = std::pow(p.get_d(), -r.value(s).get_d());
    z.add_term(homogenized_expt(n, s), Rat(c));
  }
  return z;
}

const std::vector<Rat>& default_probe_grid() {
  static const std::vector<Rat> grid = [] {
    std::vector<Rat> g;
    for (int k = 1; k <= 8; ++k) g.push_back(Rat(k, 8));
    return g;
  }();
  return grid;
}

LnProbeReport probe_ln(const SetFunction& r, std::span<const Rat> grid) {
  if (grid.empty()) throw Error("invalid-argument", "empty probe grid");
  LnProbeReport report;
  for (const Rat& p : grid) {
    if (p <= 0 || p > 1) {
      throw Error("invalid-argument", "grid points must lie in (0, 1]");
    }
    LnProbeEntry entry{p, is_lorentzian(z_of_setfunction(r, p))};
    if (!entry.verdict.ok && !report.failed) {
      report.failed = true;
      report.witness_p = p;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Polynomial limit_extraction(const SetFunction& r,
                            std::span<const int> scale_exponents) {
  const int n = r.size();
  if (static_cast<int>(scale_exponents.size()) != n) {
    throw Error("invalid-argument", "need one scaling exponent per element");
  }
  if (!r.integer_valued()) {
    throw Error("not-integer-valued", "limit extraction needs integer values");
  }
  // p-degree of the S term of Z_{p,r}(1, p^{e_1} w_1, ..., p^{e_n} w_n)
  std::vector<long> degree(std::size_t{1} << n);
  long best = 0;
  bool first = true;
  for (Subset s = 0; s < degree.size(); ++s) {
    long d = -r.value(s).get_num().get_si();
    for (int i = 1; i <= n; ++i) {
      if (contains(s, i)) d += scale_exponents[i - 1];
    }
    degree[s] = d;
    if (first || d < best) best = d;
    first = false;
  }
  Polynomial out(n);
  for (Subset s = 0; s < degree.size(); ++s) {
    if (degree[s] != best) continue;
    Polynomial::Expt e(n, 0);
    for (int i = 1; i <= n; ++i) {
      if (contains(s, i)) e[i - 1] = 1;
    }
    out.add_term(std::move(e), Rat(1));
  }
  return out;
}

SubmodularVerdict is_submodular(const SetFunction& r) {
  const int n = r.size();
  const Subset full = full_set(n);
  for (Subset s = 0;; ++s) {
    for (int i = 1; i <= n; ++i) {
      if (contains(s, i)) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (contains(s, j)) continue;
        Subset si = s | singleton(i), sj = s | singleton(j);
        if (r.value(si) + r.value(sj) < r.value(si | sj) + r.value(s)) {
          return {false, si, sj};
        }
      }
    }
    if (s == full) break;
  }
  return {};
}

MnatVerdict is_mnat_concave(const SetFunction& r) {
  const int n = r.size();
  const Subset full = full_set(n);
  for (Subset s = 0;; ++s) {
    // (1) local exchange
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Subset si = s | singleton(i), sj = s | singleton(j);
        if (r.value(si | sj) + r.value(s) > r.value(si) + r.value(sj)) {
          return {false, 1, s, i, j, 0};
        }
      }
    }
    // (2) the maximum of the three values is attained at least twice
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          Subset bi = singleton(i), bj = singleton(j), bk = singleton(k);
          Rat v1 = r.value(s | bj | bk) + r.value(s | bi);
          Rat v2 = r.value(s | bi | bk) + r.value(s | bj);
          Rat v3 = r.value(s | bi | bj) + r.value(s | bk);
          Rat top = std::max({v1, v2, v3});
          int hits = (v1 == top) + (v2 == top) + (v3 == top);
          if (hits < 2) return {false, 2, s, i, j, k};
        }
      }
    }
    if (s == full) break;
  }
  return {};
}

MnatConsistencyReport mnat_consistency(const SetFunction& r,
                                       std::span<const Rat> grid) {
  MnatConsistencyReport report;
  report.probe = probe_ln(r, grid);
  report.mnat = is_mnat_concave(r);
  report.contradiction_candidate = !report.probe.failed && !report.mnat.ok;
  return report;
}

}  // namespace matmor
