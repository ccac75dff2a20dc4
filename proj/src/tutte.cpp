#include "matmor/tutte.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "matmor/error.hpp"

namespace matmor {

namespace {

void require_nonzero(const Rat& q, const char* name) {
  if (q == 0) {
    throw Error("invalid-argument", std::string(name) + " must be nonzero");
  }
}

Polynomial::Expt multiaffine_expt(int var_count, Subset s, int offset) {
  Polynomial::Expt e(var_count, 0);
  while (s) {
    Subset low = s & (~s + 1);
    e[std::countr_zero(low) + offset] = 1;
    s ^= low;
  }
  return e;
}

void validate_quotient(const Matroid& m, const Matroid& n) {
  if (auto v = is_quotient(m, n); !v) {
    throw Error("not-a-quotient", "pair is not a matroid quotient",
                {{"s1", elements_of(v.s1)}, {"s2", elements_of(v.s2)}});
  }
}

}  // namespace

Polynomial multivariate_tutte(const Matroid& m, const Rat& q) {
  require_nonzero(q, "q");
  const auto& rk = m.rank_table();
  Polynomial z(m.size());
  for (Subset s = 0; s < rk.size(); ++s) {
    z.add_term(multiaffine_expt(m.size(), s, 0), rat_pow(q, -rk[s]));
  }
  return z;
}

Polynomial multivariate_tutte_quotient(const Matroid& m, const Matroid& n,
                                       const Rat& p, const Rat& q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  validate_quotient(m, n);
  const auto& rk_m = m.rank_table();
  const auto& rk_n = n.rank_table();
  Polynomial z(m.size());
  for (Subset s = 0; s < rk_m.size(); ++s) {
    z.add_term(multiaffine_expt(m.size(), s, 0),
               rat_pow(p, -rk_m[s]) * rat_pow(q, -rk_n[s]));
  }
  return z;
}

TrivariatePolynomial lasvergnas_tutte(const Matroid& m, const Matroid& n) {
  validate_quotient(m, n);
  const auto& rk_m = m.rank_table();
  const auto& rk_n = n.rank_table();
  const int rm = m.rank(), rn = n.rank();
  TrivariatePolynomial t;
  for (Subset s = 0; s < rk_m.size(); ++s) {
    const int a = rn - rk_n[s];               // (x-1)^a
    const int b = popcount(s) - rk_m[s];      // (y-1)^b
    const int c = (rm - rk_m[s]) - a;         // z^c
    for (int i = 0; i <= a; ++i) {
      Rat ci = Rat(binomial(a, i)) * ((a - i) % 2 ? -1 : 1);
      for (int j = 0; j <= b; ++j) {
        Rat cj = Rat(binomial(b, j)) * ((b - j) % 2 ? -1 : 1);
        t.add_term({i, j, c}, ci * cj);
      }
    }
  }
  return t;
}

Polynomial homogeneous_tutte(const FlagMatroid& flag, std::span<const Rat> q) {
  if (static_cast<int>(q.size()) != flag.length()) {
    throw Error("invalid-argument", "need one parameter per constituent");
  }
  for (const Rat& qk : q) require_nonzero(qk, "q_k");
  const int n = flag.size();
  std::vector<const std::vector<std::uint8_t>*> tables;
  tables.reserve(flag.length());
  for (int k = 0; k < flag.length(); ++k) {
    tables.push_back(&flag.constituent(k).rank_table());
  }
  Polynomial z(n + 1);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    Rat coeff(1);
    for (int k = 0; k < flag.length(); ++k) {
      coeff *= rat_pow(q[k], -(*tables[k])[s]);
    }
    auto e = multiaffine_expt(n + 1, s, 1);
    e[0] = n - popcount(s);
    z.add_term(std::move(e), std::move(coeff));
  }
  return z;
}

Polynomial homogeneous_tutte_morphism(const MatroidMorphism& f, const Rat& p,
                                      const Rat& q) {
  FlagMatroid flag({induced_matroid(f.map(), f.target()), f.source()});
  const Rat qs[2] = {q, p};
  return homogeneous_tutte(flag, qs);
}

Polynomial basis_generating(const MatroidMorphism& f, bool homogeneous) {
  const int n = f.source().size();
  Polynomial b(homogeneous ? n + 1 : n);
  for (Subset s : morphism_bases(f)) {
    if (homogeneous) {
      auto e = multiaffine_expt(n + 1, s, 1);
      e[0] = n - popcount(s);
      b.add_term(std::move(e), Rat(1));
    } else {
      b.add_term(multiaffine_expt(n, s, 0), Rat(1));
    }
  }
  return b;
}

Polynomial spanning_generating(const Matroid& m) {
  const auto& rk = m.rank_table();
  const int full = m.rank();
  Polynomial out(m.size());
  for (Subset s = 0; s < rk.size(); ++s) {
    if (rk[s] == full) out.add_term(multiaffine_expt(m.size(), s, 0), Rat(1));
  }
  return out;
}

Polynomial independence_generating(const Matroid& m) {
  const auto& rk = m.rank_table();
  Polynomial out(m.size());
  for (Subset s = 0; s < rk.size(); ++s) {
    if (rk[s] == popcount(s)) {
      out.add_term(multiaffine_expt(m.size(), s, 0), Rat(1));
    }
  }
  return out;
}

namespace {

// Exact limit machinery: every subset contributes a distinct monomial whose
// coefficient is a pure power of the vanishing parameter(s); the limit is
// the slice of (lexicographically) minimal degree.
Polynomial graded_slice(
    int var_count,
    const std::vector<std::pair<std::pair<long, long>, Subset>>& graded,
    int offset, int w0_from_card, int n) {
  std::pair<long, long> best = graded.front().first;
  for (const auto& [deg, s] : graded) best = std::min(best, deg);
  Polynomial out(var_count);
  for (const auto& [deg, s] : graded) {
    if (deg != best) continue;
    auto e = multiaffine_expt(var_count, s, offset);
    if (w0_from_card) e[0] = n - popcount(s);
    out.add_term(std::move(e), Rat(1));
  }
  return out;
}

}  // namespace

Polynomial tutte_limit_spanning(const Matroid& m) {
  const auto& rk = m.rank_table();
  const int full = m.rank();
  std::vector<std::pair<std::pair<long, long>, Subset>> graded;
  graded.reserve(rk.size());
  for (Subset s = 0; s < rk.size(); ++s) {
    graded.push_back({{full - rk[s], 0}, s});
  }
  return graded_slice(m.size(), graded, 0, 0, m.size());
}

Polynomial tutte_limit_independence(const Matroid& m) {
  const auto& rk = m.rank_table();
  std::vector<std::pair<std::pair<long, long>, Subset>> graded;
  graded.reserve(rk.size());
  for (Subset s = 0; s < rk.size(); ++s) {
    graded.push_back({{popcount(s) - rk[s], 0}, s});
  }
  return graded_slice(m.size(), graded, 0, 0, m.size());
}

Polynomial morphism_limit_basis(const MatroidMorphism& f) {
  const int n = f.source().size();
  const auto& rk_m = f.source().rank_table();
  const auto& rk_n = f.target().rank_table();
  const auto img = f.map().image_table();
  const int rk_image = rk_n[img[full_set(n)]];
  // q -> 0 first, then p -> 0: lexicographic (q-degree, p-degree)
  std::vector<std::pair<std::pair<long, long>, Subset>> graded;
  graded.reserve(rk_m.size());
  for (Subset s = 0; s < rk_m.size(); ++s) {
    graded.push_back(
        {{rk_image - rk_n[img[s]], popcount(s) - rk_m[s]}, s});
  }
  return graded_slice(n + 1, graded, 1, 1, n);
}

Polynomial pairing_polynomial(const FlagMatroid& flag,
                              std::span<const Rat> q) {
  if (static_cast<int>(q.size()) != flag.length()) {
    throw Error("invalid-argument", "need one parameter per constituent");
  }
  const int n = flag.size();
  Polynomial p(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Rat coeff(1);
      for (int k = 0; k < flag.length(); ++k) {
        coeff *= rat_pow(q[k], flag.constituent(k).parallel_indicator(i, j));
      }
      if (coeff == 0) continue;
      Polynomial::Expt e(n, 0);
      e[i - 1] = 1;
      e[j - 1] = 1;
      p.add_term(std::move(e), std::move(coeff));
    }
  }
  return p;
}

bool lemma46_holds(const FlagMatroid& flag, std::span<const Rat> q,
                   std::span<const Rat> w) {
  const int n = flag.size();
  if (n < 2) throw Error("invalid-argument", "inequality needs n >= 2");
  if (static_cast<int>(w.size()) != n) {
    throw Error("invalid-argument", "need one w per ground element");
  }
  for (const Rat& qk : q) {
    if (qk < 0 || qk > 1) {
      throw Error("invalid-argument", "inequality needs q_k in [0, 1]");
    }
  }
  Rat sum(0);
  for (const Rat& wi : w) sum += wi;
  Rat lhs = Rat(1, 2) * (Rat(1) - Rat(1, n)) * sum * sum;
  Rat rhs = pairing_polynomial(flag, q).evaluate(w);
  return lhs >= rhs;
}

}  // namespace matmor
