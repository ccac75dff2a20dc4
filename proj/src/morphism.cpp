#include "matmor/morphism.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "matmor/config.hpp"
#include "matmor/error.hpp"

namespace matmor {

GroundMap::GroundMap(int domain, int codomain, std::vector<int> targets)
    : domain_(domain), codomain_(codomain), targets_(std::move(targets)) {
  if (static_cast<int>(targets_.size()) != domain_) {
    throw Error("schema", "map must list one target per domain element");
  }
  for (int t : targets_) {
    if (t < 1 || t > codomain_) {
      throw Error("out-of-range",
                  "map target " + std::to_string(t) + " outside [" +
                      std::to_string(codomain_) + "]");
    }
  }
}

GroundMap GroundMap::identity(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i + 1;
  return GroundMap(n, n, std::move(t));
}

bool GroundMap::is_identity() const {
  if (domain_ != codomain_) return false;
  for (int i = 0; i < domain_; ++i) {
    if (targets_[i] != i + 1) return false;
  }
  return true;
}

Subset GroundMap::image(Subset s) const {
  Subset img = 0;
  while (s) {
    Subset low = s & (~s + 1);
    img |= singleton(targets_[std::countr_zero(low)]);
    s ^= low;
  }
  return img;
}

std::vector<Subset> GroundMap::image_table() const {
  std::vector<Subset> table(std::size_t{1} << domain_);
  table[0] = 0;
  for (Subset s = 1; s < table.size(); ++s) {
    Subset low = s & (~s + 1);
    table[s] = table[s ^ low] | singleton(targets_[std::countr_zero(low)]);
  }
  return table;
}

MatroidMorphism::MatroidMorphism(Matroid source, Matroid target, GroundMap map)
    : source_(std::move(source)), target_(std::move(target)),
      map_(std::move(map)) {
  if (map_.domain() != source_.size() || map_.codomain() != target_.size()) {
    throw Error("ground-set-mismatch",
                "map shape does not match source/target ground sets");
  }
}

namespace {

// Prefer the (cardinality, lex)-least witness; i breaks remaining ties.
struct StepWitness {
  bool found = false;
  Subset s = 0;
  int element = 0;

  void offer(Subset cand, int i) {
    if (!found || card_lex_less(cand, s) ||
        (cand == s && i < element)) {
      found = true;
      s = cand;
      element = i;
    }
  }
};

}  // namespace

MorphismVerdict is_morphism(const GroundMap& f, const Matroid& m,
                            const Matroid& n) {
  if (f.domain() != m.size() || f.codomain() != n.size()) {
    throw Error("ground-set-mismatch", "map shape does not match matroids");
  }
  const auto& rk_m = m.rank_table();
  const auto& rk_n = n.rank_table();
  const auto img = f.image_table();
  const Subset full = full_set(m.size());
  StepWitness witness;
  for (Subset s = 0;; ++s) {
    for (int i = 1; i <= m.size(); ++i) {
      if (contains(s, i)) continue;
      Subset t = s | singleton(i);
      if (rk_n[img[t]] - rk_n[img[s]] > rk_m[t] - rk_m[s]) {
        witness.offer(s, i);
      }
    }
    if (s == full) break;
  }
  if (!witness.found) return {};
  return {false, "rank-increment", witness.s,
          witness.s | singleton(witness.element)};
}

MorphismVerdict is_morphism_nested(const GroundMap& f, const Matroid& m,
                                   const Matroid& n) {
  if (f.domain() != m.size() || f.codomain() != n.size()) {
    throw Error("ground-set-mismatch", "map shape does not match matroids");
  }
  const auto& rk_m = m.rank_table();
  const auto& rk_n = n.rank_table();
  const auto img = f.image_table();
  const Subset full = full_set(m.size());
  bool found = false;
  Subset w1 = 0, w2 = 0;
  auto better = [&](Subset a1, Subset a2) {
    if (!found) return true;
    if (a1 != w1) return card_lex_less(a1, w1);
    return card_lex_less(a2, w2);
  };
  for (Subset s2 = 0;; ++s2) {
    // proper subsets of s2, plus s1 == s2 which trivially holds
    for (Subset s1 = (s2 - 1) & s2;; s1 = (s1 - 1) & s2) {
      if (rk_n[img[s2]] - rk_n[img[s1]] > rk_m[s2] - rk_m[s1] &&
          better(s1, s2)) {
        found = true;
        w1 = s1;
        w2 = s2;
      }
      if (s1 == 0) break;
    }
    if (s2 == full) break;
  }
  if (!found) return {};
  return {false, "rank-increment", w1, w2};
}

namespace {

MorphismVerdict preimage_condition(const GroundMap& f, const Matroid& m,
                                   const Matroid& n, bool flats_mode) {
  if (f.domain() != m.size() || f.codomain() != n.size()) {
    throw Error("ground-set-mismatch", "map shape does not match matroids");
  }
  auto preimage = [&](Subset t) {
    Subset x = 0;
    for (int i = 1; i <= f.domain(); ++i) {
      if (contains(t, f.target(i))) x |= singleton(i);
    }
    return x;
  };
  if (flats_mode) {
    const auto& rk_m = m.rank_table();
    for (Subset t : n.flats()) {
      Subset x = preimage(t);
      for (int j = 1; j <= m.size(); ++j) {
        if (!contains(x, j) && rk_m[x | singleton(j)] == rk_m[x]) {
          return {false, "flat-preimage", x, t};
        }
      }
    }
    return {};
  }
  auto m_cocircuits = m.cocircuits();
  for (Subset t : n.cocircuits()) {
    Subset x = preimage(t);
    Subset covered = 0;
    for (Subset c : m_cocircuits) {
      if ((c & ~x) == 0) covered |= c;
    }
    if (covered != x) return {false, "cocircuit-preimage", x, t};
  }
  return {};
}

}  // namespace

MorphismVerdict is_morphism_via_cocircuits(const GroundMap& f,
                                           const Matroid& m,
                                           const Matroid& n) {
  return preimage_condition(f, m, n, /*flats_mode=*/false);
}

MorphismVerdict is_morphism_via_flats(const GroundMap& f, const Matroid& m,
                                      const Matroid& n) {
  return preimage_condition(f, m, n, /*flats_mode=*/true);
}

MorphismVerdict is_quotient(const Matroid& m, const Matroid& n) {
  if (m.size() != n.size()) {
    throw Error("ground-set-mismatch",
                "quotients need a common ground set");
  }
  return is_morphism(GroundMap::identity(m.size()), m, n);
}

Matroid induced_matroid(const GroundMap& f, const Matroid& n) {
  if (f.codomain() != n.size()) {
    throw Error("ground-set-mismatch", "map codomain does not match matroid");
  }
  const auto& rk_n = n.rank_table();
  const auto img = f.image_table();
  std::vector<std::uint8_t> table(std::size_t{1} << f.domain());
  for (Subset s = 0; s < table.size(); ++s) table[s] = rk_n[img[s]];
  return Matroid::from_rank_table(f.domain(), std::move(table));
}

std::vector<Subset> morphism_bases(const MatroidMorphism& f) {
  const auto& rk_m = f.source().rank_table();
  const auto& rk_n = f.target().rank_table();
  const int full_rank_n = f.target().rank();
  std::vector<Subset> out;
  if (f.map().is_identity()) {
    for (Subset s = 0; s < rk_m.size(); ++s) {
      if (rk_m[s] == popcount(s) && rk_n[s] == full_rank_n) out.push_back(s);
    }
    return out;
  }
  const auto img = f.map().image_table();
  for (Subset s = 0; s < rk_m.size(); ++s) {
    if (rk_m[s] == popcount(s) && rk_n[img[s]] == full_rank_n)
      out.push_back(s);
  }
  return out;
}

std::vector<long long> b_vector(const MatroidMorphism& f) {
  const int n = f.source().size();
  const auto& rk_m = f.source().rank_table();
  const auto& rk_n = f.target().rank_table();
  const int full_rank_n = f.target().rank();
  std::vector<long long> counts(n + 1, 0);
  if (f.map().is_identity()) {
    for (Subset s = 0; s < rk_m.size(); ++s) {
      int c = popcount(s);
      if (rk_m[s] == c && rk_n[s] == full_rank_n) ++counts[c];
    }
    return counts;
  }
  const auto img = f.map().image_table();
  for (Subset s = 0; s < rk_m.size(); ++s) {
    int c = popcount(s);
    if (rk_m[s] == c && rk_n[img[s]] == full_rank_n) ++counts[c];
  }
  return counts;
}

std::vector<Subset> quotient_bases(const Matroid& m, const Matroid& n) {
  if (auto v = is_quotient(m, n); !v) {
    throw Error("not-a-quotient", "pair is not a matroid quotient",
                {{"s1", elements_of(v.s1)}, {"s2", elements_of(v.s2)}});
  }
  return morphism_bases(
      MatroidMorphism(m, n, GroundMap::identity(m.size())));
}

DeltaMatroidVerdict check_delta_matroid(int n,
                                        const std::vector<Subset>& family) {
  if (family.empty()) {
    throw Error("invalid-argument", "delta-matroid family must be nonempty");
  }
  if (n > kStructureEnumerationCap) {
    throw Error("bound-exceeded",
                "delta-matroid check capped at n <= " +
                    std::to_string(kStructureEnumerationCap));
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<char> in_family(size, 0), has_sub(size, 0), has_sup(size, 0);
  for (Subset s : family) {
    if (s >= size) throw Error("out-of-range", "family member outside [n]");
    in_family[s] = 1;
  }
  for (Subset s = 0; s < size; ++s) {
    has_sub[s] = in_family[s];
    for (Subset rest = s; rest && !has_sub[s];) {
      Subset e = rest & (~rest + 1);
      rest ^= e;
      has_sub[s] |= has_sub[s ^ e];
    }
  }
  for (Subset s = static_cast<Subset>(size); s-- > 0;) {
    has_sup[s] = in_family[s];
    for (int j = 1; j <= n && !has_sup[s]; ++j) {
      if (!contains(s, j)) has_sup[s] |= has_sup[s | singleton(j)];
    }
  }
  for (Subset s3 : subsets_by_card_lex(n)) {
    if (in_family[s3] || !has_sub[s3] || !has_sup[s3]) continue;
    Subset s1 = 0, s2 = 0;
    for (Subset b : family) {
      if ((b & ~s3) == 0) { s1 = b; break; }
    }
    for (Subset b : family) {
      if ((s3 & ~b) == 0) { s2 = b; break; }
    }
    return {false, 1, s1, s2, s3, 0};
  }
  for (Subset s1 : family) {
    for (Subset s2 : family) {
      Subset delta = s1 ^ s2;
      for (Subset rest = delta; rest != 0;) {
        Subset i = rest & (~rest + 1);
        rest ^= i;
        bool ok = false;
        for (Subset cand = delta; cand != 0 && !ok;) {
          Subset j = cand & (~cand + 1);
          cand ^= j;
          ok = in_family[s1 ^ (i | j)];  // j == i flips just i
        }
        if (!ok) {
          return {false, 2, s1, s2, 0, std::countr_zero(i) + 1};
        }
      }
    }
  }
  return {};
}

Matroid higgs_lift(const Matroid& m, const Matroid& n, int k) {
  std::vector<Subset> slice;
  for (Subset s : quotient_bases(m, n)) {
    if (popcount(s) == k) slice.push_back(s);
  }
  if (slice.empty()) {
    throw Error("empty-slice",
                "no bases of the quotient have cardinality " +
                    std::to_string(k));
  }
  return Matroid::from_bases(m.size(), std::move(slice));
}

}  // namespace matmor
