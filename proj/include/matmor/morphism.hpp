#pragma once

#include <optional>
#include <vector>

#include "matmor/matroid.hpp"
#include "matmor/subset.hpp"

namespace matmor {

// Ground-set function [n] -> [m], 1-based targets.
class GroundMap {
 public:
  GroundMap(int domain, int codomain, std::vector<int> targets);
  static GroundMap identity(int n);

  int domain() const { return domain_; }
  int codomain() const { return codomain_; }
  int target(int element) const { return targets_.at(element - 1); }
  const std::vector<int>& targets() const { return targets_; }
  bool is_identity() const;

  Subset image(Subset s) const;
  // image of every subset of the domain, indexed by mask (2^n entries).
  std::vector<Subset> image_table() const;

 private:
  int domain_, codomain_;
  std::vector<int> targets_;
};

class MatroidMorphism {
 public:
  MatroidMorphism(Matroid source, Matroid target, GroundMap map);

  const Matroid& source() const { return source_; }
  const Matroid& target() const { return target_; }
  const GroundMap& map() const { return map_; }

 private:
  Matroid source_;
  Matroid target_;
  GroundMap map_;
};

struct MorphismVerdict {
  bool ok = true;
  // Failing clause; one of "rank-increment", "cocircuit-preimage",
  // "flat-preimage". For rank-increment, (s1, s2) is a violating nested
  // pair in the source; otherwise s2 is the offending cocircuit/flat of the
  // target and s1 its preimage.
  const char* condition = "";
  Subset s1 = 0, s2 = 0;
  explicit operator bool() const { return ok; }
};

// Default check: condition (1) restricted to one-element steps, which
// suffices by telescoping. Witness minimal by cardinality then lex.
MorphismVerdict is_morphism(const GroundMap& f, const Matroid& m,
                            const Matroid& n);
// Full nested-pair scan of condition (1); exhaustive test mode.
MorphismVerdict is_morphism_nested(const GroundMap& f, const Matroid& m,
                                   const Matroid& n);
// Condition (2): cocircuit preimages are unions of cocircuits.
MorphismVerdict is_morphism_via_cocircuits(const GroundMap& f,
                                           const Matroid& m, const Matroid& n);
// Condition (3): flat preimages are flats.
MorphismVerdict is_morphism_via_flats(const GroundMap& f, const Matroid& m,
                                      const Matroid& n);

MorphismVerdict is_quotient(const Matroid& m, const Matroid& n);

// Matroid on the domain with rk(S) = rk_N(f(S)).
Matroid induced_matroid(const GroundMap& f, const Matroid& n);

// B(f): sets independent in the source whose image spans the target.
std::vector<Subset> morphism_bases(const MatroidMorphism& f);
std::vector<long long> b_vector(const MatroidMorphism& f);  // length n+1

// B(M -->> N) for a validated quotient pair.
std::vector<Subset> quotient_bases(const Matroid& m, const Matroid& n);

struct DeltaMatroidVerdict {
  bool ok = true;
  int property = 0;        // 1 = interval, 2 = symmetric exchange
  Subset s1 = 0, s2 = 0;   // members of the family
  Subset s3 = 0;           // property 1: missing middle set
  int element = 0;         // property 2: the i with no partner
  explicit operator bool() const { return ok; }
};

// Saturated delta-matroid axioms for a nonempty family over [n].
DeltaMatroidVerdict check_delta_matroid(int n,
                                        const std::vector<Subset>& family);

// Matroid whose bases are the cardinality-k members of B(M -->> N).
Matroid higgs_lift(const Matroid& m, const Matroid& n, int k);

}  // namespace matmor
