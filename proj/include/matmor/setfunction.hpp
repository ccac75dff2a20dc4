#pragma once

#include <optional>
#include <span>
#include <vector>

#include "matmor/lorentzian.hpp"
#include "matmor/matroid.hpp"
#include "matmor/polynomial.hpp"
#include "matmor/rational.hpp"

namespace matmor {

// r : 2^[n] -> Q as a complete table in subset-bitmask order.
class SetFunction {
 public:
  SetFunction(int n, std::vector<Rat> values);
  static SetFunction from_matroid_rank(const Matroid& m);

  int size() const { return n_; }
  const Rat& value(Subset s) const { return values_[s]; }
  const std::vector<Rat>& values() const { return values_; }
  bool integer_valued() const;

  SetFunction plus(const SetFunction& o) const;
  SetFunction scaled(const Rat& c) const;
  SetFunction shifted(const Rat& c) const;  // r + c

 private:
  int n_;
  std::vector<Rat> values_;
};

// Z_{p,r} = sum_S p^{-r(S)} w_0^{n-|S|} prod_{i in S} w_i. Exact mode:
// requires r integer-valued (throws "not-integer-valued" otherwise).
Polynomial z_of_setfunction(const SetFunction& r, const Rat& p);

// Floating fallback for rational-valued r: coefficients are the exact
// binary rationals of the double approximation of p^{-r(S)}. Intended for
// sampled probes only, never for exact certification.
Polynomial z_of_setfunction_approx(const SetFunction& r, const Rat& p);

struct LnProbeEntry {
  Rat p;
  LorentzianVerdict verdict;
};

struct LnProbeReport {
  std::vector<LnProbeEntry> entries;
  bool failed = false;                // some grid point is not Lorentzian
  std::optional<Rat> witness_p;       // first failing grid point
  // "not-in-Ln" is sound; otherwise the grid is evidence only, not proof.
  const char* conclusion() const {
    return failed ? "not-in-Ln" : "consistent-with-membership";
  }
};

LnProbeReport probe_ln(const SetFunction& r, std::span<const Rat> grid);
const std::vector<Rat>& default_probe_grid();  // {1/8, 1/4, ..., 1}

// Exact lowest-p-degree slice of Z_{p,r}(1, p^{e_1} w_1, ..., p^{e_n} w_n);
// result lives in variables w_1..w_n (var i-1 <-> w_i).
Polynomial limit_extraction(const SetFunction& r,
                            std::span<const int> scale_exponents);

struct SubmodularVerdict {
  bool ok = true;
  Subset s1 = 0, s2 = 0;  // violating pair
  explicit operator bool() const { return ok; }
};
SubmodularVerdict is_submodular(const SetFunction& r);

struct MnatVerdict {
  bool ok = true;
  int condition = 0;  // 1 = local exchange, 2 = three-value maximum
  Subset s = 0;
  int i = 0, j = 0, k = 0;
  explicit operator bool() const { return ok; }
};
// FY03 characterization of M-natural-concavity.
MnatVerdict is_mnat_concave(const SetFunction& r);

struct MnatConsistencyReport {
  LnProbeReport probe;
  MnatVerdict mnat;
  // Grid clean but M-natural-concavity fails: impossible if the grid told
  // the truth (membership implies concavity), so flag for investigation.
  bool contradiction_candidate = false;
};
MnatConsistencyReport mnat_consistency(const SetFunction& r,
                                       std::span<const Rat> grid);

}  // namespace matmor
