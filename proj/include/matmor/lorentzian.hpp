#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "matmor/polynomial.hpp"

namespace matmor {

struct MConvexWitness {
  Polynomial::Expt alpha, beta;
  int var = 0;  // 0-based coordinate with alpha[var] > beta[var], no exchange
};

std::optional<MConvexWitness> m_convex_violation(
    const std::set<Polynomial::Expt>& support);
bool is_m_convex(const std::set<Polynomial::Expt>& support);

// Coefficients of det(tI - A) as (1, c1, ..., cm), exact Faddeev-LeVerrier.
std::vector<Rat> characteristic_polynomial(
    const std::vector<std::vector<Rat>>& sym);

// Exact count of positive eigenvalues of a symmetric rational matrix:
// strip the zero roots of the characteristic polynomial, then count sign
// changes (Descartes, exact for real-rooted polynomials).
int positive_eigenvalue_count(const std::vector<std::vector<Rat>>& sym);

// Floating oracle (Eigen): eigenvalues above rel_tol * max(1, |lambda|_max).
int positive_eigenvalue_count_float(const std::vector<std::vector<double>>& sym,
                                    double rel_tol = 1e-9);

struct LorentzianVerdict {
  bool ok = true;
  // Failing clause: "not-homogeneous", "negative-coefficient",
  // "support-not-m-convex", "quadratic-signature".
  const char* clause = "";
  Polynomial::Expt monomial;                   // negative-coefficient witness
  std::optional<MConvexWitness> mconvex;       // support witness
  std::vector<int> derivative_multiset;        // lexicographically least failing
  int positive_count = 0;                      // for quadratic-signature
  explicit operator bool() const { return ok; }
};

// Characterization: nonnegative coefficients, M-convex support, and every
// (d-2)-fold derivative quadratic has at most one positive eigenvalue.
// Degree 0/1 and the zero polynomial: Lorentzian iff coefficients >= 0.
LorentzianVerdict is_lorentzian(const Polynomial& h);

struct UlcVerdict {
  bool ok = true;
  int index = 0;
  const char* reason = "";  // "internal-zero" or "inequality"
  explicit operator bool() const { return ok; }
};

// No internal zeros and (a_k / C(d,k))^2 >= neighbors, d = a.size() - 1.
UlcVerdict is_ultra_log_concave(std::span<const Rat> a);

struct LogConcavityProbe {
  bool ok = true;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;              // max relative positive eigenvalue seen
  std::vector<double> worst_point;
};

// Max eigenvalue of the Hessian of log h at the point, relative to the
// Hessian's Frobenius norm; <= 0 up to tolerance means concave there.
double log_hessian_max_eigenvalue(const Polynomial& h,
                                  std::span<const double> point);

// Floating probe at `trials` log-uniform points in [lo, hi]^m.
LogConcavityProbe sampled_log_concavity(const Polynomial& h, int trials,
                                        double tolerance, std::uint64_t seed,
                                        double lo = 1e-2, double hi = 1e2);

}  // namespace matmor
