#include "matmor/lorentzian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "matmor/error.hpp"

namespace matmor {

std::optional<MConvexWitness> m_convex_violation(
    const std::set<Polynomial::Expt>& support) {
  const int m = support.empty() ? 0 : static_cast<int>(support.begin()->size());
  for (const auto& alpha : support) {
    for (const auto& beta : support) {
      for (int i = 0; i < m; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < m && !exchanged; ++j) {
          if (alpha[j] >= beta[j]) continue;
          Polynomial::Expt a2 = alpha, b2 = beta;
          --a2[i]; ++a2[j];
          --b2[j]; ++b2[i];
          exchanged = support.count(a2) && support.count(b2);
        }
        if (!exchanged) return MConvexWitness{alpha, beta, i};
      }
    }
  }
  return std::nullopt;
}

bool is_m_convex(const std::set<Polynomial::Expt>& support) {
  return !m_convex_violation(support).has_value();
}

namespace {

void require_symmetric(const std::vector<std::vector<Rat>>& a) {
  const std::size_t m = a.size();
  for (const auto& row : a) {
    if (row.size() != m) throw Error("invalid-argument", "matrix not square");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (a[i][j] != a[j][i]) {
        throw Error("invalid-argument", "matrix not symmetric");
      }
    }
  }
}

}  // namespace

std::vector<Rat> characteristic_polynomial(
    const std::vector<std::vector<Rat>>& sym) {
  require_symmetric(sym);
  const int m = static_cast<int>(sym.size());
  // Faddeev-LeVerrier: det(tI - A) = t^m + c_1 t^{m-1} + ... + c_m
  std::vector<Rat> coeffs{Rat(1)};
  std::vector<std::vector<Rat>> mk = sym;
  for (int k = 1; k <= m; ++k) {
    Rat trace(0);
    for (int i = 0; i < m; ++i) trace += mk[i][i];
    Rat ck = -trace / k;
    coeffs.push_back(ck);
    if (k == m) break;
    for (int i = 0; i < m; ++i) mk[i][i] += ck;
    std::vector<std::vector<Rat>> next(m, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < m; ++i) {
      for (int l = 0; l < m; ++l) {
        if (sym[i][l] == 0) continue;
        for (int j = 0; j < m; ++j) {
          next[i][j] += sym[i][l] * mk[l][j];
        }
      }
    }
    mk = std::move(next);
  }
  return coeffs;
}

int positive_eigenvalue_count(const std::vector<std::vector<Rat>>& sym) {
  auto coeffs = characteristic_polynomial(sym);
  // strip zero eigenvalues (trailing zero coefficients)
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  // Descartes on the remaining real-rooted polynomial is exact
  int changes = 0;
  int last_sign = 0;
  for (const Rat& c : coeffs) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

int positive_eigenvalue_count_float(const std::vector<std::vector<double>>& sym,
                                    double rel_tol) {
  const int m = static_cast<int>(sym.size());
  Eigen::MatrixXd a(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a(i, j) = sym[i][j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  double scale = 1.0;
  for (int i = 0; i < m; ++i) {
    scale = std::max(scale, std::abs(solver.eigenvalues()[i]));
  }
  int count = 0;
  for (int i = 0; i < m; ++i) {
    if (solver.eigenvalues()[i] > rel_tol * scale) ++count;
  }
  return count;
}

namespace {

std::vector<std::vector<Rat>> quadratic_hessian(const Polynomial& q) {
  const int m = q.var_count();
  std::vector<std::vector<Rat>> h(m, std::vector<Rat>(m, Rat(0)));
  for (const auto& [e, c] : q.terms()) {
    int i = -1, j = -1;
    for (int v = 0; v < m; ++v) {
      if (e[v] == 2) { i = j = v; break; }
      if (e[v] == 1) { (i < 0 ? i : j) = v; }
    }
    if (i == j) {
      h[i][i] += 2 * c;
    } else {
      h[i][j] += c;
      h[j][i] += c;
    }
  }
  return h;
}

// Lexicographic combinations with repetition; calls fn on each multiset.
template <typename Fn>
bool for_each_multiset(int vars, int size, Fn&& fn) {
  std::vector<int> pick(size, 0);
  while (true) {
    if (!fn(pick)) return false;
    int pos = size - 1;
    while (pos >= 0 && pick[pos] == vars - 1) --pos;
    if (pos < 0) return true;
    int v = pick[pos] + 1;
    for (int k = pos; k < size; ++k) pick[k] = v;
  }
}

}  // namespace

LorentzianVerdict is_lorentzian(const Polynomial& h) {
  LorentzianVerdict verdict;
  if (!h.is_homogeneous()) {
    verdict.ok = false;
    verdict.clause = "not-homogeneous";
    return verdict;
  }
  for (const auto& [e, c] : h.terms()) {
    if (c < 0) {
      verdict.ok = false;
      verdict.clause = "negative-coefficient";
      verdict.monomial = e;
      return verdict;
    }
  }
  if (h.is_zero() || h.total_degree() <= 1) return verdict;

  std::set<Polynomial::Expt> support;
  for (const auto& [e, c] : h.terms()) support.insert(e);
  if (auto w = m_convex_violation(support)) {
    verdict.ok = false;
    verdict.clause = "support-not-m-convex";
    verdict.mconvex = std::move(w);
    return verdict;
  }

  const int d = h.total_degree();
  const int m = h.var_count();
  bool all_ok = for_each_multiset(m, d - 2, [&](const std::vector<int>& pick) {
    Polynomial q = h;
    for (int v : pick) q = q.derivative(v);
    int positives = positive_eigenvalue_count(quadratic_hessian(q));
    if (positives > 1) {
      verdict.ok = false;
      verdict.clause = "quadratic-signature";
      verdict.derivative_multiset = pick;
      verdict.positive_count = positives;
      return false;
    }
    return true;
  });
  (void)all_ok;
  return verdict;
}

UlcVerdict is_ultra_log_concave(std::span<const Rat> a) {
  const int d = static_cast<int>(a.size()) - 1;
  for (const Rat& x : a) {
    if (x < 0) throw Error("invalid-argument", "sequence must be nonnegative");
  }
  int first = -1, last = -1;
  for (int k = 0; k <= d; ++k) {
    if (a[k] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  }
  for (int k = first + 1; k < last; ++k) {
    if (a[k] == 0) return {false, k, "internal-zero"};
  }
  for (int k = 1; k < d; ++k) {
    // (a_k / C(d,k))^2 >= (a_{k-1} / C(d,k-1)) (a_{k+1} / C(d,k+1))
    Rat lhs = a[k] * a[k] * Rat(binomial(d, k - 1)) * Rat(binomial(d, k + 1));
    Rat rhs = a[k - 1] * a[k + 1] * Rat(binomial(d, k)) * Rat(binomial(d, k));
    if (lhs < rhs) return {false, k, "inequality"};
  }
  return {};
}

double log_hessian_max_eigenvalue(const Polynomial& h,
                                  std::span<const double> point) {
  const int m = h.var_count();
  const double value = h.evaluate_double(point);
  std::vector<Polynomial> grad;
  grad.reserve(m);
  for (int v = 0; v < m; ++v) grad.push_back(h.derivative(v));
  Eigen::MatrixXd hess(m, m);
  for (int i = 0; i < m; ++i) {
    double gi = grad[i].evaluate_double(point);
    for (int j = i; j < m; ++j) {
      double gj = grad[j].evaluate_double(point);
      double hij = grad[i].derivative(j).evaluate_double(point);
      // (h * d2h - dh dh^T) / h^2
      double entry = (value * hij - gi * gj) / (value * value);
      hess(i, j) = entry;
      hess(j, i) = entry;
    }
  }
  double frob = hess.norm();
  if (frob == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hess);
  return solver.eigenvalues().maxCoeff() / frob;
}

LogConcavityProbe sampled_log_concavity(const Polynomial& h, int trials,
                                        double tolerance, std::uint64_t seed,
                                        double lo, double hi) {
  if (h.is_zero()) {
    throw Error("invalid-argument", "probe needs a nonzero polynomial");
  }
  for (const auto& [e, c] : h.terms()) {
    if (c < 0) {
      throw Error("invalid-argument", "probe needs nonnegative coefficients");
    }
  }
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> exponent(std::log10(lo),
                                                  std::log10(hi));
  LogConcavityProbe probe;
  probe.trials = trials;
  std::vector<double> point(h.var_count());
  for (int t = 0; t < trials; ++t) {
    for (double& x : point) x = std::pow(10.0, exponent(eng));
    double rel = log_hessian_max_eigenvalue(h, point);
    if (rel > probe.worst) {
      probe.worst = rel;
      probe.worst_point = point;
    }
    if (rel > tolerance) ++probe.failures;
  }
  probe.ok = probe.failures == 0;
  return probe;
}

}  // namespace matmor
