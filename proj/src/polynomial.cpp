#include "matmor/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "matmor/error.hpp"

namespace matmor {

Polynomial Polynomial::constant(int var_count, const Rat& c) {
  Polynomial p(var_count);
  p.add_term(Expt(var_count, 0), c);
  return p;
}

Polynomial Polynomial::variable(int var_count, int var) {
  Polynomial p(var_count);
  Expt e(var_count, 0);
  e.at(var) = 1;
  p.add_term(std::move(e), Rat(1));
  return p;
}

void Polynomial::add_term(Expt e, Rat c) {
  if (static_cast<int>(e.size()) != var_count_) {
    throw Error("invalid-argument", "exponent vector of wrong arity");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat Polynomial::coefficient(const Expt& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  }
  return deg;
}

bool Polynomial::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) return false;
  }
  return true;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(var_count_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expt e2 = e;
    --e2[var];
    out.add_term(std::move(e2), c * e[var]);
  }
  return out;
}

Polynomial Polynomial::reindexed(const std::vector<int>& var_map,
                                 int new_var_count) const {
  if (static_cast<int>(var_map.size()) != var_count_) {
    throw Error("invalid-argument", "variable map of wrong arity");
  }
  Polynomial out(new_var_count);
  for (const auto& [e, c] : terms_) {
    Expt e2(new_var_count, 0);
    for (int v = 0; v < var_count_; ++v) {
      if (e[v] != 0) e2.at(var_map[v]) += e[v];
    }
    out.add_term(std::move(e2), c);
  }
  return out;
}

Polynomial Polynomial::substituted_value(int var, const Rat& value) const {
  Polynomial out(var_count_);
  for (const auto& [e, c] : terms_) {
    Expt e2 = e;
    int k = e2[var];
    e2[var] = 0;
    Rat scale(1);
    for (int i = 0; i < k; ++i) scale *= value;
    out.add_term(std::move(e2), c * scale);
  }
  return out;
}

Polynomial Polynomial::substitute_linear(
    const std::vector<std::vector<Rat>>& a) const {
  if (static_cast<int>(a.size()) != var_count_) {
    throw Error("invalid-argument", "substitution matrix needs one row per variable");
  }
  const int m = var_count_ == 0 ? 0 : static_cast<int>(a[0].size());
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != m) {
      throw Error("invalid-argument", "ragged substitution matrix");
    }
  }
  // linear forms L_v = sum_k a[v][k] v_k
  std::vector<Polynomial> forms;
  forms.reserve(var_count_);
  for (int v = 0; v < var_count_; ++v) {
    Polynomial form(m);
    for (int k = 0; k < m; ++k) {
      Expt e(m, 0);
      e[k] = 1;
      form.add_term(std::move(e), a[v][k]);
    }
    forms.push_back(std::move(form));
  }
  Polynomial out(m);
  for (const auto& [e, c] : terms_) {
    Polynomial mono = Polynomial::constant(m, c);
    for (int v = 0; v < var_count_; ++v) {
      for (int k = 0; k < e[v]; ++k) mono = mono * forms[v];
    }
    out = out + mono;
  }
  return out;
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != var_count_) {
    throw Error("invalid-argument", "evaluation point of wrong arity");
  }
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < var_count_; ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

double Polynomial::evaluate_double(std::span<const double> point) const {
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (int v = 0; v < var_count_; ++v) {
      for (int k = 0; k < e[v]; ++k) term *= point[v];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.var_count_ != var_count_) {
    throw Error("invalid-argument", "product of polynomials of different arity");
  }
  Polynomial out(var_count_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expt e = e1;
      for (int v = 0; v < var_count_; ++v) e[v] += e2[v];
      out.add_term(std::move(e), c1 * c2);
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial out(var_count_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int v = 0; v < var_count_; ++v) {
      if (e[v] == 0) continue;
      os << "*w" << v;
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

void TrivariatePolynomial::add_term(const std::array<int, 3>& e, Rat c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Rat TrivariatePolynomial::evaluate(const Rat& x, const Rat& y,
                                   const Rat& z) const {
  Rat total(0);
  for (const auto& [e, c] : terms) {
    Rat term = c;
    for (int k = 0; k < e[0]; ++k) term *= x;
    for (int k = 0; k < e[1]; ++k) term *= y;
    for (int k = 0; k < e[2]; ++k) term *= z;
    total += term;
  }
  return total;
}

int TrivariatePolynomial::degree_in(int axis) const {
  int deg = 0;
  for (const auto& [e, c] : terms) deg = std::max(deg, e.at(axis));
  return deg;
}

}  // namespace matmor
