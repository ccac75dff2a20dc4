#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "matmor/rational.hpp"

namespace matmor {

// Sparse polynomial over Q in a fixed number of variables, exponent
// vectors as keys. Zero coefficients are never stored.
class Polynomial {
 public:
  using Expt = std::vector<int>;

  explicit Polynomial(int var_count) : var_count_(var_count) {}
  static Polynomial constant(int var_count, const Rat& c);
  static Polynomial variable(int var_count, int var);

  int var_count() const { return var_count_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  void add_term(Expt e, Rat c);  // accumulates
  const std::map<Expt, Rat>& terms() const { return terms_; }
  Rat coefficient(const Expt& e) const;

  int total_degree() const;      // -1 for the zero polynomial
  bool is_homogeneous() const;   // vacuously true for zero

  Polynomial derivative(int var) const;
  // Rename variables: exponent of old var v moves to var_map[v].
  Polynomial reindexed(const std::vector<int>& var_map, int new_var_count) const;
  Polynomial substituted_value(int var, const Rat& value) const;
  // w = A v for a var_count x m matrix A with rational entries.
  Polynomial substitute_linear(const std::vector<std::vector<Rat>>& a) const;

  Rat evaluate(std::span<const Rat> point) const;
  double evaluate_double(std::span<const double> point) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const = default;

  std::string str() const;  // debug form, variables named w0..w{m-1}

 private:
  int var_count_;
  std::map<Expt, Rat> terms_;
};

struct TrivariatePolynomial {
  std::map<std::array<int, 3>, Rat> terms;  // (x-exp, y-exp, z-exp)

  void add_term(const std::array<int, 3>& e, Rat c);
  Rat evaluate(const Rat& x, const Rat& y, const Rat& z) const;
  int degree_in(int axis) const;
  bool operator==(const TrivariatePolynomial&) const = default;
};

}  // namespace matmor
