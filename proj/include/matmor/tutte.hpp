#pragma once

#include <span>

#include "matmor/flag.hpp"
#include "matmor/morphism.hpp"
#include "matmor/polynomial.hpp"

namespace matmor {

// sum_S q^{-rk(S)} prod_{i in S} w_i, variables w_1..w_n (var j-1 <-> w_j).
Polynomial multivariate_tutte(const Matroid& m, const Rat& q);

// sum_S p^{-rk_M(S)} q^{-rk_N(S)} prod_{i in S} w_i for a quotient M -->> N.
Polynomial multivariate_tutte_quotient(const Matroid& m, const Matroid& n,
                                       const Rat& p, const Rat& q);

// sum_S (x-1)^{crk_N(S)} (y-1)^{|S|-rk_M(S)} z^{crk_M(S)-crk_N(S)},
// expanded into monomials. Validates the quotient.
TrivariatePolynomial lasvergnas_tutte(const Matroid& m, const Matroid& n);

// Degree-n homogeneous polynomial in w_0..w_n (var k <-> w_k).
Polynomial homogeneous_tutte(const FlagMatroid& flag, std::span<const Rat> q);

// Z_{p,q,f} = homogeneous Tutte of the flag (f^{-1}(N), M).
Polynomial homogeneous_tutte_morphism(const MatroidMorphism& f, const Rat& p,
                                      const Rat& q);

// sum_{S in B(f)} w_0^{n-|S|} prod w_i; dehomogenized form drops w_0.
Polynomial basis_generating(const MatroidMorphism& f, bool homogeneous);

// Direct enumerations (w_1..w_n, multi-affine).
Polynomial spanning_generating(const Matroid& m);
Polynomial independence_generating(const Matroid& m);

// Exact limits, implemented as lowest-degree slice selection in the
// parameter, never as numeric limits.
Polynomial tutte_limit_spanning(const Matroid& m);      // lim_{q->0} q^{rk E} Z_{q,M}(w)
Polynomial tutte_limit_independence(const Matroid& m);  // lim_{q->0} Z_{q,M}(q w)
// lim_{p->0} lim_{q->0} q^{rk_N f(E)} Z_{p,q,f}(w_0, p w_1, ..., p w_n).
Polynomial morphism_limit_basis(const MatroidMorphism& f);

// P_M(q, w) = sum_{i<j} prod_k q_k^{d_k(i,j)} w_i w_j, variables w_1..w_n.
Polynomial pairing_polynomial(const FlagMatroid& flag, std::span<const Rat> q);

// (1/2)(1 - 1/n)(w_1 + ... + w_n)^2 >= P_M(q, w), exact.
bool lemma46_holds(const FlagMatroid& flag, std::span<const Rat> q,
                   std::span<const Rat> w);

}  // namespace matmor
