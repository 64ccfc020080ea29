#pragma once

// Splitting-principle machinery: formal Chern roots, symmetric polynomials
// and their rewriting in elementary symmetric functions.

#include <vector>

#include "ulrichcalc/exactnum.hpp"

namespace ulrichcalc {

inline constexpr int kMaxRoots = 8;
inline constexpr int kMaxExteriorRank = 7;

using RootPoly = Polynomial<kMaxRoots>;
using RootMonomial = RootPoly::Monomial;

/// A symmetric polynomial in the roots, stored by its coefficients on
/// dominant monomials (exponents non-increasing in the root index).
using SymmetricPoly = std::map<RootMonomial, Rational, GrevlexLess<kMaxRoots>>;

/// Ring of formal roots x_1..x_k truncated above a total degree.
class SymmetricContext {
 public:
  SymmetricContext(int num_roots, int truncation_degree);

  int num_roots() const { return num_roots_; }
  int truncation_degree() const { return truncation_degree_; }

  RootPoly root(int i) const;

  /// Dominant part of a polynomial that is symmetric in the roots. Terms
  /// above the truncation degree are dropped.
  SymmetricPoly dominant_part(const RootPoly& p) const;

  SymmetricPoly multiply(const SymmetricPoly& a, const SymmetricPoly& b) const;

  /// Elementary symmetric function e_k (k <= num_roots).
  SymmetricPoly elementary(int k) const;

  /// Rewrites a symmetric polynomial as a polynomial in the elementary
  /// symmetric functions, written with f_i standing for e_i, by repeatedly
  /// cancelling the graded-lex leading term with a product of e_i.
  MultiPoly to_elementary(SymmetricPoly p) const;

 private:
  int num_roots_;
  int truncation_degree_;
};

/// c_k(Lambda^p F), k = 0..max_degree, for a rank-`rank` bundle F, written in
/// f_1..f_rank = c_1(F)..c_rank(F). Cached; throws UnsupportedRank above
/// kMaxExteriorRank.
const std::vector<MultiPoly>& exterior_power_formula(int rank, int p, int max_degree);

/// Degree-k parts, k = 0..max_degree, of prod_i x_i / (1 - exp(-x_i)) in
/// terms of f_1..f_max_degree = c_1..c_max_degree. Cached.
const std::vector<MultiPoly>& todd_formula(int max_degree);

/// Coefficients of x / (1 - exp(-x)) up to x^max_degree.
std::vector<Rational> todd_series(int max_degree);

}  // namespace ulrichcalc
