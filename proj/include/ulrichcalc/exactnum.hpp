#pragma once

// Exact rational numbers, polynomials over the closed symbol set used by the
// engine, canonical text I/O and univariate root utilities.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ulrichcalc/polynomial.hpp"

namespace ulrichcalc {

inline constexpr int kMaxClassIndex = 8;
// d, m, t, then c1..c8, f1..f8, e1..e8.
inline constexpr std::size_t kNumSymbols = 3 + 3 * kMaxClassIndex;

/// One of the formal symbols a MultiPoly may contain.
///
/// `d` is the hypersurface degree, `m` and `t` are twist parameters. The
/// indexed families are generic graded classes: `c_i` (usually tangent or
/// first-bundle classes), `f_i` (bundle classes) and `e_i` (Ulrich unknowns).
class Symbol {
 public:
  static Symbol d() { return Symbol(0); }
  static Symbol m() { return Symbol(1); }
  static Symbol t() { return Symbol(2); }
  static Symbol c(int i) { return indexed(0, i); }
  static Symbol f(int i) { return indexed(1, i); }
  static Symbol e(int i) { return indexed(2, i); }

  // Throws UnknownSymbol for anything outside the closed set.
  static Symbol from_name(std::string_view name);
  static Symbol from_index(std::size_t index);

  std::size_t index() const { return index_; }
  std::string name() const;
  // Grading weight: 0 for d, m, t; i for c_i, f_i, e_i.
  int weight() const;

  auto operator<=>(const Symbol&) const = default;

 private:
  explicit Symbol(std::size_t index) : index_(index) {}
  static Symbol indexed(int family, int i);

  std::size_t index_;
};

using MultiPoly = Polynomial<kNumSymbols>;
using Assignment = std::map<Symbol, Rational>;

MultiPoly var(Symbol s, unsigned power = 1);

/// Canonical text: descending graded reverse-lex, explicit '*', rationals as
/// "p/q", e.g. "2*c1^2*c2 + c2^2 + c1*c3 - 4*c4". Zero prints as "0".
std::string to_text(const MultiPoly& p);

/// Like to_text but pulls out the rational content so the remaining factor
/// has coprime integer coefficients and a positive leading term:
/// "(1/40)*(12*d^5 - 40*d^4 + ...)".
std::string to_factored_text(const MultiPoly& p);

/// Parses the text forms produced above. Also accepts implicit
/// multiplication ("2c1^2c2"), parentheses, and division by constants.
MultiPoly parse_poly(std::string_view text);

std::string rational_text(const Rational& q);

/// Polynomial binomial: ell (ell-1) ... (ell-k+1) / k!, and 1 for k = 0.
MultiPoly binomial_poly(const MultiPoly& ell, unsigned k);

/// Exact substitution of every symbol in p. Throws MissingSymbol if a symbol
/// occurring in p has no value.
Rational evaluate(const MultiPoly& p, const Assignment& assignment);

/// Substitutes the given symbols by polynomials, simultaneously.
MultiPoly substitute(const MultiPoly& p, const std::map<Symbol, MultiPoly>& values);

/// Positive rational c with p / c having coprime integer coefficients and a
/// positive leading coefficient (the sign is carried by the returned value).
Rational content(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);

bool is_univariate_in(const MultiPoly& p, Symbol s);

struct UnivariateDivision {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Long division of polynomials in the single symbol s. Throws NotUnivariate
/// or DivisionByZero.
UnivariateDivision divide_univariate(const MultiPoly& num, const MultiPoly& den, Symbol s);

struct FactorDivision {
  MultiPoly quotient;
  bool exact = false;
};

/// Divides p successively by each factor (all univariate in d). `exact` is
/// true iff every division leaves a zero remainder; the quotient is the
/// final cofactor (meaningful only when exact).
FactorDivision divide_by_stated_factors(const MultiPoly& p, const std::vector<MultiPoly>& factors);

/// Cauchy bound 1 + max |a_i| / |a_lead| for a nonzero polynomial in d.
Rational cauchy_bound(const MultiPoly& p);

/// All integer roots >= lo of a nonzero polynomial in d, found by exact
/// evaluation of every integer in [lo, ceil(cauchy_bound)].
std::vector<long> integer_roots_at_least(const MultiPoly& p, long lo);

/// Exact integer binomial C(n, k) for n >= 0, 0 <= k.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace ulrichcalc
