#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "ulrichcalc/errors.hpp"

namespace ulrichcalc {

using Integer = mpz_class;
using Rational = mpq_class;

template <std::size_t N>
struct Exponents {
  std::uint16_t total = 0;
  std::array<std::uint8_t, N> e{};

  bool operator==(const Exponents&) const = default;
};

// Graded reverse-lexicographic order: lower total degree first; on ties the
// monomial with the larger power of the last differing variable is smaller.
template <std::size_t N>
struct GrevlexLess {
  bool operator()(const Exponents<N>& a, const Exponents<N>& b) const {
    if (a.total != b.total) return a.total < b.total;
    for (std::size_t i = N; i-- > 0;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    }
    return false;
  }
};

/// Sparse polynomial in N variables with exact rational coefficients.
///
/// Terms are kept in a map ordered by GrevlexLess with no zero coefficients,
/// so two polynomials are equal iff their term maps are equal.
template <std::size_t N>
class Polynomial {
 public:
  using Monomial = Exponents<N>;
  using Terms = std::map<Monomial, Rational, GrevlexLess<N>>;
  static constexpr std::size_t kNumVars = N;

  Polynomial() = default;
  Polynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT
  Polynomial(long c) : Polynomial(Rational(c)) {}              // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}               // NOLINT

  static Polynomial variable(std::size_t index, unsigned power = 1) {
    Monomial mono;
    mono.e.at(index) = static_cast<std::uint8_t>(power);
    mono.total = static_cast<std::uint16_t>(power);
    Polynomial p;
    p.terms_.emplace(mono, Rational(1));
    return p;
  }

  static Polynomial monomial(const Monomial& mono, const Rational& c) {
    Polynomial p;
    p.add_term(mono, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total == 0);
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Largest term in the canonical order.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.total; }

  unsigned degree_in(std::size_t var) const {
    unsigned best = 0;
    for (const auto& [mono, c] : terms_) best = std::max<unsigned>(best, mono.e[var]);
    return best;
  }

  bool depends_on(std::size_t var) const {
    for (const auto& [mono, c] : terms_) {
      if (mono.e[var] != 0) return true;
    }
    return false;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      Rational factor = s;
      factor.canonicalize();
      for (auto& [mono, c] : terms_) c *= factor;
    }
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    if (o.is_constant()) return *this *= o.constant_term();
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (b.is_constant()) return Polynomial(a) *= b.constant_term();
    if (a.is_constant()) return Polynomial(b) *= a.constant_term();
    return a.truncated_product(b, std::numeric_limits<unsigned>::max());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Product with every term of total degree above `max_degree` dropped.
  Polynomial truncated_product(const Polynomial& o, unsigned max_degree) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_) {
      if (ma.total > max_degree) continue;
      for (const auto& [mb, cb] : o.terms_) {
        if (static_cast<unsigned>(ma.total) + mb.total > max_degree) continue;
        Monomial prod;
        prod.total = static_cast<std::uint16_t>(ma.total + mb.total);
        for (std::size_t i = 0; i < N; ++i) prod.e[i] = static_cast<std::uint8_t>(ma.e[i] + mb.e[i]);
        out.add_term(prod, ca * cb);
      }
    }
    return out;
  }

  Polynomial pow(unsigned k) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Polynomial homogeneous_part(unsigned degree) const {
    Polynomial out;
    for (const auto& [mono, c] : terms_) {
      if (mono.total == degree) out.terms_.emplace_hint(out.terms_.end(), mono, c);
    }
    return out;
  }

  /// Coefficient of var^k, as a polynomial not involving var.
  Polynomial coefficient(std::size_t var, unsigned k) const {
    Polynomial out;
    for (const auto& [mono, c] : terms_) {
      if (mono.e[var] != k) continue;
      Monomial rest = mono;
      rest.e[var] = 0;
      rest.total = static_cast<std::uint16_t>(rest.total - k);
      out.add_term(rest, c);
    }
    return out;
  }

  /// Simultaneous substitution; variables without a replacement are kept.
  Polynomial substitute(const std::array<std::optional<Polynomial>, N>& repl) const {
    std::array<std::vector<Polynomial>, N> powers;
    auto power_of = [&](std::size_t var, unsigned k) -> const Polynomial& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(Polynomial(1));
      while (cache.size() <= k) cache.push_back(cache.back() * *repl[var]);
      return cache[k];
    };
    Polynomial out;
    for (const auto& [mono, c] : terms_) {
      Monomial kept;
      Polynomial term = Polynomial::monomial(Monomial{}, c);
      for (std::size_t i = 0; i < N; ++i) {
        if (mono.e[i] == 0) continue;
        if (repl[i]) {
          term = term * power_of(i, mono.e[i]);
        } else {
          kept.e[i] = mono.e[i];
          kept.total = static_cast<std::uint16_t>(kept.total + mono.e[i]);
        }
      }
      if (kept.total != 0) term = term * Polynomial::monomial(kept, Rational(1));
      out += term;
    }
    return out;
  }

  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    std::array<std::optional<Polynomial>, N> repl;
    repl[var] = value;
    return substitute(repl);
  }

  /// Exact value at a full assignment; returns nullopt if a variable that
  /// occurs in the polynomial has no value.
  std::optional<Rational> try_evaluate(const std::array<std::optional<Rational>, N>& values) const {
    Rational sum = 0;
    for (const auto& [mono, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < N; ++i) {
        if (mono.e[i] == 0) continue;
        if (!values[i]) return std::nullopt;
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), values[i]->get_num_mpz_t(), mono.e[i]);
        mpz_pow_ui(p.get_den_mpz_t(), values[i]->get_den_mpz_t(), mono.e[i]);
        term *= p;
      }
      sum += term;
    }
    return sum;
  }

 private:
  void add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (inserted) {
      // mpq_class(num, den) is not reduced on construction.
      it->second.canonicalize();
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace ulrichcalc
