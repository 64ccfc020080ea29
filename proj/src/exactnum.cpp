#include "ulrichcalc/exactnum.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace ulrichcalc {

namespace {

constexpr char kFamilies[] = {'c', 'f', 'e'};

}  // namespace

Symbol Symbol::indexed(int family, int i) {
  if (i < 1 || i > kMaxClassIndex) {
    throw UnknownSymbol(std::string(1, kFamilies[family]) + std::to_string(i) +
                        " is outside the supported symbol set");
  }
  return Symbol(3 + static_cast<std::size_t>(family * kMaxClassIndex + i - 1));
}

Symbol Symbol::from_index(std::size_t index) {
  if (index >= kNumSymbols) throw UnknownSymbol("symbol index out of range");
  return Symbol(index);
}

Symbol Symbol::from_name(std::string_view name) {
  if (name == "d") return d();
  if (name == "m") return m();
  if (name == "t") return t();
  if (name.size() >= 2) {
    for (int family = 0; family < 3; ++family) {
      if (name[0] != kFamilies[family]) continue;
      int i = 0;
      for (char ch : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
        i = i * 10 + (ch - '0');
        if (i > kMaxClassIndex) break;
      }
      return indexed(family, i);
    }
  }
  throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

std::string Symbol::name() const {
  switch (index_) {
    case 0: return "d";
    case 1: return "m";
    case 2: return "t";
    default: break;
  }
  const std::size_t k = index_ - 3;
  return kFamilies[k / kMaxClassIndex] + std::to_string(k % kMaxClassIndex + 1);
}

int Symbol::weight() const { return index_ < 3 ? 0 : static_cast<int>((index_ - 3) % kMaxClassIndex) + 1; }

MultiPoly var(Symbol s, unsigned power) { return MultiPoly::variable(s.index(), power); }

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string monomial_text(const MultiPoly::Monomial& mono) {
  std::string out;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (mono.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += Symbol::from_index(i).name();
    if (mono.e[i] > 1) out += '^' + std::to_string(mono.e[i]);
  }
  return out;
}

}  // namespace

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.total == 0) {
      out += rational_text(mag);
    } else if (mag == 1) {
      out += monomial_text(mono);
    } else {
      out += rational_text(mag) + '*' + monomial_text(mono);
    }
  }
  return out;
}

Rational content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [mono, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  if (p.leading().second < 0) out = -out;
  return out;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly out = p;
  out *= Rational(1) / content(p);
  return out;
}

std::string to_factored_text(const MultiPoly& p) {
  const Rational c = content(p);
  if (c == 1) return to_text(p);
  const MultiPoly prim = primitive_part(p);
  if (prim == MultiPoly(1)) return rational_text(c);
  if (c > 0 && c.get_den() == 1) return rational_text(c) + "*(" + to_text(prim) + ")";
  return "(" + rational_text(c) + ")*(" + to_text(prim) + ")";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly result = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char ch) const {
    return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) || ch == '(';
  }

  MultiPoly expression() {
    MultiPoly acc;
    bool negate = false;
    char ch = peek();
    if (ch == '+' || ch == '-') {
      negate = ch == '-';
      ++pos_;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      ch = peek();
      if (ch != '+' && ch != '-') break;
      ++pos_;
      MultiPoly rhs = term();
      if (ch == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      const char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (ch == '/') {
        ++pos_;
        MultiPoly den = factor();
        if (!den.is_constant()) fail("division by a non-constant");
        if (den.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(pos_));
        acc *= Rational(1) / den.constant_term();
      } else if (starts_factor(ch)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    const char ch = peek();
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_++;
      if (ch == 'c' || ch == 'f' || ch == 'e') {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("digit directly after symbol '" + std::string(1, ch) + "'");
      }
      return var(Symbol::from_name(text_.substr(start, pos_ - start)));
    }
    fail(ch == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------

MultiPoly binomial_poly(const MultiPoly& ell, unsigned k) {
  MultiPoly out(1);
  Integer fact = 1;
  for (unsigned j = 0; j < k; ++j) {
    out = out * (ell - MultiPoly(Rational(j)));
    fact *= j + 1;
  }
  out *= Rational(1) / Rational(fact);
  return out;
}

Rational evaluate(const MultiPoly& p, const Assignment& assignment) {
  std::array<std::optional<Rational>, kNumSymbols> values;
  for (const auto& [sym, value] : assignment) values[sym.index()] = value;
  for (std::size_t i = 0; i < kNumSymbols; ++i) {
    if (!values[i] && p.depends_on(i)) {
      throw MissingSymbol("no value assigned to symbol '" + Symbol::from_index(i).name() + "'");
    }
  }
  return *p.try_evaluate(values);
}

MultiPoly substitute(const MultiPoly& p, const std::map<Symbol, MultiPoly>& values) {
  std::array<std::optional<MultiPoly>, kNumSymbols> repl;
  for (const auto& [sym, value] : values) repl[sym.index()] = value;
  return p.substitute(repl);
}

bool is_univariate_in(const MultiPoly& p, Symbol s) {
  for (const auto& [mono, c] : p.terms()) {
    if (mono.total != mono.e[s.index()]) return false;
  }
  return true;
}

namespace {

// Dense coefficient vector, index = power of s.
std::vector<Rational> dense(const MultiPoly& p, Symbol s) {
  if (!is_univariate_in(p, s)) throw NotUnivariate(to_text(p) + " is not univariate in " + s.name());
  std::vector<Rational> out(p.degree_in(s.index()) + 1);
  for (const auto& [mono, c] : p.terms()) out[mono.e[s.index()]] = c;
  return out;
}

MultiPoly from_dense(const std::vector<Rational>& coeffs, Symbol s) {
  MultiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out += MultiPoly(coeffs[k]) * var(s, static_cast<unsigned>(k));
  }
  return out;
}

}  // namespace

UnivariateDivision divide_univariate(const MultiPoly& num, const MultiPoly& den, Symbol s) {
  if (den.is_zero()) throw DivisionByZero("division by the zero polynomial");
  std::vector<Rational> rem = dense(num, s);
  const std::vector<Rational> divisor = dense(den, s);
  const std::size_t dd = divisor.size() - 1;
  if (num.is_zero() || rem.size() - 1 < dd) return {MultiPoly(), num};
  std::vector<Rational> quot(rem.size() - dd);
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    const Rational q = rem[k] / divisor[dd];
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor[j];
  }
  rem.resize(dd == 0 ? 1 : dd);
  return {from_dense(quot, s), from_dense(rem, s)};
}

FactorDivision divide_by_stated_factors(const MultiPoly& p, const std::vector<MultiPoly>& factors) {
  FactorDivision out{p, true};
  for (const MultiPoly& f : factors) {
    UnivariateDivision step = divide_univariate(out.quotient, f, Symbol::d());
    if (!step.remainder.is_zero()) out.exact = false;
    out.quotient = std::move(step.quotient);
  }
  return out;
}

Rational cauchy_bound(const MultiPoly& p) {
  if (p.is_zero()) throw DivisionByZero("Cauchy bound of the zero polynomial");
  const std::vector<Rational> coeffs = dense(p, Symbol::d());
  const Rational lead = abs(coeffs.back());
  Rational best = 0;
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) best = std::max(best, Rational(abs(coeffs[k]) / lead));
  return best + 1;
}

std::vector<long> integer_roots_at_least(const MultiPoly& p, long lo) {
  const Rational bound = cauchy_bound(p);
  Integer hi;
  mpz_cdiv_q(hi.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const std::vector<Rational> coeffs = dense(p, Symbol::d());
  std::vector<long> roots;
  for (long x = lo; Integer(x) <= hi; ++x) {
    Rational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace ulrichcalc
