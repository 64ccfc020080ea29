#include "ulrichcalc/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <string>
#include <tuple>

namespace ulrichcalc {

namespace {

RootMonomial sorted_desc(RootMonomial m) {
  std::sort(m.e.begin(), m.e.end(), std::greater<>());
  return m;
}

bool is_dominant(const RootMonomial& m) { return std::is_sorted(m.e.begin(), m.e.end(), std::greater<>()); }

// Graded-lex comparison with x_1 > x_2 > ...
bool grlex_less(const RootMonomial& a, const RootMonomial& b) {
  if (a.total != b.total) return a.total < b.total;
  return a.e < b.e;
}

Rational lookup(const SymmetricPoly& p, const RootMonomial& m) {
  auto it = p.find(sorted_desc(m));
  return it == p.end() ? Rational(0) : it->second;
}

// Every dominant monomial with at most `parts` nonzero entries and total degree <= max_degree.
std::vector<RootMonomial> dominant_monomials(int parts, int max_degree) {
  std::vector<RootMonomial> out;
  RootMonomial cur;
  std::function<void(int, int, int)> rec = [&](int index, int remaining, int cap) {
    out.push_back(cur);
    if (index >= parts) return;
    for (int v = 1; v <= std::min(remaining, cap); ++v) {
      cur.e[static_cast<std::size_t>(index)] = static_cast<std::uint8_t>(v);
      cur.total = static_cast<std::uint16_t>(cur.total + v);
      rec(index + 1, remaining - v, v);
      cur.total = static_cast<std::uint16_t>(cur.total - v);
      cur.e[static_cast<std::size_t>(index)] = 0;
    }
  };
  rec(0, max_degree, max_degree);
  return out;
}

// Weight-graded pieces of a polynomial in f_1..f_k (weight of f_i is i).
std::vector<MultiPoly> split_by_weight(const MultiPoly& p, int max_weight) {
  std::vector<MultiPoly> out(static_cast<std::size_t>(max_weight) + 1);
  for (const auto& [mono, c] : p.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < kNumSymbols; ++i) w += mono.e[i] * Symbol::from_index(i).weight();
    if (w <= max_weight) out[static_cast<std::size_t>(w)] += MultiPoly::monomial(mono, c);
  }
  return out;
}

}  // namespace

SymmetricContext::SymmetricContext(int num_roots, int truncation_degree)
    : num_roots_(num_roots), truncation_degree_(truncation_degree) {
  if (num_roots < 1 || num_roots > kMaxRoots) {
    throw UnsupportedRank("splitting principle supports 1.." + std::to_string(kMaxRoots) + " roots, got " +
                          std::to_string(num_roots));
  }
  if (truncation_degree < 1) throw Error("truncation degree must be positive");
}

RootPoly SymmetricContext::root(int i) const {
  if (i < 1 || i > num_roots_) throw Error("root index out of range");
  return RootPoly::variable(static_cast<std::size_t>(i - 1));
}

SymmetricPoly SymmetricContext::dominant_part(const RootPoly& p) const {
  SymmetricPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.total <= truncation_degree_ && is_dominant(mono)) out.emplace(mono, c);
  }
  return out;
}

SymmetricPoly SymmetricContext::multiply(const SymmetricPoly& a, const SymmetricPoly& b) const {
  SymmetricPoly out;
  if (a.empty() || b.empty()) return out;
  for (const RootMonomial& lambda : dominant_monomials(num_roots_, truncation_degree_)) {
    // Sum over all alpha <= lambda componentwise of a_alpha * b_(lambda - alpha).
    Rational sum = 0;
    RootMonomial alpha;
    std::function<void(int)> rec = [&](int index) {
      if (index == num_roots_) {
        RootMonomial beta;
        for (int i = 0; i < num_roots_; ++i) {
          beta.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(lambda.e[static_cast<std::size_t>(i)] - alpha.e[static_cast<std::size_t>(i)]);
        }
        beta.total = static_cast<std::uint16_t>(lambda.total - alpha.total);
        const Rational av = lookup(a, alpha);
        if (av == 0) return;
        const Rational bv = lookup(b, beta);
        if (bv != 0) sum += av * bv;
        return;
      }
      const auto slot = static_cast<std::size_t>(index);
      for (int v = 0; v <= lambda.e[slot]; ++v) {
        alpha.e[slot] = static_cast<std::uint8_t>(v);
        alpha.total = static_cast<std::uint16_t>(alpha.total + v);
        rec(index + 1);
        alpha.total = static_cast<std::uint16_t>(alpha.total - v);
      }
      alpha.e[slot] = 0;
    };
    rec(0);
    if (sum != 0) out.emplace(lambda, sum);
  }
  return out;
}

SymmetricPoly SymmetricContext::elementary(int k) const {
  if (k < 0 || k > num_roots_) throw Error("elementary index out of range");
  RootMonomial m;
  for (int i = 0; i < k; ++i) m.e[static_cast<std::size_t>(i)] = 1;
  m.total = static_cast<std::uint16_t>(k);
  SymmetricPoly out;
  if (k <= truncation_degree_) out.emplace(m, Rational(1));
  return out;
}

MultiPoly SymmetricContext::to_elementary(SymmetricPoly p) const {
  std::map<RootMonomial, SymmetricPoly, GrevlexLess<kMaxRoots>> products;
  MultiPoly result;
  while (!p.empty()) {
    auto lead = p.begin();
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (grlex_less(lead->first, it->first)) lead = it;
    }
    const RootMonomial lambda = lead->first;
    const Rational coef = lead->second;
    if (!is_dominant(lambda)) throw Error("polynomial is not symmetric in the roots");

    auto [slot, fresh] = products.try_emplace(lambda);
    MultiPoly f_term(coef);
    if (fresh) slot->second = elementary(0);
    for (int i = 0; i < num_roots_; ++i) {
      const int next = i + 1 < num_roots_ ? lambda.e[static_cast<std::size_t>(i + 1)] : 0;
      const int power = lambda.e[static_cast<std::size_t>(i)] - next;
      if (power == 0) continue;
      f_term = f_term * var(Symbol::f(i + 1), static_cast<unsigned>(power));
      if (fresh) {
        for (int j = 0; j < power; ++j) slot->second = multiply(slot->second, elementary(i + 1));
      }
    }
    result += f_term;
    for (const auto& [mono, c] : slot->second) {
      auto it = p.find(mono);
      const Rational updated = (it == p.end() ? Rational(0) : it->second) - coef * c;
      if (updated == 0) {
        if (it != p.end()) p.erase(it);
      } else if (it == p.end()) {
        p.emplace(mono, updated);
      } else {
        it->second = updated;
      }
    }
  }
  return result;
}

std::vector<Rational> todd_series(int max_degree) {
  // Invert (1 - exp(-x)) / x = sum_k (-1)^k x^k / (k+1)!.
  std::vector<Rational> g(static_cast<std::size_t>(max_degree) + 1);
  Integer fact = 1;
  for (int k = 0; k <= max_degree; ++k) {
    fact *= k + 1;
    g[static_cast<std::size_t>(k)] = Rational((k % 2 == 0) ? 1 : -1) / Rational(fact);
  }
  std::vector<Rational> q(g.size());
  q[0] = 1;
  for (std::size_t k = 1; k < g.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += g[j] * q[k - j];
    q[k] = -acc;
  }
  return q;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const std::vector<MultiPoly>& exterior_power_formula(int rank, int p, int max_degree) {
  using Key = std::tuple<int, int, int>;
  static std::map<Key, std::vector<MultiPoly>> cache;
  const Key key{rank, p, max_degree};
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (rank < 0 || rank > kMaxExteriorRank) {
    throw UnsupportedRank("exterior powers are supported up to rank " + std::to_string(kMaxExteriorRank) + ", got " +
                          std::to_string(rank));
  }
  std::vector<MultiPoly> out(static_cast<std::size_t>(max_degree) + 1);
  out[0] = MultiPoly(1);
  if (p >= 1 && p <= rank) {
    const SymmetricContext ctx(rank, max_degree);
    // prod over p-subsets S of (1 + sum_{i in S} x_i)
    RootPoly product(1);
    std::vector<int> subset(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      RootPoly factor(1);
      for (int i : subset) factor += ctx.root(i);
      product = product.truncated_product(factor, static_cast<unsigned>(max_degree));
      int pos = p - 1;
      while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == rank - p + pos + 1) --pos;
      if (pos < 0) break;
      ++subset[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < p; ++i) subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i - 1)] + 1;
    }
    const std::vector<MultiPoly> pieces = split_by_weight(ctx.to_elementary(ctx.dominant_part(product)), max_degree);
    for (int k = 1; k <= max_degree; ++k) out[static_cast<std::size_t>(k)] = pieces[static_cast<std::size_t>(k)];
  }
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(key, std::move(out)).first->second;
}

const std::vector<MultiPoly>& todd_formula(int max_degree) {
  static std::map<int, std::vector<MultiPoly>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(max_degree); it != cache.end()) return it->second;
  }
  const SymmetricContext ctx(max_degree, max_degree);
  const std::vector<Rational> q = todd_series(max_degree);
  // prod_i Q(x_i) has coefficient prod_i q[alpha_i] on x^alpha.
  SymmetricPoly product;
  for (const RootMonomial& lambda : dominant_monomials(max_degree, max_degree)) {
    Rational c = 1;
    for (int i = 0; i < max_degree; ++i) c *= q[lambda.e[static_cast<std::size_t>(i)]];
    if (c != 0) product.emplace(lambda, c);
  }
  std::vector<MultiPoly> out = split_by_weight(ctx.to_elementary(std::move(product)), max_degree);
  std::lock_guard lock(cache_mutex());
  return cache.try_emplace(max_degree, std::move(out)).first->second;
}

}  // namespace ulrichcalc
