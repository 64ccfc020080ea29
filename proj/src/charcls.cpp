#include "ulrichcalc/charcls.hpp"

#include <string>

namespace ulrichcalc {

namespace {

std::map<Symbol, MultiPoly> bundle_as_f(const BundleClass& b, int upto) {
  std::map<Symbol, MultiPoly> values;
  for (int i = 1; i <= upto; ++i) values.emplace(Symbol::f(i), b.c(i));
  return values;
}

}  // namespace

BundleClass::BundleClass(int rank, GradedClass total_chern) : rank_(rank), total_(std::move(total_chern)) {
  if (rank < 0) throw RankMismatch("negative rank " + std::to_string(rank));
  if (total_[0] != MultiPoly(1)) throw RankMismatch("total Chern class must start with 1");
  for (int i = rank + 1; i <= total_.dim(); ++i) {
    if (!total_[i].is_zero()) {
      throw RankMismatch("c_" + std::to_string(i) + " is nonzero on a bundle of rank " + std::to_string(rank));
    }
  }
}

BundleClass BundleClass::trivial(HypersurfaceModel model, int rank) {
  return BundleClass(rank, GradedClass::one(model));
}

BundleClass BundleClass::line(HypersurfaceModel model, const MultiPoly& a) {
  GradedClass total = GradedClass::one(model);
  total[1] = a;
  return BundleClass(1, std::move(total));
}

BundleClass BundleClass::from_classes(HypersurfaceModel model, int rank, const std::vector<MultiPoly>& classes) {
  GradedClass total = GradedClass::one(model);
  for (int i = 1; i <= model.n && i <= static_cast<int>(classes.size()); ++i) {
    total[i] = classes[static_cast<std::size_t>(i - 1)];
  }
  return BundleClass(rank, std::move(total));
}

BundleClass BundleClass::generic(HypersurfaceModel model, int rank, Symbol (*family)(int)) {
  GradedClass total = GradedClass::one(model);
  for (int i = 1; i <= model.n && i <= rank; ++i) total[i] = var(family(i));
  return BundleClass(rank, std::move(total));
}

MultiPoly BundleClass::c(int i) const {
  if (i < 0) throw Error("negative Chern class index");
  return i <= total_.dim() ? total_[i] : MultiPoly();
}

GradedClass chern_to_ch(const BundleClass& b) { return chern_character(b.rank(), b.total_chern()); }

GradedClass chern_character(int rank, const GradedClass& total_chern) {
  const int n = total_chern.dim();
  const auto c = [&](int i) -> const MultiPoly& { return total_chern[i]; };
  GradedClass ch(total_chern.model());
  ch[0] = MultiPoly(rank);
  // Newton: p_k = sum_{i<k} (-1)^(i-1) c_i p_(k-i) + (-1)^(k-1) k c_k.
  std::vector<MultiPoly> power_sums(static_cast<std::size_t>(n) + 1);
  Integer fact = 1;
  for (int k = 1; k <= n; ++k) {
    MultiPoly pk = c(k) * MultiPoly(Rational((k % 2 == 1) ? k : -k));
    for (int i = 1; i < k; ++i) {
      const MultiPoly term = c(i) * power_sums[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) {
        pk += term;
      } else {
        pk -= term;
      }
    }
    fact *= k;
    ch[k] = pk * MultiPoly(Rational(1) / Rational(fact));
    power_sums[static_cast<std::size_t>(k)] = std::move(pk);
  }
  return ch;
}

BundleClass ch_to_chern(const GradedClass& ch, int rank) {
  if (ch[0] != MultiPoly(rank)) {
    throw RankMismatch("Chern character has degree-0 part " + to_text(ch[0]) + ", expected rank " +
                       std::to_string(rank));
  }
  const int n = ch.dim();
  std::vector<MultiPoly> power_sums(static_cast<std::size_t>(n) + 1);
  Integer fact = 1;
  for (int k = 1; k <= n; ++k) {
    fact *= k;
    power_sums[static_cast<std::size_t>(k)] = ch[k] * MultiPoly(Rational(fact));
  }
  // k c_k = sum_{i=1}^k (-1)^(i-1) c_(k-i) p_i.
  GradedClass total = GradedClass::one(ch.model());
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i) {
      const MultiPoly term = total[k - i] * power_sums[static_cast<std::size_t>(i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    total[k] = acc * MultiPoly(Rational(1) / Rational(k));
  }
  return BundleClass(rank, std::move(total));
}

GradedClass todd(const GradedClass& total_chern) {
  const int n = total_chern.dim();
  const std::vector<MultiPoly>& formula = todd_formula(n);
  std::map<Symbol, MultiPoly> values;
  for (int i = 1; i <= n; ++i) values.emplace(Symbol::f(i), total_chern[i]);
  GradedClass out(total_chern.model());
  for (int k = 0; k <= n; ++k) out[k] = substitute(formula[static_cast<std::size_t>(k)], values);
  return out;
}

BundleClass dual(const BundleClass& b) {
  GradedClass total = b.total_chern();
  for (int i = 1; i <= total.dim(); i += 2) total[i] = -total[i];
  return BundleClass(b.rank(), std::move(total));
}

BundleClass twist(const BundleClass& b, const MultiPoly& s) {
  // c_k(b(s)) = sum_{i<=k} C(r-i, k-i) c_i s^(k-i).
  const int r = b.rank();
  GradedClass total = GradedClass::one(b.model());
  std::vector<MultiPoly> s_powers{MultiPoly(1)};
  for (int k = 1; k <= total.dim(); ++k) {
    s_powers.push_back(s_powers.back() * s);
    MultiPoly acc;
    for (int i = 0; i <= k && i <= r; ++i) {
      const Integer coeff = binomial(static_cast<unsigned long>(r - i), static_cast<unsigned long>(k - i));
      if (coeff == 0) continue;
      acc += b.c(i) * s_powers[static_cast<std::size_t>(k - i)] * MultiPoly(Rational(coeff));
    }
    total[k] = std::move(acc);
  }
  return BundleClass(r, std::move(total));
}

BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
  return BundleClass(a.rank() + b.rank(), cup(a.total_chern(), b.total_chern()));
}

BundleClass tensor(const BundleClass& a, const BundleClass& b) {
  return ch_to_chern(cup(chern_to_ch(a), chern_to_ch(b)), a.rank() * b.rank());
}

BundleClass exterior_power(const BundleClass& b, int p) {
  if (p < 0) throw Error("negative exterior power");
  const HypersurfaceModel model = b.model();
  if (p == 0) return BundleClass::trivial(model, 1);
  if (p > b.rank()) return BundleClass::zero(model);
  const std::vector<MultiPoly>& formula = exterior_power_formula(b.rank(), p, model.n);
  const std::map<Symbol, MultiPoly> values = bundle_as_f(b, b.rank());
  GradedClass total = GradedClass::one(model);
  for (int k = 1; k <= model.n; ++k) total[k] = substitute(formula[static_cast<std::size_t>(k)], values);
  return BundleClass(static_cast<int>(binomial(static_cast<unsigned long>(b.rank()), static_cast<unsigned long>(p)).get_si()),
                     std::move(total));
}

}  // namespace ulrichcalc
