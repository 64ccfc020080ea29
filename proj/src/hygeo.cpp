#include "ulrichcalc/hygeo.hpp"

#include <map>
#include <mutex>

namespace ulrichcalc {

TangentData tangent_chern(HypersurfaceModel model) {
  const int n = model.n;
  const MultiPoly d = var(Symbol::d());
  TangentData out{model, std::vector<MultiPoly>(static_cast<std::size_t>(n) + 1)};
  for (int i = 0; i <= n; ++i) {
    MultiPoly acc;
    for (int k = 0; k <= i; ++k) {
      const Integer sign = (i - k) % 2 == 0 ? 1 : -1;
      acc += d.pow(static_cast<unsigned>(i - k)) *
             MultiPoly(Rational(sign * binomial(static_cast<unsigned long>(n + 2), static_cast<unsigned long>(k))));
    }
    out.chern[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

TangentData tangent_chern_recursive(HypersurfaceModel model) {
  const int n = model.n;
  const MultiPoly d = var(Symbol::d());
  TangentData out{model, std::vector<MultiPoly>(static_cast<std::size_t>(n) + 1)};
  out.chern[0] = MultiPoly(1);
  for (int i = 1; i <= n; ++i) {
    out.chern[static_cast<std::size_t>(i)] =
        MultiPoly(Rational(binomial(static_cast<unsigned long>(n + 2), static_cast<unsigned long>(i)))) -
        d * out.chern[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

const GradedClass& hypersurface_todd(HypersurfaceModel model) {
  static std::mutex mu;
  static std::map<int, GradedClass> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(model.n); it != cache.end()) return it->second;
  }
  GradedClass td = todd(tangent_chern(model).total());
  std::lock_guard lock(mu);
  return cache.try_emplace(model.n, std::move(td)).first->second;
}

MultiPoly chi_structure_twist(HypersurfaceModel model, const MultiPoly& m_expr) {
  const auto k = static_cast<unsigned>(model.n + 1);
  const MultiPoly shift(model.n + 1);
  return binomial_poly(m_expr + shift, k) - binomial_poly(m_expr - var(Symbol::d()) + shift, k);
}

MultiPoly riemann_roch_top(const GradedClass& ch, const MultiPoly& twist_expr, const GradedClass& todd_class) {
  const GradedClass twisted = ch * exp_h(twist_expr, ch.model());
  const int n = ch.dim();
  MultiPoly acc;
  for (int i = 0; i <= n; ++i) {
    if (!twisted[i].is_zero() && !todd_class[n - i].is_zero()) acc += twisted[i] * todd_class[n - i];
  }
  return acc;
}

MultiPoly hrr_chi_character(const GradedClass& ch, const MultiPoly& twist_expr) {
  return var(Symbol::d()) * riemann_roch_top(ch, twist_expr, hypersurface_todd(ch.model()));
}

MultiPoly hrr_chi(const BundleClass& b, const MultiPoly& twist_expr) {
  return hrr_chi_character(chern_to_ch(b), twist_expr);
}

}  // namespace ulrichcalc
