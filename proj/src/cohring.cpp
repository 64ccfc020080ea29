#include "ulrichcalc/cohring.hpp"

#include <string>

namespace ulrichcalc {

namespace {

void require_same_model(const GradedClass& a, const GradedClass& b) {
  if (a.model() != b.model()) {
    throw ModelMismatch("classes live on models of dimension " + std::to_string(a.dim()) + " and " +
                        std::to_string(b.dim()));
  }
}

}  // namespace

GradedClass::GradedClass(HypersurfaceModel model) : model_(model) {
  if (model.n < 1) throw ModelMismatch("hypersurface dimension must be at least 1");
  coeffs_.resize(static_cast<std::size_t>(model.n) + 1);
}

GradedClass::GradedClass(HypersurfaceModel model, std::vector<MultiPoly> coeffs) : GradedClass(model) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

GradedClass GradedClass::one(HypersurfaceModel model) { return h_power(model, 0); }

GradedClass GradedClass::h_power(HypersurfaceModel model, int k, const MultiPoly& coeff) {
  GradedClass out(model);
  if (k >= 0 && k <= model.n) out[k] = coeff;
  return out;
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  require_same_model(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  require_same_model(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator*=(const MultiPoly& scalar) {
  for (auto& c : coeffs_) c = c * scalar;
  return *this;
}

MultiPoly GradedClass::flattened() const {
  MultiPoly out;
  for (const auto& c : coeffs_) out += c;
  return out;
}

GradedClass cup(const GradedClass& a, const GradedClass& b) {
  require_same_model(a, b);
  GradedClass out(a.model());
  const int n = a.dim();
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

MultiPoly integrate(const GradedClass& a) { return var(Symbol::d()) * a.top(); }

GradedClass exp_h(const MultiPoly& t_coeff, HypersurfaceModel model) {
  GradedClass out(model);
  MultiPoly power(1);
  Integer fact = 1;
  for (int i = 0; i <= model.n; ++i) {
    if (i > 0) {
      power = power * t_coeff;
      fact *= i;
    }
    out[i] = power * MultiPoly(Rational(1) / Rational(fact));
  }
  return out;
}

}  // namespace ulrichcalc
