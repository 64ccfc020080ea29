#pragma once

// Truncated cohomology ring Q[coeffs][H] / (H^{n+1}) of a smooth degree-d
// hypersurface X of dimension n, with integral H^n = d.

#include <vector>

#include "ulrichcalc/exactnum.hpp"

namespace ulrichcalc {

struct HypersurfaceModel {
  int n = 1;

  bool operator==(const HypersurfaceModel&) const = default;
};

/// Class sum_i h_i H^i with MultiPoly coefficients h_0..h_n.
class GradedClass {
 public:
  explicit GradedClass(HypersurfaceModel model);
  GradedClass(HypersurfaceModel model, std::vector<MultiPoly> coeffs);

  static GradedClass zero(HypersurfaceModel model) { return GradedClass(model); }
  static GradedClass one(HypersurfaceModel model);
  // coeff * H^k (zero if k > n).
  static GradedClass h_power(HypersurfaceModel model, int k, const MultiPoly& coeff = MultiPoly(1));

  const HypersurfaceModel& model() const { return model_; }
  int dim() const { return model_.n; }
  const MultiPoly& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  MultiPoly& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  const MultiPoly& top() const { return coeffs_.back(); }

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const MultiPoly& scalar);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(GradedClass a, const MultiPoly& s) { return a *= s; }
  friend bool operator==(const GradedClass& a, const GradedClass& b) = default;

  // Sum of the coefficients; unambiguous when piece i has weight i.
  MultiPoly flattened() const;

 private:
  HypersurfaceModel model_;
  std::vector<MultiPoly> coeffs_;
};

/// Truncated product. Throws ModelMismatch for different dimensions.
GradedClass cup(const GradedClass& a, const GradedClass& b);

inline GradedClass operator*(const GradedClass& a, const GradedClass& b) { return cup(a, b); }

/// d times the coefficient of H^n.
MultiPoly integrate(const GradedClass& a);

/// sum_{i<=n} t^i H^i / i!
GradedClass exp_h(const MultiPoly& t_coeff, HypersurfaceModel model);

}  // namespace ulrichcalc
