#pragma once

// Chern classes of vector bundles on the hypersurface model: Chern
// character, Todd class, and the usual functorial constructions.

#include <vector>

#include "ulrichcalc/cohring.hpp"
#include "ulrichcalc/symmetric.hpp"

namespace ulrichcalc {

/// Rank plus total Chern class 1 + c_1 + ... + c_n, where piece i is the
/// coefficient of H^i. Construction enforces c_0 = 1 and c_i = 0 for
/// i > rank (RankMismatch otherwise).
class BundleClass {
 public:
  BundleClass(int rank, GradedClass total_chern);

  static BundleClass trivial(HypersurfaceModel model, int rank);
  /// Rank 0, total class 1, Chern character 0.
  static BundleClass zero(HypersurfaceModel model) { return trivial(model, 0); }
  /// O(aH).
  static BundleClass line(HypersurfaceModel model, const MultiPoly& a);
  /// c_i = classes[i-1] * H^i; missing entries are zero.
  static BundleClass from_classes(HypersurfaceModel model, int rank, const std::vector<MultiPoly>& classes);
  /// c_i = family(i) * H^i for 1 <= i <= min(rank, n), e.g. Symbol::f.
  static BundleClass generic(HypersurfaceModel model, int rank, Symbol (*family)(int));

  int rank() const { return rank_; }
  const HypersurfaceModel& model() const { return total_.model(); }
  const GradedClass& total_chern() const { return total_; }
  /// Coefficient of H^i in c_i; zero for i > n.
  MultiPoly c(int i) const;

  friend bool operator==(const BundleClass&, const BundleClass&) = default;

 private:
  int rank_;
  GradedClass total_;
};

GradedClass chern_to_ch(const BundleClass& b);

/// Chern character of a formal class that need not satisfy the rank bound.
GradedClass chern_character(int rank, const GradedClass& total_chern);

/// Inverse of chern_to_ch. Throws RankMismatch if the degree-0 part is not
/// `rank` or the result has classes above the rank.
BundleClass ch_to_chern(const GradedClass& ch, int rank);

/// prod x_i / (1 - exp(-x_i)) over the roots of the given total Chern class.
GradedClass todd(const GradedClass& total_chern);

BundleClass dual(const BundleClass& b);

/// b tensor O(sH).
BundleClass twist(const BundleClass& b, const MultiPoly& s);

BundleClass direct_sum(const BundleClass& a, const BundleClass& b);

BundleClass tensor(const BundleClass& a, const BundleClass& b);

/// Lambda^p b. Trivial of rank 1 for p = 0, the zero bundle for p > rank.
BundleClass exterior_power(const BundleClass& b, int p);

}  // namespace ulrichcalc
