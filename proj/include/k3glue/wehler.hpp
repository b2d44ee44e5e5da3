// The automorphism-lattice dictionary for very general (2,2,2) hypersurfaces
// in P1 x P1 x P1: covering involutions, the infinite-order composite, its
// closed-form powers, and the special-fiber vs generic-fiber pullback
// discrepancy of the family involution.

#pragma once

#include "k3glue/lattice.hpp"

namespace k3glue {

// Pic S = Z e1 + Z e2 + Z e3 with e_i^2 = 0 and e_i . e_j = 2.
class WehlerModel {
 public:
  WehlerModel();

  const LatticePtr& lattice() const { return lattice_; }

  // 1-based fiber class e_i.
  DivisorClass fiber_class(int i) const;

  // H = e1 + e2 + e3, the reference polarization; H^2 = 12.
  DivisorClass reference_ample() const;

  DivisorClass cls(IntVec coords) const { return DivisorClass(lattice_, std::move(coords)); }

 private:
  LatticePtr lattice_;
};

// Pullback of the covering involution iota_{ij} (1 <= i < j <= 3):
// fixes e_i, e_j and sends the remaining e_k to 2 e_i + 2 e_j - e_k.
Isometry involution_pullback(const WehlerModel& model, int i, int j);

// iota = iota_12 . iota_13; its pullback matrix is
// [[1,2,6],[0,-1,-2],[0,2,3]].
Isometry iota_pullback(const WehlerModel& model);

// (iota^a)^* = [[1, 4a^2-2a, 4a^2+2a], [0, 1-2a, -2a], [0, 2a, 1+2a]].
// Valid for every integer a; negative a gives the inverse power.
Isometry power_closed_form(const WehlerModel& model, const Int& a);

struct OrderGrowth {
  enum class Kind { finite, infinite_polynomial, infinite_exponential };
  Kind kind = Kind::finite;
  int order = 0;         // set for finite
  int growth_degree = 0; // set for infinite_polynomial

  bool is_finite() const { return kind == Kind::finite; }
};

// Detects finite order n <= max_test by exact matrix powers; otherwise
// classifies the entry growth of M^a for a <= max_test by exact finite
// differencing (degree d iff the (d+1)-st differences vanish). Growth that
// fits no polynomial within the sampled window is reported as exponential;
// detecting degree d needs max_test >= d + 2 samples.
OrderGrowth order_and_growth(const Isometry& m, int max_test);

// The lattice shadow of the flop indeterminacy of the family involution:
// on the special fiber the involution pulls every e_i back to itself, on the
// very general fiber it acts as iota_12^*. The difference applied to e3 is
// the class 2 e1 + 2 e2 - 2 e3.
//
// Background, not implemented symbolically: in the family
// U0^2 F1 + U1^2 F2 + lambda U0 U1 F3 = 0 over the lambda-line, the covering
// involution acts on the fiber coordinate u = U1/U0 by
// u -> -u - lambda f3/f2, a birational involution of the total space that is
// undefined exactly along the eight (-2)-curves F1 = F2 = lambda = 0. At
// lambda = 0 it restricts to u -> -u, fixing every fiber class; on a very
// general fiber it is iota_12. The two pullbacks returned here are those two
// specializations.
struct PullbackDiscrepancy {
  Isometry special_fiber;   // identity
  Isometry generic_fiber;   // iota_12^*
  DivisorClass difference_on_e3;
};

PullbackDiscrepancy family_pullback_discrepancy(const WehlerModel& model);

}  // namespace k3glue
