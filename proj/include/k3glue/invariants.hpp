// Topological invariants of the SNC variety X0 and its semistable smoothing
// X: Euler numbers from the blow-up and Mayer-Vietoris bookkeeping with the
// two -24 double-locus corrections, and b2 from the integral kernel of the
// Picard restriction difference map.

#pragma once

#include "k3glue/snc.hpp"

namespace k3glue {

// e(K3) = 24; the whole pipeline is specific to K3 double loci.
inline constexpr int kEulerK3 = 24;

struct InvariantReport {
  Int euler_x1, euler_x2, euler_x0, euler_x;
  int b2_x0 = 0, b2_x = 0;
  // The surjectivity of the restriction difference map over Q; when false,
  // the kernel rank is only a lower bound for rk Pic X0 and the b2 values
  // carry that caveat.
  bool difference_map_surjective = true;
  std::vector<std::pair<std::string, Int>> breakdown;

  // euler_x0 = euler_x1 + euler_x2 - 24, euler_x = euler_x0 - 24,
  // b2_x = b2_x0 - 1.
  bool internally_consistent() const;
};

// e(ambient) + sum over centers of e(C) where e(C) = -C^2 on a K3
// (adjunction); blowing up a threefold along a curve adds e(C).
Int euler_of_component(const ComponentDescriptor& c);

// Fills the four Euler fields: Mayer-Vietoris on X0 subtracts e(K3), the
// S^1-collapse of the Clemens contraction subtracts it once more.
InvariantReport euler_of_smoothing(const GluingDescriptor& g);

// rk Pic X0 = rank of the integral kernel of the difference map
// D(L1, L2) = r1(L1) - twist . r2(L2) on Pic X1 + Pic X2.
int b2_of_snc(const GluingDescriptor& g);

// b2(X) = b2(X0) - 1 (the S^1-fiber class of the Clemens contraction).
int b2_of_smoothing(const GluingDescriptor& g);

// The difference map as a matrix [ r1 | -twist.r2 ].
IntMat difference_map(const GluingDescriptor& g);

// Full report: Euler numbers, b2, surjectivity flag, term breakdown.
InvariantReport invariant_report(const GluingDescriptor& g);

}  // namespace k3glue
