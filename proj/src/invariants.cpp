#include "k3glue/invariants.hpp"

namespace k3glue {

bool InvariantReport::internally_consistent() const {
  return euler_x0 == euler_x1 + euler_x2 - kEulerK3 && euler_x == euler_x0 - kEulerK3 &&
         b2_x == b2_x0 - 1;
}

Int euler_of_component(const ComponentDescriptor& c) {
  Int e = c.ambient.euler_number;
  for (const DivisorClass& center : c.centers) e += -self_intersection(center);
  return e;
}

IntMat difference_map(const GluingDescriptor& g) {
  IntMat r1 = restriction_matrix(g.x1);
  IntMat r2 = g.twist.matrix * restriction_matrix(g.x2);
  return IntMat::hstack(r1, -r2);
}

int b2_of_snc(const GluingDescriptor& g) {
  IntMat d = difference_map(g);
  return d.cols() - rank(d);
}

int b2_of_smoothing(const GluingDescriptor& g) { return b2_of_snc(g) - 1; }

InvariantReport euler_of_smoothing(const GluingDescriptor& g) {
  InvariantReport rep;
  rep.euler_x1 = euler_of_component(g.x1);
  rep.euler_x2 = euler_of_component(g.x2);
  rep.euler_x0 = rep.euler_x1 + rep.euler_x2 - kEulerK3;
  rep.euler_x = rep.euler_x0 - kEulerK3;
  rep.breakdown.emplace_back("e(X1) = e(ambient1) + sum e(C)", rep.euler_x1);
  rep.breakdown.emplace_back("e(X2) = e(ambient2) + sum e(C)", rep.euler_x2);
  rep.breakdown.emplace_back("e(X0) = e(X1) + e(X2) - e(K3)", rep.euler_x0);
  rep.breakdown.emplace_back("e(X) = e(X0) - e(K3)", rep.euler_x);
  return rep;
}

InvariantReport invariant_report(const GluingDescriptor& g) {
  InvariantReport rep = euler_of_smoothing(g);
  IntMat d = difference_map(g);
  int rk = rank(d);
  rep.b2_x0 = d.cols() - rk;
  rep.b2_x = rep.b2_x0 - 1;
  rep.difference_map_surjective = rk == g.s_lattice->rank();
  rep.breakdown.emplace_back("rank of difference map", rk);
  rep.breakdown.emplace_back("b2(X0) = kernel rank", rep.b2_x0);
  rep.breakdown.emplace_back("b2(X) = b2(X0) - 1", rep.b2_x);
  return rep;
}

}  // namespace k3glue
