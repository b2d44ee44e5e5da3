#include "k3glue/wehler.hpp"

namespace k3glue {

WehlerModel::WehlerModel() {
  lattice_ = make_lattice("wehler", IntMat(3, 3, {0, 2, 2, 2, 0, 2, 2, 2, 0}),
                          {"e1", "e2", "e3"});
}

DivisorClass WehlerModel::fiber_class(int i) const {
  if (i < 1 || i > 3) throw InputError("wehler fiber index must be 1, 2 or 3");
  IntVec c(3, Int(0));
  c[i - 1] = 1;
  return DivisorClass(lattice_, c);
}

DivisorClass WehlerModel::reference_ample() const {
  return DivisorClass(lattice_, IntVec{1, 1, 1});
}

Isometry involution_pullback(const WehlerModel& model, int i, int j) {
  if (i < 1 || j > 3 || i >= j) throw InputError("involution indices must satisfy 1 <= i < j <= 3");
  int k = 6 - i - j;  // the remaining index
  IntMat m(3, 3);
  m.at(i - 1, i - 1) = 1;
  m.at(j - 1, j - 1) = 1;
  // e_k -> 2 e_i + 2 e_j - e_k
  m.at(i - 1, k - 1) = 2;
  m.at(j - 1, k - 1) = 2;
  m.at(k - 1, k - 1) = -1;
  return Isometry(model.lattice(), m);
}

Isometry iota_pullback(const WehlerModel& model) {
  return compose(involution_pullback(model, 1, 2), involution_pullback(model, 1, 3));
}

Isometry power_closed_form(const WehlerModel& model, const Int& a) {
  IntMat m(3, 3,
           {1, 4 * a * a - 2 * a, 4 * a * a + 2 * a,
            0, 1 - 2 * a, -2 * a,
            0, 2 * a, 1 + 2 * a});
  return Isometry(model.lattice(), m);
}

OrderGrowth order_and_growth(const Isometry& iso, int max_test) {
  if (max_test < 1) throw InputError("order_and_growth needs max_test >= 1");
  const int n = iso.lattice->rank();
  // Powers M^1 .. M^max_test, reused for both the order test and the
  // growth table.
  std::vector<IntMat> powers;
  powers.reserve(max_test);
  IntMat p = iso.matrix;
  for (int a = 1; a <= max_test; ++a) {
    if (p.is_identity()) {
      OrderGrowth r;
      r.kind = OrderGrowth::Kind::finite;
      r.order = a;
      return r;
    }
    powers.push_back(p);
    p = p * iso.matrix;
  }
  // Entry sequences s(a) = (M^a)_{ij}; repeatedly take differences. The
  // sequence is polynomial of degree d iff all d-th differences are constant.
  std::vector<IntVec> seq(size_t(n) * n, IntVec(max_test));
  for (int a = 0; a < max_test; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) seq[size_t(i) * n + j][a] = powers[a].at(i, j);
  int len = max_test;
  for (int d = 0; len >= 2; ++d, --len) {
    bool constant = true;
    for (const IntVec& s : seq)
      for (int a = 0; a + 1 < len && constant; ++a)
        if (s[a] != s[a + 1]) constant = false;
    if (constant) {
      OrderGrowth r;
      r.kind = OrderGrowth::Kind::infinite_polynomial;
      r.growth_degree = d;
      return r;
    }
    for (IntVec& s : seq)
      for (int a = 0; a + 1 < len; ++a) s[a] = s[a + 1] - s[a];
  }
  OrderGrowth r;
  r.kind = OrderGrowth::Kind::infinite_exponential;
  return r;
}

PullbackDiscrepancy family_pullback_discrepancy(const WehlerModel& model) {
  Isometry special = Isometry::identity(model.lattice());
  Isometry generic = involution_pullback(model, 1, 2);
  DivisorClass e3 = model.fiber_class(3);
  DivisorClass diff = apply_isometry(generic, e3) - apply_isometry(special, e3);
  return PullbackDiscrepancy{std::move(special), std::move(generic), std::move(diff)};
}

}  // namespace k3glue
