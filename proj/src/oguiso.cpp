#include "k3glue/oguiso.hpp"

namespace k3glue {

OguisoModel::OguisoModel() {
  lattice_ = make_lattice("oguiso", IntMat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, -20}),
                          {"f", "e", "v"});
}

Isometry OguisoModel::translation_pullback(const Int& a) const {
  IntMat m(3, 3,
           {1, 10 * a * a, 20 * a,
            0, 1, 0,
            0, a, 1});
  return Isometry(lattice_, m);
}

DivisorClass OguisoModel::l(const Int& a) const {
  return cls({30 * a * a + 20 * a + 8, 6, 3 * a + 2});
}

DivisorClass OguisoModel::big_center_class(const Int& a) const {
  return Int(4) * l(a) - a * f();
}

DivisorClass OguisoModel::section_class(const Int& c) const {
  return cls({10 * c * c - 1, 1, c});
}

}  // namespace k3glue
