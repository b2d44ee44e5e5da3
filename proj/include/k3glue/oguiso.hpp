// Rank-3 quartic K3 model with two skew lines: Pic S = Z f + Z e + Z v,
// gram [[0,1,0],[1,0,0],[0,0,-20]], hyperplane class h = 4f + 3e + v, and
// the infinite-order translation automorphism along the elliptic fibration
// |f|.

#pragma once

#include "k3glue/lattice.hpp"

namespace k3glue {

class OguisoModel {
 public:
  OguisoModel();

  const LatticePtr& lattice() const { return lattice_; }

  DivisorClass f() const { return cls({1, 0, 0}); }  // elliptic fiber
  DivisorClass e() const { return cls({0, 1, 0}); }
  DivisorClass v() const { return cls({0, 0, 1}); }
  DivisorClass h() const { return cls({4, 3, 1}); }  // hyperplane section

  // Pullback of the translation by the section Gamma_a:
  // [[1, 10a^2, 20a], [0, 1, 0], [0, a, 1]].
  Isometry translation_pullback(const Int& a) const;

  // l(a) = h + (iota^a)^* h = (30a^2 + 20a + 8, 6, 3a + 2).
  DivisorClass l(const Int& a) const;

  // Class of the blow-up center curve C_a: 4 l(a) - a f.
  DivisorClass big_center_class(const Int& a) const;

  // Section class Gamma_c = (10c^2 - 1) f + e + c v. The model records
  // Gamma_c^2 = -2 and Gamma_c . f = 1; uniqueness of the section is a
  // geometric input, not re-derived here.
  DivisorClass section_class(const Int& c) const;

  DivisorClass cls(IntVec coords) const { return DivisorClass(lattice_, std::move(coords)); }

 private:
  LatticePtr lattice_;
};

}  // namespace k3glue
