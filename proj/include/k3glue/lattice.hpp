// Integral lattices with symmetric Gram forms, divisor classes as coordinate
// vectors, and isometries acting on them.
//
// Convention, fixed once for the whole library: an isometry matrix acts on
// coordinate column vectors, column j holding the image of the j-th basis
// class. For pullbacks this means (f . g)^* has matrix  M(g^*) * M(f^*),
// i.e. compose(f*, g*) multiplies in reverse order.

#pragma once

#include <memory>
#include <string>

#include "k3glue/intmat.hpp"

namespace k3glue {

class Lattice {
 public:
  Lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels);

  const std::string& name() const { return name_; }
  int rank() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }

  // Structural identity: separately constructed copies of the same lattice
  // are interchangeable.
  bool same_as(const Lattice& other) const {
    return this == &other || (name_ == other.name_ && gram_ == other.gram_);
  }

 private:
  std::string name_;
  IntMat gram_;
  std::vector<std::string> basis_labels_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels);

struct DivisorClass {
  LatticePtr lattice;
  IntVec coords;

  DivisorClass() = default;
  DivisorClass(LatticePtr lat, IntVec c);

  bool is_zero() const { return k3glue::is_zero(coords); }
  bool operator==(const DivisorClass& o) const {
    return lattice->same_as(*o.lattice) && coords == o.coords;
  }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Int& c, const DivisorClass& a);

struct Isometry {
  LatticePtr lattice;
  IntMat matrix;  // columns = images of basis classes

  Isometry() = default;
  // Validates M^T G M = G and |det M| = 1.
  Isometry(LatticePtr lat, IntMat m);

  static Isometry identity(const LatticePtr& lat) {
    return Isometry(lat, IntMat::identity(lat->rank()));
  }
  bool is_identity() const { return matrix.is_identity(); }

  Isometry inverse() const { return Isometry(lattice, inverse_unimodular(matrix)); }

  // a-th power; negative exponents via the inverse.
  Isometry power(const Int& a) const;
};

void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* what);

// coords(D)^T . gram . coords(E); symmetric, bilinear.
Int pairing(const DivisorClass& d, const DivisorClass& e);

Int self_intersection(const DivisorClass& d);

DivisorClass apply_isometry(const Isometry& m, const DivisorClass& d);

// Pullback of the composite map m . n (apply n first, then m):
// matrix product n.matrix * m.matrix, see the header comment.
Isometry compose(const Isometry& m, const Isometry& n);

}  // namespace k3glue
