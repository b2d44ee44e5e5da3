#include "k3glue/lattice.hpp"

namespace k3glue {

Lattice::Lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels)
    : name_(std::move(name)), gram_(std::move(gram)), basis_labels_(std::move(basis_labels)) {
  if (gram_.rows() < 1) throw InputError("lattice rank must be at least 1");
  if (gram_.rows() != gram_.cols())
    throw InputError("gram matrix must be square");
  if (!gram_.is_symmetric())
    throw InputError("gram matrix of lattice '" + name_ + "' is not symmetric");
  if (basis_labels_.empty()) {
    for (int i = 0; i < gram_.rows(); ++i) basis_labels_.push_back("b" + std::to_string(i + 1));
  }
  if (static_cast<int>(basis_labels_.size()) != gram_.rows())
    throw InputError("basis label count does not match lattice rank");
}

LatticePtr make_lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels) {
  return std::make_shared<const Lattice>(std::move(name), std::move(gram), std::move(basis_labels));
}

DivisorClass::DivisorClass(LatticePtr lat, IntVec c) : lattice(std::move(lat)), coords(std::move(c)) {
  if (!lattice) throw InputError("divisor class needs a lattice");
  if (static_cast<int>(coords.size()) != lattice->rank())
    throw InputError("divisor class coordinate count does not match lattice rank");
}

void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* what) {
  if (!a || !b || !a->same_as(*b))
    throw LatticeMismatchError(std::string(what) + ": classes live in different lattices ('" +
                               (a ? a->name() : "null") + "' vs '" + (b ? b->name() : "null") +
                               "')");
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a.lattice, b.lattice, "class sum");
  return DivisorClass(a.lattice, add(a.coords, b.coords));
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a.lattice, b.lattice, "class difference");
  return DivisorClass(a.lattice, sub(a.coords, b.coords));
}

DivisorClass operator-(const DivisorClass& a) {
  return DivisorClass(a.lattice, scale(-1, a.coords));
}

DivisorClass operator*(const Int& c, const DivisorClass& a) {
  return DivisorClass(a.lattice, scale(c, a.coords));
}

Isometry::Isometry(LatticePtr lat, IntMat m) : lattice(std::move(lat)), matrix(std::move(m)) {
  if (!lattice) throw InputError("isometry needs a lattice");
  if (matrix.rows() != lattice->rank() || matrix.cols() != lattice->rank())
    throw InputError("isometry matrix dimensions do not match lattice rank");
  const IntMat& g = lattice->gram();
  if (matrix.transpose() * g * matrix != g)
    throw InputError("matrix does not preserve the gram form of '" + lattice->name() + "'");
  Int det = determinant(matrix);
  if (det != 1 && det != -1) throw InputError("isometry matrix has |det| != 1");
}

Isometry Isometry::power(const Int& a) const {
  if (a == 0) return identity(lattice);
  IntMat base = a > 0 ? matrix : inverse_unimodular(matrix);
  Int n = abs(a);
  if (n > 1000000) throw ResourceError("isometry power exponent too large");
  return Isometry(lattice, base.pow(n.convert_to<unsigned long>()));
}

Int pairing(const DivisorClass& d, const DivisorClass& e) {
  require_same_lattice(d.lattice, e.lattice, "pairing");
  return dot(d.coords, d.lattice->gram() * e.coords);
}

Int self_intersection(const DivisorClass& d) { return pairing(d, d); }

DivisorClass apply_isometry(const Isometry& m, const DivisorClass& d) {
  require_same_lattice(m.lattice, d.lattice, "apply_isometry");
  return DivisorClass(d.lattice, m.matrix * d.coords);
}

Isometry compose(const Isometry& m, const Isometry& n) {
  require_same_lattice(m.lattice, n.lattice, "compose");
  return Isometry(m.lattice, n.matrix * m.matrix);
}

}  // namespace k3glue
