// Exact rational polyhedral-cone tools: Fourier-Motzkin elimination with
// witness recovery for homogeneous systems, and extreme-ray/lineality
// extraction by minimal-face enumeration. No floating point; everything is
// cpp_int / cpp_rational.

#pragma once

#include <optional>

#include "k3glue/intmat.hpp"

namespace k3glue {

// Homogeneous constraint  coeffs . x  (>= | > | =)  0.
struct LinearConstraint {
  enum class Op { ge, gt, eq };
  IntVec coeffs;
  Op op = Op::ge;
};

inline LinearConstraint ge(IntVec c) { return {std::move(c), LinearConstraint::Op::ge}; }
inline LinearConstraint gt(IntVec c) { return {std::move(c), LinearConstraint::Op::gt}; }
inline LinearConstraint eq(IntVec c) { return {std::move(c), LinearConstraint::Op::eq}; }

// Feasibility of a homogeneous system by Fourier-Motzkin elimination, with a
// rational sample point recovered by back-substitution. Returns nullopt when
// infeasible. (Without strict constraints the origin is always feasible.)
std::optional<RatVec> find_point(const std::vector<LinearConstraint>& constraints, int dim);

// Structure of the cone { x : a . x >= 0 for all rows a }.
//
// lineality: basis of { x : A x = 0 };
// rays: one primitive representative per extreme ray of the pointed
// quotient, oriented into the cone. Enumerates minimal proper faces over
// subsets of the constraints, so the number of constraints is capped.
struct ConeStructure {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

ConeStructure cone_structure(const std::vector<IntVec>& inequalities, int dim);

inline constexpr int kMaxConeConstraints = 20;

}  // namespace k3glue
