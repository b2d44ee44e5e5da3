// Descriptors for simple normal crossing varieties X0 = X1 cup X2 glued
// along a K3 surface S, and the d-semistability bookkeeping on Pic S.
//
// A component is a rational ambient space (P1xP1xP1 or P3) blown up along
// disjoint smooth curves lying on the anticanonical K3 member S; a component
// is described purely by the divisor classes of its blow-up centers on S.
// The gluing twist is the pullback of the gluing isomorphism on Pic S.

#pragma once

#include "k3glue/lattice.hpp"

namespace k3glue {

enum class AmbientKind { P1xP1xP1, P3 };

const char* to_string(AmbientKind k);

struct AmbientSpace {
  AmbientKind kind;
  int picard_rank;                 // 3 for P1xP1xP1, 1 for P3
  int euler_number;                // 8 for P1xP1xP1, 4 for P3
  DivisorClass anticanonical_on_s; // restriction of -K_ambient to S
  IntMat restriction_to_s;         // s_rank x picard_rank, ambient Picard -> Pic S
};

// P1xP1xP1 with Pic restricting to the three fiber classes; -K restricts to
// the (2,2,2) class.
AmbientSpace make_p1_cubed(const LatticePtr& s_lattice);

// P3 with hyperplane class restricting to h on S; -K restricts to 4h.
AmbientSpace make_p3(const DivisorClass& h_on_s);

struct ComponentDescriptor {
  std::string label;
  AmbientSpace ambient;
  std::vector<DivisorClass> centers;  // classes on S of the blow-up center curves

  int picard_rank() const { return ambient.picard_rank + static_cast<int>(centers.size()); }
};

ComponentDescriptor make_component(std::string label, AmbientSpace ambient,
                                   std::vector<DivisorClass> centers);

struct GluingDescriptor {
  LatticePtr s_lattice;
  ComponentDescriptor x1;
  ComponentDescriptor x2;
  Isometry twist;  // pullback along the gluing isomorphism S1 -> S2
};

GluingDescriptor make_gluing(ComponentDescriptor x1, ComponentDescriptor x2, Isometry twist);

// Matrix Pic X_i -> Pic S: the ambient block followed by one column per
// exceptional divisor, holding the class of its blow-up center. Component
// Picard coordinates are (ambient..., exceptional multiples...) with the
// class  mu^* O(ambient) + sum_j t_j E_j.
IntMat restriction_matrix(const ComponentDescriptor& c);

// N_{S/X} = (-K_ambient)|_S - sum of center classes.
DivisorClass normal_bundle_class(const ComponentDescriptor& c);

struct DSemistability {
  bool ok;
  DivisorClass obstruction;  // N1 + twist . N2; zero iff d-semistable
};

DSemistability d_semistability_check(const GluingDescriptor& g);

// The unique center class in the given slot making the gluing d-semistable.
// component is 1 or 2; slot indexes that component's center list, whose
// current entry is ignored.
DivisorClass solve_center_class(const GluingDescriptor& g, int component, int slot);

// One hypothesis of the smoothing theorem is computed exactly
// (d-semistability); the other two hold structurally for descriptors of this
// shape (S anticanonical in a rational ambient) and are recorded as
// assumptions rather than re-derived cohomology.
struct HypothesisReport {
  DSemistability d_semistable;
  bool omega_trivial = true;       // S_i in |-K_{X_i}| by descriptor construction
  bool vanishing = true;           // H^{n-1}(X,O) = 0 etc. from rationality
  std::string omega_note;
  std::string vanishing_note;
  std::string center_note;         // descriptors carry classes, not curves

  bool all_satisfied() const { return d_semistable.ok && omega_trivial && vanishing; }
};

HypothesisReport hypothesis_report(const GluingDescriptor& g);

}  // namespace k3glue
