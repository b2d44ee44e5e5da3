// Non-projectivity and algebraic-dimension evidence for glued SNC varieties.
//
// A line bundle on X0 is a pair (L1, L2) with r1(L1) = twist . r2(L2) in
// Pic S. Effectivity enters only through the necessary condition that the
// pushforward of an effective divisor is effective: ambient pullback
// coordinates are nonnegative, and a class with zero ambient part must be a
// nonnegative combination of exceptional divisors. "Big" is modeled as: the
// pair's restriction to S has positive self-intersection. Both modeling
// choices are recorded in the verdict certificate; the verdicts TrivialOnly
// and FiberRayOnly soundly certify the absence of a big compatible pair
// under this necessary condition, while BigPairExists certifies nothing
// beyond "no obstruction found by this method".

#pragma once

#include "k3glue/invariants.hpp"
#include "k3glue/polyhedra.hpp"
#include "k3glue/snc.hpp"

namespace k3glue {

// A compatible pair in component coordinates (ambient..., exceptional...),
// with the class  mu^* O(ambient) + sum_j t_j E_j.
struct PairClass {
  IntVec x1;
  IntVec x2;
  DivisorClass restriction;  // the common value r1(x1) = twist . r2(x2)
};

struct CompatiblePairLattice {
  int n1 = 0, n2 = 0;            // Picard ranks of the two components
  std::vector<IntVec> basis;     // primitive kernel basis in Z^{n1+n2}

  int rank() const { return static_cast<int>(basis.size()); }
};

// Integral basis of the kernel of the difference map, organized as
// (L1, L2) coordinate pairs.
CompatiblePairLattice compatible_pairs(const GluingDescriptor& g);

struct EffectivityInequality {
  std::string description;
  IntVec coeffs;  // functional on the component's Picard coordinates
};

// The necessary-condition cone for effectivity on one component: all
// ambient pullback coordinates >= 0, exceptional coordinates unconstrained.
// Necessary, not sufficient.
std::vector<EffectivityInequality> effectivity_cone(const ComponentDescriptor& c);

enum class Classification { trivial_only, fiber_ray_only, big_pair_exists, undetermined };
enum class KodairaBound { zero, one, unbounded };

const char* to_string(Classification c);
const char* to_string(KodairaBound k);

struct ProjectivityVerdict {
  Classification classification = Classification::undetermined;
  KodairaBound kodaira_bound = KodairaBound::unbounded;
  std::optional<PairClass> witness;
  std::vector<std::string> certificate;  // derivation trace
};

// Intersects the compatible-pair lattice with the effectivity model and
// classifies the solution cone:
//   TrivialOnly    - only the zero pair survives;
//   FiberRayOnly   - solutions restrict into a single isotropic ray (or to
//                    zero) on S; witness is a fibration-type pair;
//   BigPairExists  - an explicit pair with positive restriction square;
//   Undetermined   - none of the certified patterns applies.
ProjectivityVerdict classify(const GluingDescriptor& g);

struct NonprojectivityReport {
  bool obstructed = false;  // true when the big-pair obstruction applies
  std::vector<std::string> certificate;
};

NonprojectivityReport nonprojectivity_report(const GluingDescriptor& g,
                                             const ProjectivityVerdict& verdict);

struct AlgdimEvidence {
  enum class Value { zero, one, inconclusive };
  Value value = Value::inconclusive;
  std::optional<PairClass> witness;
  std::string label;
};

const char* to_string(AlgdimEvidence::Value v);

// Lattice-level evidence for the algebraic dimension of the smoothing:
// 1 with the fibration witness pair when FiberRayOnly, 0 when TrivialOnly,
// inconclusive otherwise. The full statements use deformation arguments
// beyond the lattice, hence "evidence".
AlgdimEvidence algdim_evidence(const GluingDescriptor& g, const ProjectivityVerdict& verdict);

}  // namespace k3glue
