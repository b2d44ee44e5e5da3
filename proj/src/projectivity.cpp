#include "k3glue/projectivity.hpp"

#include <algorithm>

namespace k3glue {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::trivial_only: return "TrivialOnly";
    case Classification::fiber_ray_only: return "FiberRayOnly";
    case Classification::big_pair_exists: return "BigPairExists";
    case Classification::undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(KodairaBound k) {
  switch (k) {
    case KodairaBound::zero: return "0";
    case KodairaBound::one: return "1";
    case KodairaBound::unbounded: return "unbounded";
  }
  return "?";
}

const char* to_string(AlgdimEvidence::Value v) {
  switch (v) {
    case AlgdimEvidence::Value::zero: return "0";
    case AlgdimEvidence::Value::one: return "1";
    case AlgdimEvidence::Value::inconclusive: return "inconclusive";
  }
  return "?";
}

CompatiblePairLattice compatible_pairs(const GluingDescriptor& g) {
  CompatiblePairLattice cp;
  cp.n1 = g.x1.picard_rank();
  cp.n2 = g.x2.picard_rank();
  cp.basis = integer_kernel(difference_map(g));
  return cp;
}

std::vector<EffectivityInequality> effectivity_cone(const ComponentDescriptor& c) {
  std::vector<EffectivityInequality> ineqs;
  for (int j = 0; j < c.ambient.picard_rank; ++j) {
    IntVec coeffs(c.picard_rank(), Int(0));
    coeffs[j] = 1;
    ineqs.push_back({"ambient coordinate " + std::to_string(j + 1) + " of " + c.label +
                         " nonnegative (pushforward of an effective divisor is effective)",
                     std::move(coeffs)});
  }
  return ineqs;
}

namespace {

// Everything classify needs, in kernel coordinates t: the pair point is
// x = K t, its restriction to S is P t.
struct ClassifyContext {
  const GluingDescriptor& g;
  CompatiblePairLattice cp;
  IntMat kernel;      // (n1 + n2) x r, columns = basis pairs
  IntMat restrict_s;  // s_rank x r
  std::vector<IntVec> amb_rows;  // ambient coordinate functionals on t
  int r = 0;

  IntVec pair_point(const IntVec& t) const { return kernel * t; }
  DivisorClass restriction(const IntVec& t) const {
    return DivisorClass(g.s_lattice, restrict_s * t);
  }
};

ClassifyContext make_context(const GluingDescriptor& g) {
  ClassifyContext ctx{g, compatible_pairs(g), {}, {}, {}, 0};
  ctx.r = ctx.cp.rank();
  const int n = ctx.cp.n1 + ctx.cp.n2;
  ctx.kernel = IntMat(n, ctx.r);
  for (int j = 0; j < ctx.r; ++j) ctx.kernel.set_col(j, ctx.cp.basis[j]);
  IntMat r1 = restriction_matrix(g.x1);
  IntMat top(ctx.cp.n1, ctx.r);
  for (int i = 0; i < ctx.cp.n1; ++i)
    for (int j = 0; j < ctx.r; ++j) top.at(i, j) = ctx.kernel.at(i, j);
  ctx.restrict_s = r1 * top;
  for (int i = 0; i < g.x1.ambient.picard_rank; ++i) ctx.amb_rows.push_back(ctx.kernel.row(i));
  for (int i = 0; i < g.x2.ambient.picard_rank; ++i)
    ctx.amb_rows.push_back(ctx.kernel.row(ctx.cp.n1 + i));
  return ctx;
}

// Necessary effectivity condition on one side of an integral pair point.
bool side_effectivity_ok(const ComponentDescriptor& c, const IntVec& coords) {
  bool ambient_zero = true;
  for (int j = 0; j < c.ambient.picard_rank; ++j) {
    if (coords[j] < 0) return false;
    if (coords[j] != 0) ambient_zero = false;
  }
  if (!ambient_zero) return true;
  // zero pushforward: must be a nonnegative exceptional combination
  for (int j = c.ambient.picard_rank; j < c.picard_rank(); ++j)
    if (coords[j] < 0) return false;
  return true;
}

bool pair_effectivity_ok(const ClassifyContext& ctx, const IntVec& pair_coords) {
  IntVec x1(pair_coords.begin(), pair_coords.begin() + ctx.cp.n1);
  IntVec x2(pair_coords.begin() + ctx.cp.n1, pair_coords.end());
  return side_effectivity_ok(ctx.g.x1, x1) && side_effectivity_ok(ctx.g.x2, x2);
}

PairClass make_pair_class(const ClassifyContext& ctx, const IntVec& t) {
  IntVec x = ctx.pair_point(t);
  PairClass pc;
  pc.x1.assign(x.begin(), x.begin() + ctx.cp.n1);
  pc.x2.assign(x.begin() + ctx.cp.n1, x.end());
  pc.restriction = ctx.restriction(t);
  return pc;
}

// Generators of the solution cone in t-coordinates together with their
// restriction images.
struct Generators {
  std::vector<IntVec> ray_t, ray_img;
  std::vector<IntVec> lin_t, lin_img;
};

Generators cone_generators(const ClassifyContext& ctx) {
  ConeStructure cs = cone_structure(ctx.amb_rows, ctx.r);
  Generators gen;
  for (const IntVec& t : cs.rays) {
    gen.ray_t.push_back(t);
    gen.ray_img.push_back(ctx.restrict_s * t);
  }
  for (const IntVec& t : cs.lineality) {
    gen.lin_t.push_back(t);
    gen.lin_img.push_back(ctx.restrict_s * t);
  }
  return gen;
}

Int gram_product(const ClassifyContext& ctx, const IntVec& a, const IntVec& b) {
  return dot(a, ctx.g.s_lattice->gram() * b);
}

// Search for s x + t y with positive restriction square, where s ranges over
// the allowed sign set of x and likewise for y. Signs: rays allow s >= 0,
// lineality allows any sign. Returns the integer coefficients when the
// binary form q(s,t) = qxx s^2 + 2 qxy s t + qyy t^2 takes a positive value
// on the allowed quadrant(s).
struct ComboWitness {
  Int s, t;
};

std::optional<ComboWitness> positive_combo(const Int& qxx, const Int& qxy, const Int& qyy,
                                           bool x_free_sign, bool y_free_sign) {
  if (qxx > 0) return ComboWitness{1, 0};
  if (qyy > 0) return ComboWitness{0, 1};
  // Effective cross term after exploiting the sign freedom.
  Int cross = qxy;
  Int sx = 1, sy = 1;
  if (cross < 0) {
    if (x_free_sign) {
      sx = -1;
      cross = -cross;
    } else if (y_free_sign) {
      sy = -1;
      cross = -cross;
    }
  }
  if (cross <= 0) return std::nullopt;
  if (qxx == 0 && qyy == 0) return ComboWitness{sx, sy};
  if (qxx == 0) return ComboWitness{sx * (abs(qyy) + 1), sy};
  if (qyy == 0) return ComboWitness{sx, sy * (abs(qxx) + 1)};
  // qxx, qyy < 0: positive value exists iff qxy^2 > qxx qyy, attained at
  // (s, t) = (cross, -qxx) where q = (-qxx)(cross^2 - qxx qyy) > 0.
  if (cross * cross > qxx * qyy) return ComboWitness{sx * cross, sy * -qxx};
  return std::nullopt;
}

std::optional<IntVec> find_big_combination(const ClassifyContext& ctx, const Generators& gen) {
  struct Gen {
    const IntVec* t;
    const IntVec* img;
    bool free_sign;
  };
  std::vector<Gen> gens;
  for (size_t i = 0; i < gen.ray_t.size(); ++i)
    gens.push_back({&gen.ray_t[i], &gen.ray_img[i], false});
  for (size_t i = 0; i < gen.lin_t.size(); ++i)
    gens.push_back({&gen.lin_t[i], &gen.lin_img[i], true});
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i; j < gens.size(); ++j) {
      Int qxx = gram_product(ctx, *gens[i].img, *gens[i].img);
      Int qyy = gram_product(ctx, *gens[j].img, *gens[j].img);
      Int qxy = i == j ? qxx : gram_product(ctx, *gens[i].img, *gens[j].img);
      std::optional<ComboWitness> combo =
          i == j ? (qxx > 0 ? std::optional<ComboWitness>(ComboWitness{1, 0}) : std::nullopt)
                 : positive_combo(qxx, qxy, qyy, gens[i].free_sign, gens[j].free_sign);
      if (!combo) continue;
      IntVec t = add(scale(combo->s, *gens[i].t), scale(combo->t, *gens[j].t));
      IntVec pair = ctx.pair_point(t);
      if (!pair_effectivity_ok(ctx, pair)) continue;  // candidate fails the zero-ambient regime
      IntVec img = ctx.restrict_s * t;
      if (dot(img, ctx.g.s_lattice->gram() * img) <= 0)
        throw Error("internal: big-combination witness lost positivity");
      return t;
    }
  }
  return std::nullopt;
}

// Does the effectivity-refined solution set contain a nonzero pair? The
// necessary condition splits into polyhedral regimes per side: some ambient
// coordinate strictly positive, or zero ambient part with nonnegative
// exceptional coordinates. Fourier-Motzkin decides each cell exactly.
std::optional<IntVec> find_nonzero_refined(const ClassifyContext& ctx) {
  const auto& g = ctx.g;
  std::vector<LinearConstraint> base;
  for (const IntVec& row : ctx.amb_rows) base.push_back(ge(row));

  auto side_rows = [&](int side, int from, int to, std::vector<IntVec>& out) {
    int offset = side == 1 ? 0 : ctx.cp.n1;
    for (int i = from; i < to; ++i) out.push_back(ctx.kernel.row(offset + i));
  };

  // Regimes per side: index -1 is "zero ambient part", j >= 0 is
  // "ambient coordinate j strictly positive".
  auto regime_constraints = [&](int side, int regime, std::vector<LinearConstraint>& cons) {
    const ComponentDescriptor& c = side == 1 ? g.x1 : g.x2;
    std::vector<IntVec> amb, exc;
    side_rows(side, 0, c.ambient.picard_rank, amb);
    side_rows(side, c.ambient.picard_rank, c.picard_rank(), exc);
    if (regime >= 0) {
      cons.push_back(gt(amb[regime]));
      return;
    }
    for (IntVec& row : amb) cons.push_back(eq(std::move(row)));
    for (IntVec& row : exc) cons.push_back(ge(std::move(row)));
  };

  // Positive-ambient regimes first; the all-zero-ambient cell is the most
  // constrained and the most expensive, so it goes last.
  std::vector<int> regimes1, regimes2;
  for (int j = 0; j < g.x1.ambient.picard_rank; ++j) regimes1.push_back(j);
  regimes1.push_back(-1);
  for (int j = 0; j < g.x2.ambient.picard_rank; ++j) regimes2.push_back(j);
  regimes2.push_back(-1);
  for (int reg1 : regimes1) {
    for (int reg2 : regimes2) {
      std::vector<LinearConstraint> cons = base;
      regime_constraints(1, reg1, cons);
      regime_constraints(2, reg2, cons);
      if (reg1 >= 0 || reg2 >= 0) {
        if (std::optional<RatVec> p = find_point(cons, ctx.r)) return integralize(*p);
        continue;
      }
      // Both sides have zero ambient part: force some exceptional
      // coordinate positive.
      std::vector<IntVec> exc;
      side_rows(1, g.x1.ambient.picard_rank, g.x1.picard_rank(), exc);
      side_rows(2, g.x2.ambient.picard_rank, g.x2.picard_rank(), exc);
      for (const IntVec& row : exc) {
        std::vector<LinearConstraint> strict = cons;
        strict.push_back(gt(row));
        if (std::optional<RatVec> p = find_point(strict, ctx.r)) return integralize(*p);
      }
    }
  }
  return std::nullopt;
}

// Fibration-type witness when the solution cone restricts onto the ray
// R>=0 w: a pair of ambient-only classes both restricting to w, as small as
// the lattice allows.
std::optional<IntVec> ambient_only_pair(const ClassifyContext& ctx, const IntVec& w) {
  const GluingDescriptor& g = ctx.g;
  std::optional<IntVec> amb1 = solve_integral(g.x1.ambient.restriction_to_s, w);
  std::optional<IntVec> amb2 =
      solve_integral(g.twist.matrix * g.x2.ambient.restriction_to_s, w);
  if (!amb1 || !amb2) return std::nullopt;
  for (const Int& x : *amb1)
    if (x < 0) return std::nullopt;
  for (const Int& x : *amb2)
    if (x < 0) return std::nullopt;
  IntVec pair(ctx.cp.n1 + ctx.cp.n2, Int(0));
  for (int i = 0; i < static_cast<int>(amb1->size()); ++i) pair[i] = (*amb1)[i];
  for (int i = 0; i < static_cast<int>(amb2->size()); ++i) pair[ctx.cp.n1 + i] = (*amb2)[i];
  // Express in kernel coordinates to confirm compatibility.
  return solve_integral(ctx.kernel, pair);
}

// Witness for the zero-restriction pattern: the class of the double locus
// S1 on X1 paired with O on X2; defined whenever N_{S1/X1} = 0.
std::optional<IntVec> double_locus_pair(const ClassifyContext& ctx) {
  auto attempt = [&](bool on_x1) -> std::optional<IntVec> {
    const ComponentDescriptor& c = on_x1 ? ctx.g.x1 : ctx.g.x2;
    if (!normal_bundle_class(c).is_zero()) return std::nullopt;
    IntVec pair(ctx.cp.n1 + ctx.cp.n2, Int(0));
    int offset = on_x1 ? 0 : ctx.cp.n1;
    // ambient anticanonical degrees: (2,2,2) on P1xP1xP1, (4) on P3
    if (c.ambient.kind == AmbientKind::P1xP1xP1)
      for (int i = 0; i < 3; ++i) pair[offset + i] = 2;
    else
      pair[offset] = 4;
    for (int j = 0; j < static_cast<int>(c.centers.size()); ++j)
      pair[offset + c.ambient.picard_rank + j] = -1;
    return solve_integral(ctx.kernel, pair);
  };
  if (std::optional<IntVec> t = attempt(true)) return t;
  return attempt(false);
}

}  // namespace

ProjectivityVerdict classify(const GluingDescriptor& g) {
  ClassifyContext ctx = make_context(g);
  if (ctx.r > 64)
    throw ResourceError("compatible-pair lattice rank " + std::to_string(ctx.r) +
                        " exceeds the exact-elimination limit");
  ProjectivityVerdict verdict;
  verdict.certificate.push_back("compatible-pair lattice rank: " + std::to_string(ctx.r));
  verdict.certificate.push_back(
      "effectivity model (necessary condition): ambient pullback coordinates nonnegative; "
      "classes with zero ambient part are nonnegative exceptional combinations");
  verdict.certificate.push_back(
      "bigness model: restriction to S has positive self-intersection");

  Generators gen = cone_generators(ctx);

  if (std::optional<IntVec> big_t = find_big_combination(ctx, gen)) {
    verdict.classification = Classification::big_pair_exists;
    verdict.kodaira_bound = KodairaBound::unbounded;
    verdict.witness = make_pair_class(ctx, *big_t);
    verdict.certificate.push_back(
        "explicit compatible pair with restriction square " +
        self_intersection(verdict.witness->restriction).str() +
        " > 0; no obstruction from this method");
    return verdict;
  }

  std::optional<IntVec> nonzero_t = find_nonzero_refined(ctx);
  if (!nonzero_t) {
    verdict.classification = Classification::trivial_only;
    verdict.kodaira_bound = KodairaBound::zero;
    verdict.certificate.push_back(
        "only the trivial pair satisfies compatibility and the effectivity model");
    return verdict;
  }

  // Single-ray analysis of the restriction image.
  bool lineality_restricts_to_zero = true;
  for (const IntVec& img : gen.lin_img)
    if (!is_zero(img)) lineality_restricts_to_zero = false;
  std::vector<IntVec> nonzero_imgs;
  for (const IntVec& img : gen.ray_img)
    if (!is_zero(img)) nonzero_imgs.push_back(primitive(img));
  bool single_ray = lineality_restricts_to_zero;
  for (size_t i = 1; i < nonzero_imgs.size() && single_ray; ++i)
    if (nonzero_imgs[i] != nonzero_imgs[0]) single_ray = false;

  if (single_ray && nonzero_imgs.empty()) {
    // Every compatible pair in the cone restricts to zero on S.
    std::optional<IntVec> witness_t = double_locus_pair(ctx);
    if (!witness_t) witness_t = nonzero_t;
    PairClass w = make_pair_class(ctx, *witness_t);
    if (pair_effectivity_ok(ctx, ctx.pair_point(*witness_t)) && w.restriction.is_zero()) {
      verdict.classification = Classification::fiber_ray_only;
      verdict.kodaira_bound = KodairaBound::one;
      verdict.witness = w;
      verdict.certificate.push_back(
          "every compatible pair in the effectivity cone restricts to the trivial class on S; "
          "the witness pencil has linearly bounded section growth (geometric input)");
      return verdict;
    }
  } else if (single_ray) {
    const IntVec& w = nonzero_imgs[0];
    Int wsq = dot(w, g.s_lattice->gram() * w);
    if (wsq == 0) {
      std::optional<IntVec> witness_t = ambient_only_pair(ctx, w);
      if (!witness_t) {
        for (size_t i = 0; i < gen.ray_t.size() && !witness_t; ++i)
          if (!is_zero(gen.ray_img[i]) && pair_effectivity_ok(ctx, ctx.pair_point(gen.ray_t[i])))
            witness_t = gen.ray_t[i];
      }
      if (witness_t && pair_effectivity_ok(ctx, ctx.pair_point(*witness_t))) {
        verdict.classification = Classification::fiber_ray_only;
        verdict.kodaira_bound = KodairaBound::one;
        verdict.witness = make_pair_class(ctx, *witness_t);
        verdict.certificate.push_back(
            "all compatible effective pairs restrict into the isotropic ray through " +
            k3glue::to_string(w) + " on S");
        return verdict;
      }
    }
  }

  verdict.classification = Classification::undetermined;
  verdict.kodaira_bound = KodairaBound::unbounded;
  verdict.certificate.push_back(
      "solution cone matches neither certified pattern; no verdict at lattice level");
  return verdict;
}

NonprojectivityReport nonprojectivity_report(const GluingDescriptor&,
                                             const ProjectivityVerdict& verdict) {
  NonprojectivityReport rep;
  rep.certificate = verdict.certificate;
  switch (verdict.classification) {
    case Classification::trivial_only:
    case Classification::fiber_ray_only:
      rep.obstructed = true;
      rep.certificate.push_back(
          "no compatible pair is big under the necessary effectivity condition, so X0 admits "
          "no big line bundle with nonzero sections on both components; a projective smoothing "
          "would provide one, hence X0 and its smoothing X are non-projective (and non-Kahler; "
          "a bimeromorphic Kahler model would force projectivity here)");
      break;
    case Classification::big_pair_exists:
      rep.obstructed = false;
      rep.certificate.push_back("no obstruction found by this method");
      break;
    case Classification::undetermined:
      rep.obstructed = false;
      rep.certificate.push_back("classification undetermined; no obstruction certified");
      break;
  }
  return rep;
}

AlgdimEvidence algdim_evidence(const GluingDescriptor&, const ProjectivityVerdict& verdict) {
  AlgdimEvidence ev;
  ev.label = "evidence at lattice level consistent with the algebraic dimension of the smoothing";
  switch (verdict.classification) {
    case Classification::fiber_ray_only:
      ev.value = AlgdimEvidence::Value::one;
      ev.witness = verdict.witness;
      break;
    case Classification::trivial_only:
      ev.value = AlgdimEvidence::Value::zero;
      break;
    default:
      ev.value = AlgdimEvidence::Value::inconclusive;
      break;
  }
  return ev;
}

}  // namespace k3glue
