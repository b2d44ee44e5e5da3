#include "k3glue/polyhedra.hpp"

#include <algorithm>
#include <map>

namespace k3glue {

namespace {

using Op = LinearConstraint::Op;

// Normalize to a primitive coefficient vector; all-zero constraints are
// resolved immediately (ge/eq hold, gt is infeasible).
enum class NormStatus { keep, drop, infeasible };

NormStatus normalize(LinearConstraint& c) {
  if (is_zero(c.coeffs)) return c.op == Op::gt ? NormStatus::infeasible : NormStatus::drop;
  c.coeffs = primitive(std::move(c.coeffs));
  return NormStatus::keep;
}

// Identical coefficient vectors collapse; on the same hyperplane a strict
// inequality dominates a weak one. Equalities are keyed separately.
void dedupe(std::vector<LinearConstraint>& cons) {
  std::map<std::pair<bool, IntVec>, size_t> seen;
  std::vector<LinearConstraint> out;
  for (LinearConstraint& c : cons) {
    std::pair<bool, IntVec> key{c.op == Op::eq, c.coeffs};
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(c));
    } else if (c.op == Op::gt) {
      out[it->second].op = Op::gt;
    }
  }
  cons = std::move(out);
}

struct ElimRecord {
  int var;
  bool pivot_eq;                         // eliminated via an equality pivot
  std::vector<LinearConstraint> bounds;  // constraints involving var at elimination time
};

Rat bound_value(const LinearConstraint& c, int var, const RatVec& x) {
  Rat s = 0;
  for (size_t u = 0; u < c.coeffs.size(); ++u)
    if (static_cast<int>(u) != var && c.coeffs[u] != 0) s += Rat(c.coeffs[u]) * x[u];
  return -s / Rat(c.coeffs[var]);
}

std::vector<IntVec> standard_basis(int dim) {
  std::vector<IntVec> basis;
  for (int i = 0; i < dim; ++i) {
    IntVec e(dim, Int(0));
    e[i] = 1;
    basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

std::optional<RatVec> find_point(const std::vector<LinearConstraint>& constraints, int dim) {
  std::vector<LinearConstraint> cons;
  cons.reserve(constraints.size());
  for (LinearConstraint c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != dim) throw Error("constraint dimension mismatch");
    switch (normalize(c)) {
      case NormStatus::infeasible: return std::nullopt;
      case NormStatus::drop: break;
      case NormStatus::keep: cons.push_back(std::move(c)); break;
    }
  }
  dedupe(cons);

  std::vector<ElimRecord> records;
  std::vector<bool> eliminated(dim, false);
  for (int step = 0; step < dim; ++step) {
    // Prefer equality pivots, otherwise the variable with the cheapest
    // inequality combination count.
    int best = -1;
    bool best_eq = false;
    long best_cost = 0;
    for (int v = 0; v < dim; ++v) {
      if (eliminated[v]) continue;
      long pos = 0, neg = 0;
      bool has_eq = false;
      for (const LinearConstraint& c : cons) {
        if (c.coeffs[v] == 0) continue;
        if (c.op == Op::eq) has_eq = true;
        else if (c.coeffs[v] > 0) ++pos;
        else ++neg;
      }
      long cost = pos * neg;
      if (best < 0 || (has_eq && !best_eq) || (has_eq == best_eq && cost < best_cost)) {
        best = v;
        best_eq = has_eq;
        best_cost = cost;
      }
    }
    const int v = best;
    eliminated[v] = true;

    ElimRecord rec;
    rec.var = v;
    rec.pivot_eq = best_eq;
    std::vector<LinearConstraint> rest;

    if (best_eq) {
      size_t pivot_index = cons.size();
      for (size_t i = 0; i < cons.size(); ++i)
        if (cons[i].op == Op::eq && cons[i].coeffs[v] != 0) {
          pivot_index = i;
          break;
        }
      LinearConstraint pivot = cons[pivot_index];
      rec.bounds.push_back(pivot);
      const Int pv = pivot.coeffs[v];
      for (size_t i = 0; i < cons.size(); ++i) {
        if (i == pivot_index) continue;
        LinearConstraint& c = cons[i];
        if (c.coeffs[v] == 0) {
          rest.push_back(std::move(c));
          continue;
        }
        // |pv| c - sign(pv) c_v pivot cancels the v coefficient, keeps c's op
        Int a = abs(pv);
        Int b = (pv > 0 ? c.coeffs[v] : -c.coeffs[v]);
        LinearConstraint nc;
        nc.op = c.op;
        nc.coeffs.resize(dim);
        for (int u = 0; u < dim; ++u) nc.coeffs[u] = a * c.coeffs[u] - b * pivot.coeffs[u];
        switch (normalize(nc)) {
          case NormStatus::infeasible: return std::nullopt;
          case NormStatus::drop: break;
          case NormStatus::keep: rest.push_back(std::move(nc)); break;
        }
      }
    } else {
      std::vector<LinearConstraint> pos, neg;
      for (LinearConstraint& c : cons) {
        if (c.coeffs[v] == 0) {
          rest.push_back(std::move(c));
          continue;
        }
        rec.bounds.push_back(c);
        (c.coeffs[v] > 0 ? pos : neg).push_back(std::move(c));
      }
      for (const LinearConstraint& p : pos)
        for (const LinearConstraint& n : neg) {
          LinearConstraint nc;
          nc.op = (p.op == Op::gt || n.op == Op::gt) ? Op::gt : Op::ge;
          nc.coeffs.resize(dim);
          Int a = -n.coeffs[v], b = p.coeffs[v];
          for (int u = 0; u < dim; ++u) nc.coeffs[u] = a * p.coeffs[u] + b * n.coeffs[u];
          switch (normalize(nc)) {
            case NormStatus::infeasible: return std::nullopt;
            case NormStatus::drop: break;
            case NormStatus::keep: rest.push_back(std::move(nc)); break;
          }
        }
    }
    dedupe(rest);
    cons = std::move(rest);
    records.push_back(std::move(rec));
  }

  for (const LinearConstraint& c : cons)
    if (c.op == Op::gt) return std::nullopt;  // residual 0 > 0

  // Back-substitute in reverse elimination order; each record only involves
  // variables eliminated later, whose values are already fixed.
  RatVec x(dim, Rat(0));
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const ElimRecord& rec = *it;
    const int v = rec.var;
    if (rec.pivot_eq) {
      x[v] = bound_value(rec.bounds.front(), v, x);
      continue;
    }
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo = 0, hi = 0;
    for (const LinearConstraint& c : rec.bounds) {
      Rat val = bound_value(c, v, x);
      bool strict = c.op == Op::gt;
      if (c.coeffs[v] > 0) {
        if (!has_lo || val > lo || (val == lo && strict)) {
          lo = val;
          lo_strict = strict;
        }
        has_lo = true;
      } else {
        if (!has_hi || val < hi || (val == hi && strict)) {
          hi = val;
          hi_strict = strict;
        }
        has_hi = true;
      }
    }
    if (!has_lo && !has_hi) x[v] = 0;
    else if (!has_hi) x[v] = lo_strict ? lo + 1 : lo;
    else if (!has_lo) x[v] = hi_strict ? hi - 1 : hi;
    else if (lo < hi) x[v] = (lo + hi) / 2;
    else if (lo == hi && !lo_strict && !hi_strict) x[v] = lo;
    else throw Error("internal: Fourier-Motzkin back-substitution hit an empty interval");
  }
  return x;
}

ConeStructure cone_structure(const std::vector<IntVec>& inequalities, int dim) {
  const int k = static_cast<int>(inequalities.size());
  if (k > kMaxConeConstraints)
    throw ResourceError("cone has too many constraints for exact face enumeration (" +
                        std::to_string(k) + " > " + std::to_string(kMaxConeConstraints) + ")");
  for (const IntVec& a : inequalities)
    if (static_cast<int>(a.size()) != dim) throw Error("inequality dimension mismatch");

  ConeStructure cs;
  if (inequalities.empty()) {
    cs.lineality = standard_basis(dim);
    return cs;
  }
  IntMat a_full = IntMat::from_rows(inequalities, dim);
  cs.lineality = integer_kernel(a_full);
  const int lin_rank = static_cast<int>(cs.lineality.size());
  RationalRowSpan lineality_span(cs.lineality, dim);

  // Minimal proper faces have dimension lin_rank + 1; each arises as
  // { A_T x = 0 } cap cone for some tight subset T, i.e. exactly when
  // rank(A_T) = rank(A) - 1. The image A x determines a ray modulo
  // lineality, which makes deduplication exact.
  const int rank_full = dim - lin_rank;
  std::map<IntVec, IntVec> rays_by_image;
  for (unsigned subset = 0; subset < (1u << k); ++subset) {
    std::vector<IntVec> tight;
    for (int i = 0; i < k; ++i)
      if (subset & (1u << i)) tight.push_back(inequalities[i]);
    int tight_rank = tight.empty() ? 0 : rank(IntMat::from_rows(tight, dim));
    if (tight_rank != rank_full - 1) continue;
    std::vector<IntVec> kernel =
        tight.empty() ? standard_basis(dim) : integer_kernel(IntMat::from_rows(tight, dim));
    IntVec v;
    for (const IntVec& cand : kernel)
      if (!lineality_span.contains(cand)) {
        v = cand;
        break;
      }
    if (v.empty()) continue;
    IntVec image = a_full * v;
    bool nonneg = true, nonpos = true;
    for (const Int& x : image) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) continue;  // the face line leaves the cone
    if (!nonneg) {
      v = scale(-1, v);
      image = scale(-1, image);
    }
    if (is_zero(image)) continue;  // lineality direction, already covered
    rays_by_image.emplace(primitive(image), primitive(v));
  }
  for (auto& [image, ray] : rays_by_image) cs.rays.push_back(std::move(ray));
  return cs;
}

}  // namespace k3glue
