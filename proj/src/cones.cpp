#include "k3glue/cones.hpp"

#include <algorithm>
#include <array>

namespace k3glue {

bool evaluate_check(CheckKind kind, const Int& value) {
  switch (kind) {
    case CheckKind::positive: return value > 0;
    case CheckKind::nonnegative: return value >= 0;
    case CheckKind::zero: return value == 0;
  }
  return false;
}

const char* to_string(CertMethod m) {
  switch (m) {
    case CertMethod::wehler_positive_cone: return "wehler_positive_cone";
    case CertMethod::oguiso_inequalities: return "oguiso_inequalities";
    case CertMethod::free_sum_decomposition: return "free_sum_decomposition";
  }
  return "?";
}

const char* to_string(FreeRule r) {
  switch (r) {
    case FreeRule::no_p1_on_surface: return "no_p1_on_surface";
    case FreeRule::ample_multiple_plus_free_fiber: return "ample_multiple_plus_free_fiber";
    case FreeRule::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

CertCheck make_check(std::string description, Int value, CheckKind kind) {
  CertCheck c{std::move(description), std::move(value), kind, false};
  c.satisfied = evaluate_check(c.kind, c.value);
  return c;
}

bool all_satisfied(const std::vector<CertCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CertCheck& c) { return c.satisfied; });
}

}  // namespace

bool AmpleCertificate::consistent() const {
  for (const CertCheck& c : checks)
    if (c.satisfied != evaluate_check(c.kind, c.value)) return false;
  return positive == all_satisfied(checks);
}

bool AmpleCertificate::operator==(const AmpleCertificate& o) const {
  if (!(cls == o.cls) || method != o.method || positive != o.positive ||
      checks.size() != o.checks.size())
    return false;
  for (size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].description != o.checks[i].description || checks[i].value != o.checks[i].value ||
        checks[i].kind != o.checks[i].kind || checks[i].satisfied != o.checks[i].satisfied)
      return false;
  }
  return true;
}

bool FreeCertificate::consistent() const {
  for (const CertCheck& c : checks)
    if (c.satisfied != evaluate_check(c.kind, c.value)) return false;
  if (ample_subcert && !ample_subcert->consistent()) return false;
  return true;
}

AmpleCertificate wehler_is_ample(const WehlerModel& model, const DivisorClass& d) {
  require_same_lattice(model.lattice(), d.lattice, "wehler_is_ample");
  AmpleCertificate cert;
  cert.cls = d;
  cert.method = CertMethod::wehler_positive_cone;
  cert.checks.push_back(make_check("D^2", self_intersection(d), CheckKind::positive));
  cert.checks.push_back(
      make_check("D.H", pairing(d, model.reference_ample()), CheckKind::positive));
  cert.positive = all_satisfied(cert.checks);
  return cert;
}

MinusTwoCertificate wehler_no_minus_two_certificate(const WehlerModel& model, int bound) {
  if (bound < 0) throw InputError("enumeration bound must be nonnegative");
  const IntMat& g = model.lattice()->gram();
  MinusTwoCertificate cert;
  cert.bound = bound;
  // D^2 = sum_i g_ii a_i^2 + 2 sum_{i<j} g_ij a_i a_j, so D^2 = 0 mod 4 for
  // every D as soon as the diagonal is 0 mod 4 and the off-diagonal is even.
  cert.mod4_diagonal_ok = true;
  cert.mod4_offdiag_even = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j && g.at(i, i) % 4 != 0) cert.mod4_diagonal_ok = false;
      if (i != j && g.at(i, j) % 2 != 0) cert.mod4_offdiag_even = false;
    }
  for (Int a1 = -bound; a1 <= bound; ++a1)
    for (Int a2 = -bound; a2 <= bound; ++a2)
      for (Int a3 = -bound; a3 <= bound; ++a3) {
        ++cert.classes_searched;
        // 4 (a1 a2 + a1 a3 + a2 a3) on this gram matrix
        Int sq = self_intersection(DivisorClass(model.lattice(), IntVec{a1, a2, a3}));
        if (sq == -2) ++cert.classes_found;
      }
  cert.certified = cert.mod4_diagonal_ok && cert.mod4_offdiag_even && cert.classes_found == 0;
  return cert;
}

std::vector<DivisorClass> oguiso_minus_two_classes(const OguisoModel& model, const Int& z_bound) {
  if (z_bound < 0) throw InputError("z_bound must be nonnegative");
  std::vector<std::array<Int, 3>> triples;
  for (Int z = -z_bound; z <= z_bound; ++z) {
    Int n = 10 * z * z - 1;
    if (n < 0) {
      // z = 0: x y = -1 with y >= 0 leaves only (x, y) = (-1, 1).
      triples.push_back({Int(-1), Int(1), z});
      continue;
    }
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d != 0) continue;
      Int q = n / d;
      triples.push_back({d, q, z});   // (x, y) = (d, n/d)
      if (q != d) triples.push_back({q, d, z});
    }
  }
  std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  std::vector<DivisorClass> classes;
  classes.reserve(triples.size());
  for (const auto& t : triples)
    classes.emplace_back(model.lattice(), IntVec{t[0], t[1], t[2]});
  return classes;
}

AmpleCertificate oguiso_ample_certificate(const OguisoModel& model, const Int& a, const Int& k,
                                          const Int& z_bound) {
  if (a < 1) throw InputError("oguiso_ample_certificate requires a >= 1");
  if (k < 1) throw InputError("oguiso_ample_certificate requires k >= 1");
  DivisorClass lp = model.l(a) - k * model.f();
  AmpleCertificate cert;
  cert.cls = lp;
  cert.method = CertMethod::oguiso_inequalities;
  cert.checks.push_back(
      make_check("(A) 30a^2+20a+2-k", 30 * a * a + 20 * a + 2 - k, CheckKind::positive));
  cert.checks.push_back(make_check("(C) 45a^2+4-3k", 45 * a * a + 4 - 3 * k, CheckKind::positive));
  cert.checks.push_back(make_check("(D) 4(90a^2-15a+4)-27k",
                                   4 * (90 * a * a - 15 * a + 4) - 27 * k, CheckKind::positive));
  Int lp_sq = self_intersection(lp);
  if (lp_sq != 4 * (45 * a * a + 4 - 3 * k))
    throw Error("internal: l'^2 disagrees with the closed form 4(45a^2+4-3k)");
  cert.checks.push_back(make_check("l'^2 = 4(45a^2+4-3k)", lp_sq, CheckKind::positive));
  // Independent bounded brute force over the (-2)-class list.
  std::vector<DivisorClass> minus_two = oguiso_minus_two_classes(model, z_bound);
  Int min_pairing;
  bool first = true;
  for (const DivisorClass& d : minus_two) {
    Int p = pairing(lp, d);
    if (first || p < min_pairing) {
      min_pairing = p;
      first = false;
    }
  }
  cert.checks.push_back(make_check(
      "min l'.d over " + std::to_string(minus_two.size()) + " (-2)-classes, |z| <= " +
          z_bound.str(),
      first ? Int(1) : min_pairing, CheckKind::positive));
  cert.positive = all_satisfied(cert.checks);
  return cert;
}

K3CertContext wehler_context(const WehlerModel& model, int minus_two_bound) {
  K3CertContext ctx;
  ctx.lattice = model.lattice();
  ctx.no_minus_two = wehler_no_minus_two_certificate(model, minus_two_bound);
  ctx.ample_test = [model](const DivisorClass& d) { return wehler_is_ample(model, d); };
  for (int i = 1; i <= 3; ++i) ctx.free_fiber_classes.push_back(model.fiber_class(i));
  return ctx;
}

K3CertContext oguiso_context(const OguisoModel& model) {
  K3CertContext ctx;
  ctx.lattice = model.lattice();
  ctx.free_fiber_classes.push_back(model.f());
  return ctx;
}

FreeCertificate free_system_certificate(const K3CertContext& ctx, const DivisorClass& d,
                                        const std::optional<FreeDecomposition>& dec) {
  require_same_lattice(ctx.lattice, d.lattice, "free_system_certificate");
  FreeCertificate cert;
  cert.cls = d;

  if (ctx.no_minus_two && ctx.no_minus_two->certified && ctx.ample_test) {
    AmpleCertificate ample = ctx.ample_test(d);
    if (ample.positive) {
      cert.rule = FreeRule::no_p1_on_surface;
      cert.free = true;
      cert.ample_subcert = ample;
      cert.note = "ample on a K3 without (-2)-curves, hence free";
      return cert;
    }
  }

  if (dec) {
    const FreeDecomposition& dc = *dec;
    cert.checks.push_back(make_check("multiple m - 2", dc.multiple - 2, CheckKind::nonnegative));
    cert.checks.push_back(make_check("fiber multiple n", dc.fiber_multiple, CheckKind::nonnegative));
    DivisorClass recomposed = dc.multiple * dc.ample_part + dc.fiber_multiple * dc.fiber_class;
    bool matches = recomposed == d;
    cert.checks.push_back(
        make_check("D - (m A + n F)", matches ? Int(0) : Int(1), CheckKind::zero));
    bool cert_matches = dc.ample_cert.cls == dc.ample_part && dc.ample_cert.positive;
    cert.checks.push_back(
        make_check("A certified ample", cert_matches ? Int(1) : Int(0), CheckKind::positive));
    bool fiber_ok = false;
    for (const DivisorClass& f : ctx.free_fiber_classes)
      if (f == dc.fiber_class) fiber_ok = true;
    cert.checks.push_back(
        make_check("F registered free fiber class", fiber_ok ? Int(1) : Int(0), CheckKind::positive));
    if (all_satisfied(cert.checks)) {
      cert.rule = FreeRule::ample_multiple_plus_free_fiber;
      cert.free = true;
      cert.ample_subcert = dc.ample_cert;
      cert.note = "|mA| free for m >= 2 on a K3, plus a free fiber pencil";
      return cert;
    }
  }

  cert.rule = FreeRule::undetermined;
  cert.free = false;
  cert.note = "no applicable freeness rule; this does not refute freeness";
  return cert;
}

}  // namespace k3glue
