// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Criteria with a stated time budget fail when they exceed it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <sys/wait.h>

#include "k3glue/scenario.hpp"

using namespace k3glue;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(K3GLUE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

GluingDescriptor main_gluing(const Int& a) {
  return load_scenario("main", {{"a", a}}).gluing;
}

void criterion_main_family(Checker& c) {
  WehlerModel m;
  for (Int a = 1; a <= 50; ++a) {
    Scenario sc = load_scenario("main", {{"a", a}});
    const GluingDescriptor& g = sc.gluing;
    c.require(d_semistability_check(g).ok, "a=" + a.str() + ": not d-semistable");
    InvariantReport rep = invariant_report(g);
    c.require(rep.b2_x == a + 3, "a=" + a.str() + ": b2(X) != a+3");
    c.require(rep.euler_x == -256 * a * a + 32 * a - 224, "a=" + a.str() + ": e(X) mismatch");
    IntVec want{16 * a * a - a + 4, 4 - 8 * a, 4 + 8 * a};
    c.require(g.x1.centers.back().coords == want, "a=" + a.str() + ": center class mismatch");
    int slot = static_cast<int>(g.x1.centers.size()) - 1;
    c.require(solve_center_class(g, 1, slot) == g.x1.centers.back(),
              "a=" + a.str() + ": solved center differs");
    c.require(wehler_is_ample(m, g.x1.centers.back()).positive,
              "a=" + a.str() + ": center not certified ample");
    c.require(free_system_certificate(wehler_context(m), g.x1.centers.back()).free,
              "a=" + a.str() + ": center not certified free");
  }
}

void criterion_arbitrary_b2(Checker& c) {
  for (Int a = 1; a <= 10; ++a) {
    Int limit = 8 * a * a + 6;
    Int step = (limit - 1) / 10;
    if (step < 1) step = 1;
    int sampled = 0;
    for (Int cc = 1; cc < limit; cc += step) {
      ++sampled;
      Scenario sc = load_scenario("arbitrary_b2", {{"a", a}, {"c", cc}});
      InvariantReport rep = invariant_report(sc.gluing);
      c.require(rep.b2_x == cc + 3, "a=" + a.str() + ",c=" + cc.str() + ": b2 mismatch");
      c.require(rep.euler_x == -224 - 32 * (8 * a * a - cc),
                "a=" + a.str() + ",c=" + cc.str() + ": e(X') mismatch");
      c.require(d_semistability_check(sc.gluing).ok,
                "a=" + a.str() + ",c=" + cc.str() + ": not d-semistable");
    }
    c.require(sampled >= 10, "a=" + a.str() + ": fewer than 10 sampled fiber counts");
  }
}

void criterion_wehler_automorphisms(Checker& c) {
  WehlerModel m;
  Isometry iota = iota_pullback(m);
  Isometry acc = Isometry::identity(m.lattice());
  for (int a = 0; a <= 10; ++a) {
    c.require(acc.matrix == power_closed_form(m, a).matrix,
              "closed form differs from iteration at a=" + std::to_string(a));
    acc = compose(acc, iota);
  }
  const IntMat& gram = m.lattice()->gram();
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      Isometry inv = involution_pullback(m, i, j);
      c.require((inv.matrix * inv.matrix).is_identity(), "involution does not square to id");
      c.require(inv.matrix.transpose() * gram * inv.matrix == gram,
                "involution does not preserve the gram form");
    }
  OrderGrowth og = order_and_growth(iota, 12);
  c.require(og.kind == OrderGrowth::Kind::infinite_polynomial && og.growth_degree == 2,
            "iota* growth is not polynomial of degree 2");
}

void criterion_oguiso(Checker& c) {
  // basis change from the (H, L, M) intersection data
  IntMat g_hlm(3, 3, {4, 1, 1, 1, -2, 0, 1, 0, -2});
  IntMat basis(3, 3, {1, 1, -6, -1, -1, 7, 0, 1, -3});  // columns f, e, v
  OguisoModel o;
  c.require(basis.transpose() * g_hlm * basis == o.lattice()->gram(),
            "f,e,v basis does not transport the H,L,M intersection data");
  c.require(basis * IntVec{4, 3, 1} == IntVec{1, 0, 0}, "4f+3e+v is not the hyperplane class");
  for (Int a = 1; a <= 10; ++a) {
    IntVec want{30 * a * a + 20 * a + 4, 3, 3 * a + 1};
    c.require(apply_isometry(o.translation_pullback(a), o.h()).coords == want,
              "(iota^a)*h mismatch at a=" + a.str());
  }
  for (Int a = 1; a <= 20; ++a) {
    AmpleCertificate cert = oguiso_ample_certificate(o, a, a, 50);
    c.require(cert.positive, "ample certificate failed at a=" + a.str());
    c.require(cert.consistent(), "certificate inconsistency at a=" + a.str());
  }
  for (Int a = 1; a <= 10; ++a) {
    Scenario sc = load_scenario("oguiso", {{"a", a}});
    c.require(b2_of_smoothing(sc.gluing) == a - 1, "b2(X) != a-1 at a=" + a.str());
    ProjectivityVerdict v = classify(sc.gluing);
    c.require(v.classification == Classification::trivial_only,
              "classification not TrivialOnly at a=" + a.str());
    c.require(algdim_evidence(sc.gluing, v).value == AlgdimEvidence::Value::zero,
              "algdim evidence not 0 at a=" + a.str());
  }
}

void criterion_projectivity_dichotomy(Checker& c) {
  for (Int a = 1; a <= 20; ++a) {
    ProjectivityVerdict v = classify(main_gluing(a));
    bool ok = v.classification == Classification::fiber_ray_only && v.witness.has_value();
    if (ok) {
      const IntVec& x2 = v.witness->x2;
      ok = x2.size() == 3 && x2[0] > 0 && x2[1] == 0 && x2[2] == 0;
    }
    c.require(ok, "main(" + a.str() + ") lacks a FiberRayOnly verdict with O(n,0,0) witness");
  }
  Scenario control = load_scenario("identity_control", {});
  c.require(classify(control.gluing).classification == Classification::big_pair_exists,
            "identity-twist control is not BigPairExists");
  for (Int a = 1; a <= 20; ++a) {
    Scenario sc = load_scenario("oguiso", {{"a", a}});
    c.require(classify(sc.gluing).classification == Classification::trivial_only,
              "oguiso(" + a.str() + ") is not TrivialOnly");
  }
}

void criterion_double_blowup(Checker& c) {
  WehlerModel m;
  for (Int a = 1; a <= 10; ++a) {
    Scenario sc = load_scenario("double_blowup", {{"a", a}});
    // brute-force oracle: direct gram/matrix arithmetic of the quoted terms
    DivisorClass n1 = m.cls({-12 * a * a, 4 * a, -4 * a});
    DivisorClass c2 = sc.gluing.x2.centers[0];
    DivisorClass twisted =
        apply_isometry(power_closed_form(m, a), m.cls({2, 2, 2}) - c2);
    c.require((n1 + twisted).is_zero(), "a=" + a.str() + ": quoted decomposition nonzero");
    DSemistability dss = d_semistability_check(sc.gluing);
    c.require(dss.ok && dss.obstruction.is_zero(), "a=" + a.str() + ": obstruction nonzero");
    c.require(normal_bundle_class(sc.gluing.x1) == n1,
              "a=" + a.str() + ": N1 differs from the closed form");
  }
}

void criterion_property_suites(Checker& c) {
  WehlerModel w;
  OguisoModel o;
  std::mt19937 rng(20260811);
  std::uniform_int_distribution<int> coord(-12, 12);

  // 10^4 randomized gram-preservation checks over the registered isometries
  std::vector<Isometry> isos;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) isos.push_back(involution_pullback(w, i, j));
  for (int a = -5; a <= 5; ++a) isos.push_back(power_closed_form(w, a));
  std::vector<Isometry> oisos;
  for (int a = 1; a <= 6; ++a) oisos.push_back(o.translation_pullback(a));
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Isometry& mi = isos[trial % isos.size()];
    DivisorClass d = w.cls({coord(rng), coord(rng), coord(rng)});
    DivisorClass e = w.cls({coord(rng), coord(rng), coord(rng)});
    if (pairing(apply_isometry(mi, d), apply_isometry(mi, e)) != pairing(d, e)) {
      c.require(false, "wehler isometry broke the pairing");
      return;
    }
    ++checked;
    const Isometry& mo = oisos[trial % oisos.size()];
    DivisorClass od = o.cls({coord(rng), coord(rng), coord(rng)});
    DivisorClass oe = o.cls({coord(rng), coord(rng), coord(rng)});
    if (pairing(apply_isometry(mo, od), apply_isometry(mo, oe)) != pairing(od, oe)) {
      c.require(false, "oguiso isometry broke the pairing");
      return;
    }
    ++checked;
  }
  c.require(checked == 10000, "expected 10^4 randomized gram checks");

  // mod-4 certificate against the exhaustive enumeration
  MinusTwoCertificate cert = wehler_no_minus_two_certificate(w, 10);
  c.require(cert.certified && cert.classes_found == 0,
            "(-2)-class certificate failed on the wehler lattice");

  // integral kernels annihilate exactly
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a(2 + trial % 3, 3 + trial % 4);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    for (const IntVec& v : integer_kernel(a))
      if (!is_zero(a * v)) {
        c.require(false, "kernel vector does not annihilate its matrix");
        return;
      }
  }

  // solve-then-check round trip on 10^3 randomized gluings
  std::uniform_int_distribution<int> ncenters(1, 4), twist_pow(-4, 4), comp(1, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    auto centers = [&](int n) {
      std::vector<DivisorClass> cs;
      for (int i = 0; i < n; ++i) cs.push_back(w.cls({coord(rng), coord(rng), coord(rng)}));
      return cs;
    };
    GluingDescriptor g = make_gluing(
        make_component("X1", make_p1_cubed(w.lattice()), centers(ncenters(rng))),
        make_component("X2", make_p1_cubed(w.lattice()), centers(ncenters(rng))),
        power_closed_form(w, twist_pow(rng)));
    int component = comp(rng);
    ComponentDescriptor& cd = component == 1 ? g.x1 : g.x2;
    int slot =
        std::uniform_int_distribution<int>(0, static_cast<int>(cd.centers.size()) - 1)(rng);
    cd.centers[slot] = solve_center_class(g, component, slot);
    if (!d_semistability_check(g).ok) {
      c.require(false, "solve-then-check round trip failed");
      return;
    }
  }
}

void criterion_cli_contract(Checker& c) {
  CliResult ok = run_cli("verify main --param a=1 --format json --no-color");
  c.require(ok.exit_code == 0, "verify main a=1 exited " + std::to_string(ok.exit_code));
  try {
    Json doc = Json::parse(ok.output);
    for (const char* key : {"scenario", "parameters", "hypotheses", "invariants",
                            "certificates", "projectivity", "algdim", "expectations"})
      c.require(doc.contains(key), std::string("report JSON lacks field '") + key + "'");
    for (const char* key : {"b2_x0", "b2_x", "e_x1", "e_x2", "e_x0", "e_x"})
      c.require(doc["invariants"].contains(key),
                std::string("invariants JSON lacks field '") + key + "'");
    c.require(doc["projectivity"].contains("classification") &&
                  doc["projectivity"].contains("kodaira_bound"),
              "projectivity JSON lacks classification fields");
    if (!doc["expectations"].empty()) {
      const Json& e = doc["expectations"][0];
      c.require(e.contains("name") && e.contains("expected") && e.contains("actual") &&
                    e.contains("pass"),
                "expectation entries lack the schema fields");
    }
  } catch (const std::exception& e) {
    c.require(false, std::string("verify main output is not JSON: ") + e.what());
  }

  CliResult perturbed =
      run_cli("verify main --param a=1 --override-center 1:1=2,2,2 --format json --no-color");
  c.require(perturbed.exit_code == 1,
            "perturbed verify exited " + std::to_string(perturbed.exit_code));
  try {
    Json doc = Json::parse(perturbed.output);
    c.require(doc["hypotheses"]["d_semistable"] == false,
              "perturbed run does not record the d-semistability failure");
    bool failed_expectation = false;
    for (const Json& e : doc["expectations"])
      if (e["name"] == "d_semistable" && !e["pass"].get<bool>()) failed_expectation = true;
    c.require(failed_expectation, "perturbed run lacks a failing d_semistable expectation");
  } catch (const std::exception& e) {
    c.require(false, std::string("perturbed output is not JSON: ") + e.what());
  }

  CliResult invalid = run_cli("verify arbitrary_b2 --param a=1 c=14 --no-color");
  c.require(invalid.exit_code == 2,
            "invalid c=14 exited " + std::to_string(invalid.exit_code) + " instead of 2");
}

struct Criterion {
  int id;
  std::string name;
  double budget_sec;  // 0 = no stated budget
  std::function<void(Checker&)> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "main family regression, a = 1..50", 5.0, criterion_main_family},
      {2, "variable fiber count regression, a = 1..10", 5.0, criterion_arbitrary_b2},
      {3, "wehler automorphism suite", 0.0, criterion_wehler_automorphisms},
      {4, "oguiso suite", 10.0, criterion_oguiso},
      {5, "projectivity dichotomy", 0.0, criterion_projectivity_dichotomy},
      {6, "double blow-up obstruction", 0.0, criterion_double_blowup},
      {7, "property suites", 0.0, criterion_property_suites},
      {8, "CLI contract", 0.0, criterion_cli_contract},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    Checker checker;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.fn(checker);
    } catch (const std::exception& e) {
      checker.require(false, std::string("exception: ") + e.what());
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_sec > 0 && sec > cr.budget_sec) {
      std::ostringstream msg;
      msg << "exceeded time budget (" << sec << "s > " << cr.budget_sec << "s)";
      checker.require(false, msg.str());
    }
    bool ok = checker.failures.empty();
    if (!ok) ++failures;
    std::printf("%s  criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", cr.id,
                cr.name.c_str(), sec);
    for (const std::string& f : checker.failures) std::printf("      %s\n", f.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
