// Scenario definitions and the verification pipeline: built-in presets for
// the worked gluing constructions, JSON scenario files, report generation
// with declared expected values, and parameter sweeps.

#pragma once

#include <json.hpp>

#include <map>
#include <set>

#include "k3glue/cones.hpp"
#include "k3glue/projectivity.hpp"

namespace k3glue {

using Json = nlohmann::ordered_json;

// Integers are serialized as JSON numbers when they fit in int64 and as
// decimal strings beyond that; comparisons go through Int either way.
Json json_int(const Int& x);
Int int_from_json(const Json& j);
bool json_int_equal(const Json& a, const Json& b);

struct Expectation {
  std::string name;   // which computed field this pins
  std::string stage;  // hypotheses | invariants | ample | projectivity
  Json expected;
};

// A certificate the scenario asks for.
struct CertificateRequest {
  enum class Kind { wehler_ample, wehler_free, oguiso_ample, oguiso_free_big_center };
  Kind kind;
  std::string target;      // label for the report
  DivisorClass cls;        // for the wehler kinds
  Int a = 0, k = 0, z_bound = 0;  // for the oguiso kinds
};

struct Scenario {
  std::string name;
  std::map<std::string, Int> parameters;
  GluingDescriptor gluing;
  int solve_component = 0;  // when > 0, re-solve this center slot as a check
  int solve_slot = -1;
  std::vector<CertificateRequest> certificates;
  std::vector<Expectation> expectations;
  std::set<std::string> default_checks;                // empty means all
  std::map<std::string, std::string> formula_notes;    // column -> closed form, for sweeps
};

// Replace a blow-up center class in a loaded scenario (the CLI perturbation
// hook); declared expectations are kept, so a perturbed run fails them.
void override_center(Scenario& sc, int component, int slot, const IntVec& coords);

extern const std::vector<std::string> kPresetNames;

// Load a preset ("main", "arbitrary_b2", "double_blowup", "oguiso",
// "quartic_rho3", "identity_control") or a JSON scenario file; parameters
// must be fully bound. Throws InputError on unknown presets, unbound or
// out-of-range parameters, and rank mismatches.
Scenario load_scenario(const std::string& preset_or_path,
                       const std::map<std::string, Int>& parameters);

// The pipeline stages; defaults to all of them.
std::set<std::string> all_checks();
std::set<std::string> parse_checks(const std::string& csv);

struct Report {
  Json doc;          // canonical JSON document (fixed field order)
  bool all_expectations_met = true;

  std::string to_json_text() const { return doc.dump(2); }
  std::string to_text(bool color = false) const;
};

// Render an already-serialized report document.
std::string report_text_from_json(const Json& doc, bool color = false);

Report run(const Scenario& scenario, const std::set<std::string>& checks = all_checks());

struct SweepResult {
  Json doc;  // { "preset", "items": [reports], "summary": rows }
  bool all_expectations_met = true;
  std::vector<std::string> errors;  // per-item errors, collected

  std::string summary_text(bool color = false) const;
};

// One report per value of the swept parameter; other parameters fixed.
SweepResult sweep(const std::string& preset, const std::string& param, const Int& from,
                  const Int& to, const std::map<std::string, Int>& fixed,
                  const std::set<std::string>& checks = all_checks());

}  // namespace k3glue
