// Command-line driver: verify one scenario, sweep a parameter range, certify
// ampleness directly, or re-render a saved report.
//
// Exit codes: 0 all declared expectations met, 1 expectation failure,
// 2 input error, 3 resource/internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unistd.h>

#include "k3glue/scenario.hpp"

namespace {

using k3glue::Int;

bool use_color(bool flag_color, bool flag_no_color) {
  if (flag_no_color) return false;
  if (flag_color) return true;
  if (const char* env = std::getenv("K3GLUE_COLOR")) return std::string(env) != "0";
  return isatty(fileno(stdout));
}

std::map<std::string, Int> parse_params(const std::vector<std::string>& tokens) {
  std::map<std::string, Int> params;
  for (const std::string& t : tokens) {
    size_t pos = t.find('=');
    if (pos == std::string::npos || pos == 0)
      throw k3glue::InputError("bad --param token '" + t + "' (want name=value)");
    params[t.substr(0, pos)] = Int(t.substr(pos + 1));
  }
  return params;
}

struct RangeParam {
  std::string name;
  Int from, to;
};

// Splits "a=1..50" style tokens from fixed "c=3" ones.
std::pair<RangeParam, std::map<std::string, Int>> parse_sweep_params(
    const std::vector<std::string>& tokens) {
  std::map<std::string, Int> fixed;
  std::optional<RangeParam> range;
  for (const std::string& t : tokens) {
    size_t pos = t.find('=');
    if (pos == std::string::npos || pos == 0)
      throw k3glue::InputError("bad --param token '" + t + "'");
    std::string name = t.substr(0, pos), value = t.substr(pos + 1);
    size_t dots = value.find("..");
    if (dots == std::string::npos) {
      fixed[name] = Int(value);
      continue;
    }
    if (range) throw k3glue::InputError("sweep takes exactly one ranged parameter");
    range = RangeParam{name, Int(value.substr(0, dots)), Int(value.substr(dots + 2))};
  }
  if (!range) throw k3glue::InputError("sweep needs a ranged parameter like a=1..50");
  return {*range, fixed};
}

k3glue::IntVec parse_vec(const std::string& csv) {
  k3glue::IntVec v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Int(item));
  return v;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw k3glue::InputError("cannot write to '" + out_path + "'");
  out << text;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact-arithmetic verification of glued normal-crossing Calabi-Yau 3-fold data"};
  app.require_subcommand(1);
  app.fallthrough();
  bool flag_color = false, flag_no_color = false;
  app.add_flag("--color", flag_color, "force colored output");
  app.add_flag("--no-color", flag_no_color, "disable colored output");

  // verify
  auto* verify = app.add_subcommand("verify", "run one scenario and check its expected values");
  verify->fallthrough();
  std::string scenario_name;
  std::vector<std::string> param_tokens;
  std::string checks_csv, format = "text", out_path, override_spec;
  verify->add_option("scenario", scenario_name, "preset name or scenario file")->required();
  verify->add_option("--param", param_tokens, "parameter bindings, e.g. --param a=1 c=3");
  verify->add_option("--checks", checks_csv,
                     "comma list of hypotheses,invariants,ample,projectivity");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "write the report to a file instead of stdout");
  verify->add_option("--override-center", override_spec,
                     "perturb a blow-up center: COMPONENT:SLOT=c1,c2,... (e.g. 1:0=2,2,2)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "run a preset over a parameter range");
  sweep_cmd->fallthrough();
  std::string sweep_preset;
  std::vector<std::string> sweep_params;
  std::string sweep_checks, sweep_format = "text", sweep_out;
  sweep_cmd->add_option("preset", sweep_preset, "preset name")->required();
  sweep_cmd->add_option("--param", sweep_params, "one range a=1..50 plus fixed values")
      ->required();
  sweep_cmd->add_option("--checks", sweep_checks, "checks subset");
  sweep_cmd->add_option("--format", sweep_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  sweep_cmd->add_option("--out", sweep_out, "write output to a file");

  // certify-ample
  auto* certify = app.add_subcommand("certify-ample", "stand-alone ampleness certificate");
  certify->fallthrough();
  std::string cert_lattice;
  std::string cert_a = "1", cert_k = "1", cert_zbound = "50";
  std::string cert_class, cert_format = "text";
  certify->add_option("--lattice", cert_lattice, "wehler or oguiso")->required();
  certify->add_option("--a", cert_a, "power parameter (oguiso)");
  certify->add_option("--k", cert_k, "fiber subtraction l - kf (oguiso)");
  certify->add_option("--zbound", cert_zbound, "(-2)-class enumeration bound (oguiso)");
  certify->add_option("--class", cert_class, "comma-separated class coordinates (wehler)");
  certify->add_option("--format", cert_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // report
  auto* report_cmd = app.add_subcommand("report", "re-render a saved JSON report");
  report_cmd->fallthrough();
  std::string report_path, report_format = "text";
  report_cmd->add_option("file", report_path, "report JSON file")->required();
  report_cmd->add_option("--format", report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  bool color = use_color(flag_color, flag_no_color);

  if (verify->parsed()) {
    k3glue::Scenario sc = k3glue::load_scenario(scenario_name, parse_params(param_tokens));
    if (!override_spec.empty()) {
      size_t colon = override_spec.find(':'), eqpos = override_spec.find('=');
      if (colon == std::string::npos || eqpos == std::string::npos || eqpos < colon)
        throw k3glue::InputError("bad --override-center (want COMPONENT:SLOT=c1,c2,...)");
      int component = std::stoi(override_spec.substr(0, colon));
      int slot = std::stoi(override_spec.substr(colon + 1, eqpos - colon - 1));
      k3glue::override_center(sc, component, slot, parse_vec(override_spec.substr(eqpos + 1)));
    }
    std::set<std::string> checks = !checks_csv.empty() ? k3glue::parse_checks(checks_csv)
                                   : !sc.default_checks.empty() ? sc.default_checks
                                                                : k3glue::all_checks();
    k3glue::Report rep = k3glue::run(sc, checks);
    emit(format == "json" ? rep.to_json_text() : rep.to_text(color && out_path.empty()),
         out_path);
    return rep.all_expectations_met ? 0 : 1;
  }

  if (sweep_cmd->parsed()) {
    auto [range, fixed] = parse_sweep_params(sweep_params);
    std::set<std::string> checks;
    if (!sweep_checks.empty()) {
      checks = k3glue::parse_checks(sweep_checks);
    } else {
      k3glue::Scenario probe = k3glue::load_scenario(
          sweep_preset, [&] {
            auto p = fixed;
            p[range.name] = range.from;
            return p;
          }());
      checks = probe.default_checks.empty() ? k3glue::all_checks() : probe.default_checks;
    }
    k3glue::SweepResult result =
        k3glue::sweep(sweep_preset, range.name, range.from, range.to, fixed, checks);
    emit(sweep_format == "json" ? result.doc.dump(2)
                                : result.summary_text(color && sweep_out.empty()),
         sweep_out);
    return result.all_expectations_met ? 0 : 1;
  }

  if (certify->parsed()) {
    k3glue::AmpleCertificate cert;
    if (cert_lattice == "oguiso") {
      cert = k3glue::oguiso_ample_certificate(k3glue::OguisoModel(), Int(cert_a), Int(cert_k),
                                              Int(cert_zbound));
    } else if (cert_lattice == "wehler") {
      if (cert_class.empty())
        throw k3glue::InputError("--lattice wehler needs --class c1,c2,c3");
      k3glue::WehlerModel m;
      cert = k3glue::wehler_is_ample(
          m, k3glue::DivisorClass(m.lattice(), parse_vec(cert_class)));
    } else {
      throw k3glue::InputError("unknown lattice '" + cert_lattice + "' (want wehler or oguiso)");
    }
    k3glue::Json j;
    j["target"] = "certify-ample";
    j["method"] = k3glue::to_string(cert.method);
    j["class"] = k3glue::Json::array();
    for (const Int& x : cert.cls.coords) j["class"].push_back(k3glue::json_int(x));
    j["positive"] = cert.positive;
    j["checks"] = k3glue::Json::array();
    for (const k3glue::CertCheck& c : cert.checks)
      j["checks"].push_back(k3glue::Json{{"description", c.description},
                                         {"value", k3glue::json_int(c.value)},
                                         {"satisfied", c.satisfied}});
    if (cert_format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "ample certificate (" << k3glue::to_string(cert.method)
                << "): " << (cert.positive ? "positive" : "NOT certified") << "\n";
      for (const k3glue::CertCheck& c : cert.checks)
        std::cout << "  " << c.description << " = " << c.value.str()
                  << (c.satisfied ? "" : "  [violated]") << "\n";
    }
    return cert.positive ? 0 : 1;
  }

  if (report_cmd->parsed()) {
    std::ifstream in(report_path);
    if (!in) throw k3glue::InputError("cannot open report file '" + report_path + "'");
    k3glue::Json doc;
    try {
      in >> doc;
    } catch (const std::exception& e) {
      throw k3glue::InputError(std::string("invalid report JSON: ") + e.what());
    }
    try {
      if (report_format == "json") std::cout << doc.dump(2) << "\n";
      else std::cout << k3glue::report_text_from_json(doc, color);
    } catch (const k3glue::Json::exception& e) {
      throw k3glue::InputError(std::string("file is not a k3glue report: ") + e.what());
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const k3glue::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const k3glue::LatticeMismatchError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const k3glue::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
