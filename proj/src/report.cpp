#include <future>
#include <iomanip>
#include <sstream>

#include "k3glue/scenario.hpp"

namespace k3glue {

namespace {

const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kReset = "\033[0m";

std::string mark(bool ok, bool color) {
  if (!color) return ok ? "PASS" : "FAIL";
  return std::string(ok ? kGreen : kRed) + (ok ? "PASS" : "FAIL") + kReset;
}

std::string vec_text(const Json& arr) {
  std::string s = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + ")";
}

std::string value_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) return vec_text(v);
  return v.dump();
}

}  // namespace

std::string report_text_from_json(const Json& doc, bool color) {
  std::ostringstream out;
  out << "scenario: " << doc.value("scenario", std::string("?"));
  if (doc.contains("parameters") && !doc["parameters"].empty()) {
    out << "  [";
    bool first = true;
    for (auto& [key, value] : doc["parameters"].items()) {
      if (!first) out << ", ";
      out << key << "=" << value_text(value);
      first = false;
    }
    out << "]";
  }
  out << "\n";

  if (doc.contains("hypotheses")) {
    const Json& h = doc["hypotheses"];
    out << "hypotheses:\n";
    out << "  d-semistable: " << (h["d_semistable"].get<bool>() ? "yes" : "NO")
        << "  obstruction " << vec_text(h["obstruction"]) << "\n";
    if (h.contains("solved_center"))
      out << "  solved center class: " << vec_text(h["solved_center"])
          << (h["solved_center_matches"].get<bool>() ? " (matches descriptor)"
                                                     : " (DIFFERS from descriptor)")
          << "\n";
    out << "  omega trivial: structural assumption; vanishing: structural assumption\n";
  }
  if (doc.contains("invariants")) {
    const Json& v = doc["invariants"];
    out << "invariants:\n";
    out << "  e(X1) = " << value_text(v["e_x1"]) << ", e(X2) = " << value_text(v["e_x2"])
        << ", e(X0) = " << value_text(v["e_x0"]) << ", e(X) = " << value_text(v["e_x"]) << "\n";
    out << "  b2(X0) = " << value_text(v["b2_x0"]) << ", b2(X) = " << value_text(v["b2_x"]) << "\n";
    if (!v["difference_map_surjective"].get<bool>())
      out << "  note: " << v.value("note", std::string()) << "\n";
  }
  if (doc.contains("certificates")) {
    for (const Json& c : doc["certificates"]) {
      bool ok = c.contains("positive") ? c["positive"].get<bool>() : c["free"].get<bool>();
      out << "certificate " << c["target"].get<std::string>() << " (" << c["kind"].get<std::string>()
          << ", " << (c.contains("method") ? c["method"] : c["rule"]).get<std::string>()
          << "): " << mark(ok, color) << "\n";
      for (const Json& chk : c["checks"])
        out << "    " << chk["description"].get<std::string>() << " = "
            << value_text(chk["value"]) << (chk["satisfied"].get<bool>() ? "" : "  [violated]")
            << "\n";
    }
  }
  if (doc.contains("projectivity")) {
    const Json& p = doc["projectivity"];
    out << "projectivity: " << p["classification"].get<std::string>()
        << " (kodaira bound " << p["kodaira_bound"].get<std::string>() << ")\n";
    if (!p["witness"].is_null())
      out << "  witness pair: L1 = " << vec_text(p["witness"]["x1"]) << ", L2 = "
          << vec_text(p["witness"]["x2"]) << ", restriction "
          << vec_text(p["witness"]["restriction"]) << "\n";
    for (const Json& line : p["nonprojectivity"]["certificate"])
      out << "    " << line.get<std::string>() << "\n";
  }
  if (doc.contains("algdim")) {
    out << "algebraic dimension evidence: " << doc["algdim"]["value"].get<std::string>() << "\n";
  }
  if (doc.contains("expectations")) {
    out << "expectations:\n";
    for (const Json& e : doc["expectations"])
      out << "  " << mark(e["pass"].get<bool>(), color) << "  " << e["name"].get<std::string>()
          << ": expected " << value_text(e["expected"]) << ", got " << value_text(e["actual"])
          << "\n";
  }
  return out.str();
}

std::string Report::to_text(bool color) const { return report_text_from_json(doc, color); }

SweepResult sweep(const std::string& preset, const std::string& param, const Int& from,
                  const Int& to, const std::map<std::string, Int>& fixed,
                  const std::set<std::string>& checks) {
  SweepResult result;
  result.doc["preset"] = preset;
  result.doc["parameter"] = param;
  result.doc["items"] = Json::array();
  std::map<std::string, std::string> formula_notes;

  struct Item {
    Json json;
    bool pass;
    std::string error;  // empty when the item ran
  };
  // Items are pure and isolated; run them concurrently, emit by parameter
  // value regardless of completion order.
  std::vector<std::future<Item>> futures;
  for (Int v = from; v <= to; ++v) {
    futures.push_back(std::async(std::launch::async, [&, v]() -> Item {
      std::map<std::string, Int> params = fixed;
      params[param] = v;
      Item item;
      item.json["value"] = json_int(v);
      try {
        Scenario sc = load_scenario(preset, params);
        Report rep = run(sc, checks);
        item.json["report"] = rep.doc;
        item.json["pass"] = rep.all_expectations_met;
        item.pass = rep.all_expectations_met;
      } catch (const Error& e) {
        item.json["error"] = e.what();
        item.json["pass"] = false;
        item.pass = false;
        item.error = param + "=" + v.str() + ": " + e.what();
      }
      return item;
    }));
  }
  for (std::future<Item>& f : futures) {
    Item item = f.get();
    if (!item.pass) result.all_expectations_met = false;
    if (!item.error.empty()) result.errors.push_back(item.error);
    result.doc["items"].push_back(std::move(item.json));
  }
  if (from <= to) {
    try {
      formula_notes = load_scenario(preset, [&] {
                        auto p = fixed;
                        p[param] = from;
                        return p;
                      }()).formula_notes;
    } catch (const Error&) {
      // formulas are cosmetic; a failing first item already reported itself
    }
  }
  result.doc["formulas"] = formula_notes;
  result.doc["all_pass"] = result.all_expectations_met;
  return result;
}

std::string SweepResult::summary_text(bool color) const {
  std::ostringstream out;
  const Json& items = doc["items"];
  out << "sweep " << doc["preset"].get<std::string>() << " over "
      << doc["parameter"].get<std::string>() << " (" << items.size() << " runs)\n";
  if (doc.contains("formulas"))
    for (auto& [key, value] : doc["formulas"].items())
      out << "  closed form " << key << " = " << value.get<std::string>() << "\n";
  out << std::left << std::setw(8) << doc["parameter"].get<std::string>() << std::setw(8)
      << "d-ss" << std::setw(10) << "b2(X)" << std::setw(16) << "e(X)" << std::setw(16)
      << "class" << "result\n";
  for (const Json& item : items) {
    out << std::left << std::setw(8) << value_text(item["value"]);
    if (item.contains("error")) {
      out << "error: " << item["error"].get<std::string>() << "\n";
      continue;
    }
    const Json& rep = item["report"];
    std::string dss = rep.contains("hypotheses")
                          ? (rep["hypotheses"]["d_semistable"].get<bool>() ? "yes" : "NO")
                          : "-";
    std::string b2 = rep.contains("invariants") ? value_text(rep["invariants"]["b2_x"]) : "-";
    std::string ex = rep.contains("invariants") ? value_text(rep["invariants"]["e_x"]) : "-";
    std::string cls = rep.contains("projectivity")
                          ? rep["projectivity"]["classification"].get<std::string>()
                          : "-";
    out << std::setw(8) << dss << std::setw(10) << b2 << std::setw(16) << ex << std::setw(16)
        << cls << mark(item["pass"].get<bool>(), color) << "\n";
  }
  out << (all_expectations_met ? "all expectations met" : "EXPECTATION FAILURES") << "\n";
  return out.str();
}

}  // namespace k3glue
