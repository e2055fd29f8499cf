#include "dfop/report.hpp"

#include <json.hpp>

namespace dfop {

std::string emit_text(const Report& report, long long with_timing_ms) {
  std::string out;
  out += "== dfop report ==\n";
  out += "command: " + report.command + "\n";
  out += "bounds: site=" + std::to_string(report.site_bound) +
         " arity=" + std::to_string(report.arity_bound) +
         " budget=" + std::to_string(report.budget) +
         " seed=" + std::to_string(report.seed) + "\n";
  out += "note: all verdicts are pass-up-to-bound, not unbounded claims\n";
  for (const auto& it : report.items) {
    out += it.pass ? "PASS " : "FAIL ";
    out += it.check + " (instances=" + std::to_string(it.instances);
    if (it.covered > 0) out += ", covered_by_decomposition=" + std::to_string(it.covered);
    out += ")";
    if (!it.note.empty()) out += " [" + it.note + "]";
    out += "\n";
    for (const auto& w : it.witnesses) out += "  witness: " + w + "\n";
  }
  out += report.pass() ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  if (with_timing_ms >= 0) out += "timing_ms: " + std::to_string(with_timing_ms) + "\n";
  return out;
}

std::string emit_json(const Report& report, long long with_timing_ms) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["command"] = report.command;
  doc["bounds"] = {{"site_bound", report.site_bound},
                   {"arity_bound", report.arity_bound},
                   {"budget", report.budget},
                   {"seed", report.seed}};
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& it : report.items) {
    nlohmann::ordered_json c;
    c["check"] = it.check;
    c["pass"] = it.pass;
    c["instances"] = it.instances;
    if (it.covered > 0) c["covered_by_decomposition"] = it.covered;
    if (!it.note.empty()) c["note"] = it.note;
    c["witnesses"] = it.witnesses;
    doc["checks"].push_back(c);
  }
  doc["pass"] = report.pass();
  if (with_timing_ms >= 0) doc["timing_ms"] = with_timing_ms;
  return doc.dump(2) + "\n";
}

}  // namespace dfop
