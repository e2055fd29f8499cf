#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dfop {

// One verified law / criterion inside a Report. `instances` counts the cases
// actually evaluated; `covered` additionally counts cases discharged by a
// verified decomposition (0 when the check is direct). Witness strings are
// self-contained descriptions of failing instances, capped and ordered
// deterministically, each replayable through the single-instance checker of
// the module that produced it.
struct CheckItem {
  std::string check;
  bool pass = true;
  std::int64_t instances = 0;
  std::int64_t covered = 0;
  std::vector<std::string> witnesses;
  std::string note;

  void fail_with(const std::string& witness, std::size_t max_witnesses = 8) {
    pass = false;
    if (witnesses.size() < max_witnesses) witnesses.push_back(witness);
  }
};

struct Report {
  std::string command;
  int site_bound = 4;
  int arity_bound = 3;
  std::int64_t budget = 1000000;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }

  CheckItem& add(const std::string& check) {
    items.push_back(CheckItem{});
    items.back().check = check;
    return items.back();
  }

  void absorb(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
  }
};

// Text format: stable, diff-friendly, one PASS/FAIL line per check plus a
// bounds banner. Machine format: single JSON document, schema_version "1".
// Neither contains wall-clock data unless with_timing_ms >= 0.
std::string emit_text(const Report& report, long long with_timing_ms = -1);
std::string emit_json(const Report& report, long long with_timing_ms = -1);

}  // namespace dfop
