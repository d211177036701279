#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace foulkes {

using Json = nlohmann::ordered_json;

// One checked instance inside a verification report. "verified" and
// "mismatch" decide the overall outcome; "info" records comparisons
// that are reported but not gating; "skipped" records instances left
// out because a resource bound excluded them.
struct ReportEntry {
  std::string status;  // verified | mismatch | info | skipped
  std::string what;
  Json details = Json::object();
};

// The structured result of one verifier run. Verifiers never throw on a
// mathematical disagreement: they record it and keep sweeping.
struct Report {
  std::string claim;
  Json params = Json::object();
  std::vector<ReportEntry> entries;

  void add(std::string status, std::string what, Json details = Json::object()) {
    entries.push_back({std::move(status), std::move(what), std::move(details)});
  }

  bool verified() const {
    for (const auto& e : entries)
      if (e.status == "mismatch") return false;
    return true;
  }

  Json to_json() const;
};

// Wraps several instance reports into one sweep-level report.
Report merge_reports(const std::string& claim, Json params,
                     const std::vector<Report>& instances);

}  // namespace foulkes
