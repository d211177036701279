#include "foulkes/report.hpp"

namespace foulkes {

Json Report::to_json() const {
  Json j;
  j["claim"] = claim;
  j["params"] = params;
  j["status"] = verified() ? "verified" : "mismatch";
  Json details = Json::array();
  for (const auto& e : entries) {
    Json d;
    d["status"] = e.status;
    d["what"] = e.what;
    if (!e.details.empty()) d["details"] = e.details;
    details.push_back(std::move(d));
  }
  j["details"] = std::move(details);
  return j;
}

Report merge_reports(const std::string& claim, Json params,
                     const std::vector<Report>& instances) {
  Report out;
  out.claim = claim;
  out.params = std::move(params);
  for (const Report& r : instances) {
    Json d;
    d["params"] = r.params;
    d["status"] = r.verified() ? "verified" : "mismatch";
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      Json je;
      je["status"] = e.status;
      je["what"] = e.what;
      if (!e.details.empty()) je["details"] = e.details;
      entries.push_back(std::move(je));
    }
    d["entries"] = std::move(entries);
    out.add(r.verified() ? "verified" : "mismatch", r.claim, std::move(d));
  }
  return out;
}

}  // namespace foulkes
