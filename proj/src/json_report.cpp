#include "racah/json_report.hpp"

#include <json.hpp>

namespace racah {

std::string render_json_report(uint32_t n, const std::string& mode, const std::string& suite,
                               const std::string& params, std::optional<uint64_t> seed,
                               const std::vector<RelationReport>& reports) {
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["mode"] = mode;
  doc["suite"] = suite;
  doc["params"] = params;
  if (seed)
    doc["seed"] = *seed;
  else
    doc["seed"] = nullptr;
  doc["checks"] = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const RelationReport& r : reports) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["indices"] = r.indices;
    c["status"] = to_string(r.status);
    c["residual_terms"] = r.residual_terms;
    c["residual_preview"] = r.residual_preview;
    c["millis"] = 0;
    doc["checks"].push_back(std::move(c));
    if (r.status == CheckStatus::Pass) ++passed;
  }
  doc["summary"] = {{"total", reports.size()},
                    {"passed", passed},
                    {"failed", reports.size() - passed}};
  return doc.dump(2) + "\n";
}

}  // namespace racah
