#ifndef FGT_CLAIMS_REPORT_HPP_
#define FGT_CLAIMS_REPORT_HPP_

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fgt/claims/result.hpp"

namespace fgt {

enum class ReportFormat { Json, Markdown };

inline std::string render_witness(const Witness& w) {
  std::ostringstream os;
  os << "(" << w.group << ", {";
  for (std::size_t i = 0; i < w.subgroup.size(); ++i) os << (i ? "," : "") << w.subgroup[i];
  os << "})";
  return os.str();
}

inline nlohmann::ordered_json report_json(std::vector<ClaimResult> results, bool timings = true) {
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claimId < b.claimId; });
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const auto& r : results) claims.push_back(claim_result_to_json(r, timings));
  return {{"claims", claims}};
}

inline std::string report_markdown(std::vector<ClaimResult> results) {
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claimId < b.claimId; });
  std::ostringstream os;
  os << "| claim | expectation | verdict | checked | skipped | first witness |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : results) {
    os << "| " << r.claimId << " | " << expectation_name(r.expectation) << " | ";
    os << (r.verdict == Verdict::Fail ? "**fail**" : verdict_name(r.verdict)) << " | " << r.checkedCount << " | "
       << r.skipped.size() << " | ";
    if (!r.counterexamples.empty()) os << render_witness(r.counterexamples.front());
    os << " |\n";
  }
  return os.str();
}

inline std::string emit_report(const std::vector<ClaimResult>& results, ReportFormat format, bool timings = true) {
  if (format == ReportFormat::Markdown) return report_markdown(results);
  return report_json(results, timings).dump(2) + "\n";
}

}  // namespace fgt

#endif  // FGT_CLAIMS_REPORT_HPP_
