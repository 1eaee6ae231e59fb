#ifndef FGT_CLAIMS_RESULT_HPP_
#define FGT_CLAIMS_RESULT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "fgt/group.hpp"

namespace fgt {

enum class Expectation { MustHold, Iff, ReportOnly };
enum class Verdict { Pass, Fail, Skipped, ReportOnly };

inline const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::MustHold: return "mustHold";
    case Expectation::Iff: return "iff";
    case Expectation::ReportOnly: return "reportOnly";
  }
  return "?";
}

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::ReportOnly: return "reportOnly";
  }
  return "?";
}

struct PaperRef {
  std::string statement;
  std::string anchor;
};

struct Witness {
  std::string group;
  std::vector<Elem> subgroup;
  std::string note;
};

struct SkipEntry {
  std::string group;
  std::string reason;
};

struct ClaimResult {
  std::string claimId;
  PaperRef paperRef;
  Expectation expectation = Expectation::MustHold;
  Verdict verdict = Verdict::Pass;
  std::string reason;
  std::size_t checkedCount = 0;
  std::vector<SkipEntry> skipped;
  std::vector<Witness> counterexamples;
  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  double elapsedMs = 0;
};

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["group"] = w.group;
  j["subgroup"] = w.subgroup;
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline nlohmann::ordered_json claim_result_to_json(const ClaimResult& r, bool timings = true) {
  nlohmann::ordered_json j;
  j["id"] = r.claimId;
  j["paperRef"] = {{"statement", r.paperRef.statement}, {"anchor", r.paperRef.anchor}};
  j["expectation"] = expectation_name(r.expectation);
  j["verdict"] = verdict_name(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["checkedCount"] = r.checkedCount;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"group", s.group}, {"reason", s.reason}});
  j["skipped"] = std::move(skipped);
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const auto& w : r.counterexamples) ces.push_back(witness_to_json(w));
  j["counterexamples"] = std::move(ces);
  j["findings"] = r.findings;
  j["elapsedMs"] = timings ? r.elapsedMs : 0.0;
  return j;
}

}  // namespace fgt

#endif  // FGT_CLAIMS_RESULT_HPP_
