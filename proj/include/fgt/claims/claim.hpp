#ifndef FGT_CLAIMS_CLAIM_HPP_
#define FGT_CLAIMS_CLAIM_HPP_

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "fgt/claims/citations.hpp"
#include "fgt/claims/context.hpp"

namespace fgt {

struct Claim {
  std::string id;
  std::string description;
  Expectation expectation = Expectation::MustHold;
  std::vector<std::string> universe;
  std::function<void(ClaimContext&, ClaimRecorder&)> check;
};

inline std::vector<std::string> spec_names(const std::vector<GroupSpec>& specs) {
  std::vector<std::string> out;
  for (const auto& s : specs) out.push_back(to_string(s));
  return out;
}

/// Evaluates one claim. Throws BudgetExceeded when every universe member was infeasible.
inline ClaimResult evaluate_claim(const Claim& c, ClaimContext& ctx) {
  ClaimResult r;
  r.claimId = c.id;
  r.paperRef = citation(c.id);
  r.expectation = c.expectation;
  ClaimRecorder rec(r);
  const auto t0 = std::chrono::steady_clock::now();
  c.check(ctx, rec);
  r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (r.checkedCount == 0 && !r.skipped.empty()) {
    throw Error(ErrorCode::BudgetExceeded, c.id + ": no universe member fits the budget");
  }
  if (c.expectation == Expectation::ReportOnly) {
    r.verdict = Verdict::ReportOnly;
  } else if (!r.counterexamples.empty()) {
    r.verdict = Verdict::Fail;
  } else if (r.checkedCount == 0) {
    r.verdict = Verdict::Skipped;
    r.reason = "no universe member was checked";
  } else if (c.expectation == Expectation::Iff && (rec.positives() == 0 || rec.negatives() == 0)) {
    r.verdict = Verdict::Skipped;
    r.reason = std::string("VacuousSide: no instance with the equivalence ") +
               (rec.positives() == 0 ? "true" : "false");
  } else {
    r.verdict = Verdict::Pass;
  }
  return r;
}

}  // namespace fgt

#endif  // FGT_CLAIMS_CLAIM_HPP_
