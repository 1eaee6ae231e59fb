#ifndef FGT_CLAIMS_REGISTRY_HPP_
#define FGT_CLAIMS_REGISTRY_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "fgt/claims/basic_claims.hpp"
#include "fgt/claims/classification_claims.hpp"
#include "fgt/claims/family_claims.hpp"
#include "fgt/claims/inheritance_claims.hpp"

namespace fgt {

/// Every registered claim, sorted by id.
inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    using namespace claims;
    std::vector<Claim> v{
        pnc_implies_t(),           nilpotent_pnc_iff_dedekind(), solvable_pnc_supersolvable(),
        nc_iff_commutator(),       solvable_pnc_equivalences(),  normalizer_closure(),
        normalizer_probe(),        nilpotent_subgroups_dedekind(), min_prime_pnilpotent(),
        max_prime_order_normal(),  nonnilpotent_proper_solvable(), sylow_in_closure(),
        fstar_class(),             structure_bundle(),           component_lemma(),
        coprime_direct_product(),  semidirect_c3_d4(),           quotient_closure(),
        normal_subgroup_closure(), central_p_lift(),             central_p_lift_coprime(),
        nc_quotient_correspondence(), nc_direct_factor(),        gu23_remarks(),
        dihedral_maximals(),       dihedral_iff(),               dicyclic_iff(),
        power_action_formulas(),   valuation_criterion(),        sufficiency_hall(),
        min_non_pe_shapes(),       min_non_pe_proper_on(),       on_characterization(),
        maximal_pnc_dichotomy(),   simple_second_maximal(),      nonsolvable_second_maximal(),
        sn_probe(),
    };
    std::sort(v.begin(), v.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return v;
  }();
  return registry;
}

inline const Claim& find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownClaim, "unknown claim: " + id);
}

inline ClaimResult run_claim(const std::string& id, ClaimContext& ctx) { return evaluate_claim(find_claim(id), ctx); }

/// Result recorded when a claim has no feasible universe member.
inline ClaimResult budget_skipped_result(const Claim& c, const std::string& why) {
  ClaimResult r;
  r.claimId = c.id;
  r.paperRef = citation(c.id);
  r.expectation = c.expectation;
  r.verdict = Verdict::Skipped;
  r.reason = why;
  return r;
}

/// Runs the given claims on up to `parallelism` threads; results come back sorted by id.
inline std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids, ClaimContext& ctx,
                                           unsigned parallelism) {
  std::vector<const Claim*> claims;
  for (const auto& id : ids) claims.push_back(&find_claim(id));
  std::vector<ClaimResult> results(claims.size());
  std::vector<std::exception_ptr> errors(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < claims.size();) {
      try {
        results[i] = evaluate_claim(*claims[i], ctx);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded) {
          results[i] = budget_skipped_result(*claims[i], std::string("order-budget: ") + e.what());
        } else {
          errors[i] = std::current_exception();
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(claims.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) { return a.claimId < b.claimId; });
  return results;
}

inline std::vector<ClaimResult> run_all_claims(ClaimContext& ctx, unsigned parallelism) {
  std::vector<std::string> ids;
  for (const auto& c : claim_registry()) ids.push_back(c.id);
  return run_claims(ids, ctx, parallelism);
}

/// True when some asserted claim failed; report-only findings never count.
inline bool any_asserted_failure(const std::vector<ClaimResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const ClaimResult& r) {
    return r.verdict == Verdict::Fail && r.expectation != Expectation::ReportOnly;
  });
}

}  // namespace fgt

#endif  // FGT_CLAIMS_REGISTRY_HPP_
