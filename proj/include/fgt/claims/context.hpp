#ifndef FGT_CLAIMS_CONTEXT_HPP_
#define FGT_CLAIMS_CONTEXT_HPP_

#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fgt/catalog.hpp"
#include "fgt/claims/result.hpp"
#include "fgt/predicates.hpp"

namespace fgt {

/// A group with its analysis and predicate profile, computed once.
struct AnalyzedGroup {
  std::string key;
  AnalysisPtr analysis;
  PredicateProfile profile;

  const Analysis& a() const { return *analysis; }
  const Group& g() const { return analysis->g(); }
  const SubgroupLattice& lat() const { return analysis->lat(); }
};

using AnalyzedPtr = std::shared_ptr<const AnalyzedGroup>;

inline AnalyzedPtr analyze_group(const GroupPtr& gp, std::string key = {}) {
  auto out = std::make_shared<AnalyzedGroup>();
  out->key = key.empty() ? gp->label : std::move(key);
  out->analysis = analyze(gp);
  out->profile = classify_group(*out->analysis);
  return out;
}

/// Thread-safe memo keyed by canonical spec string. Failures are cached and rethrown.
class AnalysisCache {
 public:
  AnalyzedPtr get(const GroupSpec& spec) {
    return get(to_string(spec), [&] { return catalog_build(spec); });
  }

  AnalyzedPtr get(const std::string& key, const std::function<GroupPtr()>& build) {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto& s = slots_[key];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::call_once(slot->once, [&] {
      try {
        slot->value = analyze_group(build(), key);
      } catch (...) {
        slot->error = std::current_exception();
      }
    });
    if (slot->error) std::rethrow_exception(slot->error);
    return slot->value;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return slots_.size();
  }

 private:
  struct Slot {
    std::once_flag once;
    AnalyzedPtr value;
    std::exception_ptr error;
  };
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

struct ClaimContext {
  AnalysisCache& cache;
};

/// Accumulates checks for one claim and turns them into a verdict.
class ClaimRecorder {
 public:
  explicit ClaimRecorder(ClaimResult& r) : r_(r) {}

  void checked(std::size_t n = 1) { r_.checkedCount += n; }

  void fail(std::string group, std::vector<Elem> subgroup, std::string note) {
    r_.counterexamples.push_back(Witness{std::move(group), std::move(subgroup), std::move(note)});
  }

  void fail_sub(const AnalyzedGroup& ag, std::size_t i, std::string note) {
    fail(ag.key, ag.a().sub(i).elements(), std::move(note));
  }

  void skip(std::string group, std::string reason) {
    r_.skipped.push_back(SkipEntry{std::move(group), std::move(reason)});
  }

  void finding(nlohmann::ordered_json j) { r_.findings.push_back(std::move(j)); }

  /// Records which side of an equivalence an instance exercised.
  void side(bool positive) { (positive ? positives_ : negatives_)++; }

  std::size_t positives() const { return positives_; }
  std::size_t negatives() const { return negatives_; }
  bool failed() const { return !r_.counterexamples.empty(); }
  ClaimResult& result() { return r_; }

 private:
  ClaimResult& r_;
  std::size_t positives_ = 0;
  std::size_t negatives_ = 0;
};

/// Runs `body` on the analysis of each spec, turning budget failures into skips.
inline void for_each_group(ClaimContext& ctx, ClaimRecorder& rec, const std::vector<GroupSpec>& specs,
                           const std::function<void(const AnalyzedGroup&)>& body) {
  for (const auto& s : specs) {
    AnalyzedPtr ag;
    try {
      ag = ctx.cache.get(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      rec.skip(to_string(s), std::string("order-budget: ") + e.what());
      continue;
    }
    body(*ag);
  }
}

/// Catalog members of order at most `maxOrder`.
inline std::vector<GroupSpec> catalog_up_to(std::size_t maxOrder) {
  std::vector<GroupSpec> out;
  for (const auto& s : default_catalog()) {
    try {
      if (catalog_build(s)->order <= maxOrder) out.push_back(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
  }
  return out;
}

/// Index of the first member of each conjugacy class, in lattice order.
inline std::vector<std::size_t> class_representatives(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  std::vector<char> seen(lat.classCount, 0);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (seen[lat.classId[i]]) continue;
    seen[lat.classId[i]] = 1;
    out.push_back(i);
  }
  return out;
}

/// Subgroup i of an analyzed group, analyzed as a group in its own right.
inline AnalyzedPtr analyze_subgroup(const AnalyzedGroup& ag, std::size_t i) {
  const auto ind = induced_group(ag.g(), ag.a().sub(i));
  return analyze_group(ind.group, ag.key + "[" + std::to_string(i) + "]");
}

/// Subgroup i of an analyzed group, with the embedding back into the parent.
struct LocalView {
  Induced induced;
  AnalyzedPtr local;
};

inline LocalView view_subgroup(const AnalyzedGroup& ag, std::size_t i) {
  LocalView v{induced_group(ag.g(), ag.a().sub(i)), nullptr};
  v.local = analyze_group(v.induced.group, ag.key + "[" + std::to_string(i) + "]");
  return v;
}

/// Quotient by normal subgroup i, analyzed.
inline AnalyzedPtr analyze_quotient(const AnalyzedGroup& ag, std::size_t i) {
  const auto q = quotient_group(ag.analysis->group, ag.a().sub(i));
  return analyze_group(q.group, ag.key + "/N" + std::to_string(i));
}

inline bool solvable_pnc(const AnalyzedGroup& ag) { return ag.profile.solvable && ag.profile.pnc; }

inline std::size_t pi_count(std::size_t n) { return prime_divisors(n).size(); }

}  // namespace fgt

#endif  // FGT_CLAIMS_CONTEXT_HPP_
