#ifndef FGT_PREDICATES_HPP_
#define FGT_PREDICATES_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "fgt/structure.hpp"

namespace fgt {

/// A group with its lattice and the normalizer and normal closure of every subgroup.
struct Analysis {
  GroupPtr group;
  LatticePtr lattice;
  std::vector<std::size_t> normalizerIdx;
  std::vector<std::size_t> closureIdx;

  const Group& g() const { return *group; }
  const SubgroupLattice& lat() const { return *lattice; }
  const Subgroup& sub(std::size_t i) const { return lattice->subgroups[i]; }
  const Subgroup& normalizer_of(std::size_t i) const { return sub(normalizerIdx[i]); }
  const Subgroup& closure_of(std::size_t i) const { return sub(closureIdx[i]); }
};

using AnalysisPtr = std::shared_ptr<const Analysis>;

inline AnalysisPtr analyze(const GroupPtr& gp) {
  auto a = std::make_shared<Analysis>();
  a->group = gp;
  a->lattice = all_subgroups(gp);
  const auto& lat = *a->lattice;
  a->normalizerIdx.resize(lat.size());
  a->closureIdx.resize(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& h = lat.subgroups[i];
    if (lat.normal[i]) {
      a->normalizerIdx[i] = lat.whole_index();
      a->closureIdx[i] = i;
      continue;
    }
    a->normalizerIdx[i] = lat.index_of(normalizer(*gp, h));
    a->closureIdx[i] = lat.index_of(normal_closure(*gp, h));
  }
  return a;
}

// Subgroup predicates on a bare group.

/// H^G N_G(H) = G.
inline bool is_nc_subgroup(const Group& g, const Subgroup& h) {
  return subgroup_product(g, normal_closure(g, h), normalizer(g, h)).equalsG;
}

/// N_G(H) ∩ H^G = H.
inline bool is_ne_subgroup(const Group& g, const Subgroup& h) {
  return meet(g, normalizer(g, h), normal_closure(g, h)) == h;
}

/// Distinct conjugates of h, in order of first conjugator.
inline std::vector<Subgroup> conjugates(const Group& g, const Subgroup& h) {
  std::vector<Subgroup> out;
  std::unordered_set<Bits, BitsHash> seen;
  for (std::size_t x = 0; x < g.order; ++x) {
    Subgroup c = conjugate(g, h, static_cast<Elem>(x));
    if (seen.insert(c.members).second) out.push_back(std::move(c));
  }
  return out;
}

/// N_G(H) ∩ H^g ≤ H for every g.
inline bool is_h_subgroup(const Group& g, const Subgroup& h, const Subgroup& nh) {
  for (const auto& c : conjugates(g, h)) {
    if (!(nh.members & c.members).is_subset_of(h.members)) return false;
  }
  return true;
}

inline bool is_h_subgroup(const Group& g, const Subgroup& h) { return is_h_subgroup(g, h, normalizer(g, h)); }

/// H and H^g are conjugate inside ⟨H, H^g⟩ for every g.
inline bool is_pronormal(const Group& g, const Subgroup& h) {
  for (const auto& c : conjugates(g, h)) {
    if (c == h) continue;
    const Subgroup j = join(g, h, c);
    bool found = false;
    j.members.for_each([&](Elem y) {
      if (found) return;
      bool ok = true;
      for (Elem s : h.gens) {
        if (!c.contains(g.conj(s, y))) {
          ok = false;
          break;
        }
      }
      found = ok;
    });
    if (!found) return false;
  }
  return true;
}

inline bool is_pronormal(const Analysis& a, std::size_t i) {
  if (a.lat().normal[i]) return true;
  return is_pronormal(a.g(), a.sub(i));
}

// Subgroup predicates over an analysis, by lattice index.

inline bool is_nc_subgroup(const Analysis& a, std::size_t i) {
  return subgroup_product(a.g(), a.closure_of(i), a.normalizer_of(i)).equalsG;
}

inline bool is_ne_subgroup(const Analysis& a, std::size_t i) {
  return (a.normalizer_of(i).members & a.closure_of(i).members) == a.sub(i).members;
}

inline bool is_h_subgroup(const Analysis& a, std::size_t i) {
  if (a.lat().normal[i]) return true;
  return is_h_subgroup(a.g(), a.sub(i), a.normalizer_of(i));
}

inline bool is_self_normalizing(const Analysis& a, std::size_t i) { return a.normalizerIdx[i] == i; }

/// Normal, or self-normalizing with full normal closure.
inline bool satisfies_on_condition(const Analysis& a, std::size_t i) {
  return a.lat().normal[i] || (is_self_normalizing(a, i) && a.closureIdx[i] == a.lat().whole_index());
}

/// First Sylow p-subgroup of the i-th subgroup in lattice order.
inline std::size_t sylow_of_subgroup(const SubgroupLattice& lat, std::size_t i, std::uint64_t p) {
  const auto& h = lat.subgroups[i];
  const std::size_t target = p_part(h.order(), p);
  for (std::size_t j = 0; j <= i; ++j) {
    const auto& s = lat.subgroups[j];
    if (s.order() == target && s.members.is_subset_of(h.members)) return j;
  }
  throw Error(ErrorCode::Internal, "no Sylow subgroup found");
}

/// The j-th subgroup is a Sylow subgroup of some normal subgroup of G.
inline bool is_sylow_of_some_normal(const SubgroupLattice& lat, std::size_t j, std::uint64_t p) {
  const auto& s = lat.subgroups[j];
  for (auto n : normal_subgroups(lat)) {
    const auto& m = lat.subgroups[n];
    if (p_part(m.order(), p) == s.order() && s.members.is_subset_of(m.members)) return true;
  }
  return false;
}

inline bool is_normally_embedded(const SubgroupLattice& lat, std::size_t i) {
  if (lat.normal[i]) return true;
  for (auto p : prime_divisors(lat.subgroups[i].order())) {
    if (!is_sylow_of_some_normal(lat, sylow_of_subgroup(lat, i, p), p)) return false;
  }
  return true;
}

/// Every subgroup of one Sylow p-subgroup P is normal in N_G(P).
inline bool satisfies_cp(const Analysis& a, std::uint64_t p) {
  const auto syl = sylow_subgroups(a.lat(), p);
  const std::size_t pi = syl.front();
  const Subgroup& np = a.normalizer_of(pi);
  for (auto k : subgroups_below(a.lat(), pi)) {
    if (!is_normal_in(a.g(), np, a.sub(k))) return false;
  }
  return true;
}

// Group classes.

inline bool is_dedekind(const SubgroupLattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (!lat.normal[i]) return false;
  return true;
}

/// Index of the first subgroup failing the per-subgroup test, if any.
template <class Pred>
std::optional<std::size_t> first_failure(const Analysis& a, Pred&& ok) {
  for (std::size_t i = 0; i < a.lat().size(); ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

inline std::optional<std::size_t> pnc_witness(const Analysis& a) {
  return first_failure(a, [&](std::size_t i) { return is_nc_subgroup(a, i); });
}

inline bool is_pnc(const Analysis& a) { return !pnc_witness(a).has_value(); }

inline std::optional<std::size_t> pe_witness(const Analysis& a) {
  return first_failure(a, [&](std::size_t i) { return !is_prime(a.sub(i).order()) || is_ne_subgroup(a, i); });
}

inline bool is_pe(const Analysis& a) { return !pe_witness(a).has_value(); }

inline std::optional<std::size_t> on_witness(const Analysis& a) {
  return first_failure(a, [&](std::size_t i) { return satisfies_on_condition(a, i); });
}

inline bool is_on(const Analysis& a) { return !on_witness(a).has_value(); }

inline std::optional<std::size_t> nsn_witness(const Analysis& a) {
  return first_failure(a, [&](std::size_t i) { return a.lat().normal[i] || is_self_normalizing(a, i); });
}

inline bool is_nsn(const Analysis& a) { return !nsn_witness(a).has_value(); }

/// Every subnormal subgroup is normal.
inline std::optional<std::size_t> t_witness(const Analysis& a) {
  return first_failure(a, [&](std::size_t i) { return a.lat().normal[i] || !is_subnormal(a.g(), a.sub(i)); });
}

inline bool is_t_group(const Analysis& a) { return !t_witness(a).has_value(); }

struct PrimeProfile {
  std::uint64_t p = 0;
  bool pNilpotent = false;
  std::optional<std::size_t> pLength;  // solvable groups only
  bool satisfiesCp = false;
};

struct PredicateProfile {
  std::string label;
  std::size_t order = 1;
  bool abelian = false;
  bool dedekind = false;
  bool nilpotent = false;
  std::optional<std::size_t> nilpotencyClass;
  bool solvable = false;
  bool supersolvable = false;
  bool metabelian = false;
  bool tGroup = false;
  bool pnc = false;
  bool pe = false;
  bool on = false;
  bool nsn = false;
  bool simple = false;
  std::vector<PrimeProfile> primes;
  std::size_t subgroupCount = 0;
  std::size_t normalSubgroupCount = 0;

  const PrimeProfile* prime(std::uint64_t p) const {
    for (const auto& pp : primes)
      if (pp.p == p) return &pp;
    return nullptr;
  }
};

/// Throws Internal when a profile violates an implication that holds for every group.
inline void check_profile_consistency(const PredicateProfile& p) {
  auto require = [&](bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::Internal, p.label + ": inconsistent profile (" + what + ")");
  };
  require(!p.abelian || p.dedekind, "abelian => dedekind");
  require(!p.dedekind || (p.pnc && p.nsn), "dedekind => pnc and nsn");
  require(!p.simple || p.pnc, "simple => pnc");
  require(!p.on || (p.pnc && p.nsn), "on => pnc and nsn");
  require(!p.nilpotent || p.supersolvable, "nilpotent => supersolvable");
  require(!p.supersolvable || p.solvable, "supersolvable => solvable");
  require(!p.metabelian || p.solvable, "metabelian => solvable");
}

inline PredicateProfile classify_group(const Analysis& a) {
  const Group& g = a.g();
  const auto& lat = a.lat();
  PredicateProfile p;
  p.label = g.label;
  p.order = g.order;
  p.subgroupCount = lat.size();
  p.normalSubgroupCount = normal_subgroups(lat).size();
  p.abelian = is_abelian(g);
  p.dedekind = is_dedekind(lat);
  p.nilpotent = is_nilpotent(lat);
  const auto nil = nilpotency(g);
  if (nil.nilpotent != p.nilpotent) throw Error(ErrorCode::Internal, g.label + ": nilpotency tests disagree");
  if (nil.nilpotent) p.nilpotencyClass = nil.nilClass;
  p.solvable = is_solvable(g);
  p.supersolvable = is_supersolvable(a.group);
  p.metabelian = is_metabelian(g);
  p.tGroup = is_t_group(a);
  p.pnc = is_pnc(a);
  p.pe = is_pe(a);
  p.on = is_on(a);
  p.nsn = is_nsn(a);
  p.simple = p.normalSubgroupCount == 2;
  for (auto q : prime_divisors(g.order)) {
    PrimeProfile pp;
    pp.p = q;
    pp.pNilpotent = is_p_nilpotent(lat, q);
    if (p.solvable) pp.pLength = p_length(lat, q);
    pp.satisfiesCp = satisfies_cp(a, q);
    p.primes.push_back(pp);
  }
  check_profile_consistency(p);
  return p;
}

inline nlohmann::ordered_json predicate_profile_to_json(const PredicateProfile& p) {
  nlohmann::ordered_json j;
  j["label"] = p.label;
  j["order"] = p.order;
  j["abelian"] = p.abelian;
  j["dedekind"] = p.dedekind;
  j["nilpotent"] = p.nilpotent;
  j["nilpotencyClass"] = p.nilpotencyClass ? nlohmann::ordered_json(*p.nilpotencyClass) : nullptr;
  j["solvable"] = p.solvable;
  j["supersolvable"] = p.supersolvable;
  j["metabelian"] = p.metabelian;
  j["tGroup"] = p.tGroup;
  j["pnc"] = p.pnc;
  j["pe"] = p.pe;
  j["on"] = p.on;
  j["nsn"] = p.nsn;
  j["simple"] = p.simple;
  nlohmann::ordered_json primes = nlohmann::ordered_json::array();
  for (const auto& pp : p.primes) {
    nlohmann::ordered_json q;
    q["p"] = pp.p;
    q["pNilpotent"] = pp.pNilpotent;
    q["pLength"] = pp.pLength ? nlohmann::ordered_json(*pp.pLength) : nullptr;
    q["satisfiesCp"] = pp.satisfiesCp;
    primes.push_back(std::move(q));
  }
  j["primes"] = std::move(primes);
  j["subgroupCount"] = p.subgroupCount;
  j["normalSubgroupCount"] = p.normalSubgroupCount;
  return j;
}

/// Boolean fields addressable by name, for search expressions.
inline std::optional<bool> profile_field(const PredicateProfile& p, const std::string& name) {
  static const std::map<std::string, bool PredicateProfile::*> fields = {
      {"abelian", &PredicateProfile::abelian},   {"dedekind", &PredicateProfile::dedekind},
      {"nilpotent", &PredicateProfile::nilpotent}, {"solvable", &PredicateProfile::solvable},
      {"supersolvable", &PredicateProfile::supersolvable}, {"metabelian", &PredicateProfile::metabelian},
      {"tGroup", &PredicateProfile::tGroup},     {"pnc", &PredicateProfile::pnc},
      {"pe", &PredicateProfile::pe},             {"on", &PredicateProfile::on},
      {"nsn", &PredicateProfile::nsn},           {"simple", &PredicateProfile::simple},
  };
  auto it = fields.find(name);
  if (it == fields.end()) return std::nullopt;
  return p.*(it->second);
}

inline std::vector<std::string> profile_field_names() {
  return {"abelian", "dedekind", "nilpotent", "solvable", "supersolvable", "metabelian",
          "tGroup",  "pnc",      "pe",        "on",       "nsn",           "simple"};
}

}  // namespace fgt

#endif  // FGT_PREDICATES_HPP_
