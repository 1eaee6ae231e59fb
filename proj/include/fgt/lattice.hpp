#ifndef FGT_LATTICE_HPP_
#define FGT_LATTICE_HPP_

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fgt/number_theory.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

struct LatticeBudget {
  std::size_t maxSubgroups = 200000;
  std::size_t maxJoins = 5000000;
};

namespace detail {
inline std::atomic<std::size_t>& lattice_subgroup_budget() {
  static std::atomic<std::size_t> v{LatticeBudget{}.maxSubgroups};
  return v;
}
inline std::atomic<std::size_t>& lattice_join_budget() {
  static std::atomic<std::size_t> v{LatticeBudget{}.maxJoins};
  return v;
}
}  // namespace detail

inline LatticeBudget lattice_budget() {
  return LatticeBudget{detail::lattice_subgroup_budget().load(), detail::lattice_join_budget().load()};
}

inline void set_lattice_budget(const LatticeBudget& b) {
  if (b.maxSubgroups == 0 || b.maxJoins == 0) {
    throw Error(ErrorCode::InvalidParameters, "lattice budget must be positive");
  }
  detail::lattice_subgroup_budget().store(b.maxSubgroups);
  detail::lattice_join_budget().store(b.maxJoins);
}

/// Every subgroup of a group, sorted by (order, member list).
class SubgroupLattice {
 public:
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  std::vector<bool> normal;
  std::vector<bool> maximal;
  std::vector<std::size_t> classId;
  std::size_t classCount = 0;

  const Group& g() const { return *group; }
  std::size_t size() const { return subgroups.size(); }
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return subgroups.size() - 1; }

  std::size_t index_of(const Bits& members) const {
    auto it = index_.find(members);
    if (it == index_.end()) throw Error(ErrorCode::NotSubgroup, "subgroup not in lattice");
    return it->second;
  }
  std::size_t index_of(const Subgroup& h) const { return index_of(h.members); }

  /// For each subgroup, the indices of the subgroups it covers.
  const std::vector<std::vector<std::size_t>>& lower_covers() const {
    std::call_once(coversOnce_, [this] { compute_covers(); });
    return covers_;
  }

  void finalize();

 private:
  void compute_covers() const;

  std::unordered_map<Bits, std::size_t, BitsHash> index_;
  mutable std::once_flag coversOnce_;
  mutable std::vector<std::vector<std::size_t>> covers_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

inline std::vector<std::size_t> maximal_in(const SubgroupLattice& lat, std::size_t k);

inline void SubgroupLattice::finalize() {
  std::vector<std::size_t> perm(subgroups.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto oa = subgroups[a].order();
    const auto ob = subgroups[b].order();
    if (oa != ob) return oa < ob;
    return lex_less(subgroups[a].members, subgroups[b].members);
  });
  std::vector<Subgroup> sorted;
  std::vector<std::size_t> rawClass;
  sorted.reserve(perm.size());
  for (auto i : perm) {
    sorted.push_back(std::move(subgroups[i]));
    rawClass.push_back(classId[i]);
  }
  subgroups = std::move(sorted);

  std::unordered_map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> classSize;
  classId.assign(subgroups.size(), 0);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    auto [it, fresh] = renumber.emplace(rawClass[i], renumber.size());
    if (fresh) classSize.push_back(0);
    classId[i] = it->second;
    ++classSize[it->second];
  }
  classCount = classSize.size();

  index_.clear();
  for (std::size_t i = 0; i < subgroups.size(); ++i) index_.emplace(subgroups[i].members, i);

  normal.assign(subgroups.size(), false);
  for (std::size_t i = 0; i < subgroups.size(); ++i) normal[i] = classSize[classId[i]] == 1;

  // Maximality is a class invariant, so one member per class is tested.
  const std::size_t n = group->order;
  std::vector<int> classMax(classCount, -1);
  maximal.assign(subgroups.size(), false);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (subgroups[i].order() == n) continue;
    int& cm = classMax[classId[i]];
    if (cm < 0) {
      cm = 1;
      for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
        const auto oj = subgroups[j].order();
        if (oj == n) break;
        if (oj % subgroups[i].order() == 0 && oj > subgroups[i].order() &&
            subgroups[i].members.is_subset_of(subgroups[j].members)) {
          cm = 0;
          break;
        }
      }
    }
    maximal[i] = cm == 1;
  }
}

inline void SubgroupLattice::compute_covers() const {
  covers_.assign(subgroups.size(), {});
  for (std::size_t k = 0; k < subgroups.size(); ++k) covers_[k] = maximal_in(*this, k);
}

/// All cyclic seeds, then joins of class representatives with prime-power cyclic subgroups.
inline LatticePtr all_subgroups(const GroupPtr& gp) {
  const Group& g = *gp;
  check_order_budget(g.order, g.label);
  const LatticeBudget budget = lattice_budget();
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group = gp;

  std::unordered_map<Bits, std::size_t, BitsHash> known;
  std::vector<std::size_t> reps;

  auto add_class = [&](const Subgroup& s) {
    if (known.count(s.members)) return;
    const std::size_t cls = reps.size();
    reps.push_back(lat->subgroups.size());
    std::vector<std::size_t> queue{lat->subgroups.size()};
    known.emplace(s.members, lat->subgroups.size());
    lat->subgroups.push_back(s);
    lat->classId.push_back(cls);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (Elem x : g.generators) {
        Subgroup c = conjugate(g, lat->subgroups[queue[qi]], x);
        if (known.count(c.members)) continue;
        known.emplace(c.members, lat->subgroups.size());
        queue.push_back(lat->subgroups.size());
        lat->subgroups.push_back(std::move(c));
        lat->classId.push_back(cls);
      }
      if (lat->subgroups.size() > budget.maxSubgroups) {
        throw Error(ErrorCode::BudgetExceeded, "subgroup budget exceeded for " + g.label + " after " +
                                                   std::to_string(lat->subgroups.size()) + " subgroups");
      }
    }
  };

  add_class(trivial_subgroup(g));
  std::vector<Subgroup> primePowerCyclic;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t x = 1; x < g.order; ++x) {
      Subgroup c = generated(g, {static_cast<Elem>(x)});
      if (!seen.insert(c.members).second) continue;
      if (prime_divisors(c.order()).size() == 1) primePowerCyclic.push_back(c);
      add_class(c);
    }
  }

  std::size_t joins = 0;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Subgroup h = lat->subgroups[reps[r]];
    for (const Subgroup& c : primePowerCyclic) {
      if (c.members.is_subset_of(h.members)) continue;
      if (++joins > budget.maxJoins) {
        throw Error(ErrorCode::BudgetExceeded, "join budget exceeded for " + g.label + " after " +
                                                   std::to_string(lat->subgroups.size()) + " subgroups");
      }
      add_class(join(g, h, c));
    }
  }
  lat->finalize();
  return lat;
}

inline std::vector<std::size_t> normal_subgroups(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.normal[i]) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.maximal[i]) out.push_back(i);
  return out;
}

/// Maximal subgroups of the k-th subgroup, as lattice indices.
inline std::vector<std::size_t> maximal_in(const SubgroupLattice& lat, std::size_t k) {
  const auto& top = lat.subgroups[k];
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& s = lat.subgroups[i];
    if (s.order() < top.order() && top.order() % s.order() == 0 && s.members.is_subset_of(top.members)) {
      below.push_back(i);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < below.size(); ++a) {
    const auto& ha = lat.subgroups[below[a]];
    bool covered = true;
    for (std::size_t b = a + 1; b < below.size() && covered; ++b) {
      const auto& hb = lat.subgroups[below[b]];
      if (hb.order() > ha.order() && ha.members.is_subset_of(hb.members)) covered = false;
    }
    if (covered) out.push_back(below[a]);
  }
  return out;
}

/// Maximal subgroups of maximal subgroups, deduplicated.
inline std::vector<std::size_t> second_maximal_subgroups(const SubgroupLattice& lat) {
  // The set is conjugation-closed, so one maximal subgroup per class suffices.
  std::vector<bool> classMark(lat.classCount, false);
  std::vector<bool> seenClass(lat.classCount, false);
  for (std::size_t m : maximal_subgroups(lat)) {
    if (seenClass[lat.classId[m]]) continue;
    seenClass[lat.classId[m]] = true;
    for (std::size_t s : maximal_in(lat, m)) classMark[lat.classId[s]] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (classMark[lat.classId[i]]) out.push_back(i);
  return out;
}

/// Subgroups of order p^{v_p(|G|)}; the trivial subgroup alone when p does not divide |G|.
inline std::vector<std::size_t> sylow_subgroups(const SubgroupLattice& lat, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  const std::size_t target = p_part(lat.g().order, p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.subgroups[i].order() == target) out.push_back(i);
  return out;
}

inline std::vector<std::size_t> subgroups_of_order(const SubgroupLattice& lat, std::size_t order) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.subgroups[i].order() == order) out.push_back(i);
  return out;
}

/// Subgroups of prime order.
inline std::vector<std::size_t> minimal_subgroups(const SubgroupLattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (is_prime(lat.subgroups[i].order())) out.push_back(i);
  return out;
}

/// Indices of the subgroups contained in the k-th one.
inline std::vector<std::size_t> subgroups_below(const SubgroupLattice& lat, std::size_t k) {
  std::vector<std::size_t> out;
  const auto& top = lat.subgroups[k];
  for (std::size_t i = 0; i <= k; ++i) {
    const auto& s = lat.subgroups[i];
    if (top.order() % s.order() == 0 && s.members.is_subset_of(top.members)) out.push_back(i);
  }
  return out;
}

/// K_0 = G, K_{i+1} = h^{K_i}; the chain as computed until it stabilizes.
inline std::vector<Subgroup> subnormal_chain(const Group& g, const Subgroup& h) {
  std::vector<Subgroup> chain{whole_group(g)};
  while (true) {
    Subgroup next = normal_closure_in(g, chain.back(), h);
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

inline bool is_subnormal(const Group& g, const Subgroup& h) { return subnormal_chain(g, h).back() == h; }

inline nlohmann::ordered_json lattice_to_json(const SubgroupLattice& lat) {
  nlohmann::ordered_json j;
  j["group"] = lat.g().label;
  j["order"] = lat.g().order;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    nlohmann::ordered_json s;
    s["order"] = lat.subgroups[i].order();
    s["members"] = lat.subgroups[i].elements();
    s["normal"] = static_cast<bool>(lat.normal[i]);
    s["maximal"] = static_cast<bool>(lat.maximal[i]);
    s["classId"] = lat.classId[i];
    subs.push_back(std::move(s));
  }
  j["subgroups"] = std::move(subs);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  const auto& covers = lat.lower_covers();
  for (std::size_t k = 0; k < covers.size(); ++k)
    for (std::size_t i : covers[k]) edges.push_back({i, k});
  j["edges"] = std::move(edges);
  return j;
}

inline std::string lattice_to_dot(const SubgroupLattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out << "  s" << i << " [label=\"" << lat.subgroups[i].order() << "\"";
    if (lat.normal[i]) out << ", shape=doublecircle";
    out << "];\n";
  }
  const auto& covers = lat.lower_covers();
  for (std::size_t k = 0; k < covers.size(); ++k)
    for (std::size_t i : covers[k]) out << "  s" << i << " -> s" << k << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fgt

#endif  // FGT_LATTICE_HPP_
