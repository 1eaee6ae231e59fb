#ifndef FGT_STRUCTURE_HPP_
#define FGT_STRUCTURE_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgt/lattice.hpp"

namespace fgt {

enum class SeriesKind { Derived, LowerCentral, UpperP, FittingChain };

inline const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LowerCentral: return "lowerCentral";
    case SeriesKind::UpperP: return "upperPSeries";
    case SeriesKind::FittingChain: return "fittingChain";
  }
  return "?";
}

struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::uint64_t p = 0;
  std::vector<Subgroup> terms;
  bool terminated = false;
};

inline bool is_abelian(const Group& g) {
  for (Elem a : g.generators)
    for (Elem b : g.generators)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

inline bool is_abelian(const Group& g, const Subgroup& h) {
  for (Elem a : h.gens)
    for (Elem b : h.gens)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

/// G, G', G'', ... until the terms stabilize.
inline SeriesReport derived_series(const Group& g) {
  SeriesReport r{SeriesKind::Derived, 0, {whole_group(g)}, false};
  while (true) {
    Subgroup next = commutator_subgroup(g, r.terms.back(), r.terms.back());
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().order() == 1;
  return r;
}

/// G = γ1, γ_{i+1} = [γ_i, G], until the terms stabilize.
inline SeriesReport lower_central_series(const Group& g) {
  const Subgroup w = whole_group(g);
  SeriesReport r{SeriesKind::LowerCentral, 0, {w}, false};
  while (true) {
    Subgroup next = commutator_subgroup(g, r.terms.back(), w);
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().order() == 1;
  return r;
}

inline bool is_solvable(const Group& g) { return derived_series(g).terminated; }

inline bool is_metabelian(const Group& g) {
  const auto s = derived_series(g);
  return s.terms.back().order() == 1 && s.terms.size() <= 3;
}

struct Nilpotency {
  bool nilpotent = false;
  std::size_t nilClass = 0;
};

inline Nilpotency nilpotency(const Group& g) {
  const auto s = lower_central_series(g);
  if (!s.terminated) return {};
  return Nilpotency{true, s.terms.size() - 1};
}

inline Nilpotency nilpotency(const Group& g, const Subgroup& h) {
  return nilpotency(*induced_group(g, h).group);
}

/// Every Sylow subgroup is normal.
inline bool is_nilpotent(const SubgroupLattice& lat) {
  for (auto p : prime_divisors(lat.g().order)) {
    if (sylow_subgroups(lat, p).size() != 1) return false;
  }
  return true;
}

/// Every nonidentity element has full normal closure.
inline bool is_simple(const Group& g) {
  if (g.order <= 1) return false;
  const Subgroup w = whole_group(g);
  std::vector<char> done(g.order, 0);
  for (std::size_t x = 1; x < g.order; ++x) {
    if (done[x]) continue;
    for (std::size_t y = 0; y < g.order; ++y) done[g.conj(static_cast<Elem>(x), static_cast<Elem>(y))] = 1;
    if (normal_closure(g, generated(g, {static_cast<Elem>(x)})).order() != g.order) return false;
  }
  return true;
}

/// Repeatedly factors out a normal subgroup of prime order.
inline bool is_supersolvable(const GroupPtr& gp) {
  GroupPtr cur = gp;
  while (cur->order > 1) {
    const Group& g = *cur;
    std::optional<Subgroup> pick;
    for (std::size_t x = 1; x < g.order && !pick; ++x) {
      if (!is_prime(element_order(g, static_cast<Elem>(x)))) continue;
      Subgroup c = generated(g, {static_cast<Elem>(x)});
      if (is_normal(g, c)) pick = std::move(c);
    }
    if (!pick) return false;
    cur = quotient_group(cur, *pick).group;
  }
  return true;
}

inline bool is_p_nilpotent(const SubgroupLattice& lat, std::uint64_t p) {
  const std::size_t target = lat.g().order / p_part(lat.g().order, p);
  for (auto i : normal_subgroups(lat))
    if (lat.subgroups[i].order() == target) return true;
  return false;
}

/// Meet of the Sylow p-subgroups.
inline Subgroup p_core(const SubgroupLattice& lat, std::uint64_t p) {
  const auto syl = sylow_subgroups(lat, p);
  Bits m = lat.subgroups[syl.front()].members;
  for (auto i : syl) m &= lat.subgroups[i].members;
  return from_closed_set(lat.g(), m);
}

inline Subgroup fitting_subgroup(const SubgroupLattice& lat) {
  Subgroup f = trivial_subgroup(lat.g());
  for (auto p : prime_divisors(lat.g().order)) f = join(lat.g(), f, p_core(lat, p));
  return f;
}

inline Subgroup frattini_subgroup(const SubgroupLattice& lat) {
  const auto maxes = maximal_subgroups(lat);
  if (maxes.empty()) return lat.subgroups[lat.whole_index()];
  Bits m = lat.subgroups[maxes.front()].members;
  for (auto i : maxes) m &= lat.subgroups[i].members;
  return from_closed_set(lat.g(), m);
}

/// Largest normal M ⊇ k whose index |M : k| satisfies the predicate; k itself if none is larger.
inline Subgroup largest_normal_over(const SubgroupLattice& lat, const Subgroup& k,
                                    const std::function<bool(std::size_t)>& index_ok) {
  std::size_t best = lat.index_of(k);
  for (auto i : normal_subgroups(lat)) {
    const auto& m = lat.subgroups[i];
    if (m.order() <= lat.subgroups[best].order()) continue;
    if (m.order() % k.order() != 0 || !k.members.is_subset_of(m.members)) continue;
    if (index_ok(m.order() / k.order())) best = i;
  }
  return lat.subgroups[best];
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline bool coprime_to(std::uint64_t n, std::uint64_t p) { return n % p != 0; }

/// 1 ≤ O_{p'} ≤ O_{p',p} ≤ ... as preimages in G.
inline SeriesReport upper_p_series(const SubgroupLattice& lat, std::uint64_t p) {
  const Group& g = lat.g();
  SeriesReport r{SeriesKind::UpperP, p, {trivial_subgroup(g)}, false};
  bool pStep = false;
  std::size_t stalls = 0;
  while (r.terms.back().order() < g.order && stalls < 2) {
    Subgroup next = pStep ? largest_normal_over(lat, r.terms.back(), [&](std::size_t i) { return is_power_of(i, p); })
                          : largest_normal_over(lat, r.terms.back(), [&](std::size_t i) { return coprime_to(i, p); });
    pStep = !pStep;
    if (next == r.terms.back()) {
      ++stalls;
    } else {
      stalls = 0;
    }
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().order() == g.order;
  return r;
}

inline std::size_t p_length(const SubgroupLattice& lat, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (!is_solvable(lat.g())) throw Error(ErrorCode::NotSolvable, lat.g().label + " is not solvable");
  const auto s = upper_p_series(lat, p);
  std::size_t len = 0;
  // Terms alternate p'-steps (odd positions) and p-steps (even positions).
  for (std::size_t i = 2; i < s.terms.size(); i += 2) {
    if (s.terms[i].order() > s.terms[i - 1].order()) ++len;
  }
  return len;
}

/// F_0 = 1, F_{i+1}/F_i = F(G/F_i), as preimages in G.
inline SeriesReport fitting_chain(const SubgroupLattice& lat) {
  const Group& g = lat.g();
  SeriesReport r{SeriesKind::FittingChain, 0, {trivial_subgroup(g)}, false};
  while (r.terms.back().order() < g.order) {
    const Subgroup k = r.terms.back();
    Subgroup next = k;
    for (auto p : prime_divisors(g.order / k.order())) {
      next = join(g, next, largest_normal_over(lat, k, [&](std::size_t i) { return is_power_of(i, p); }));
    }
    if (next == k) break;
    r.terms.push_back(std::move(next));
  }
  r.terminated = r.terms.back().order() == g.order;
  return r;
}

inline std::size_t fitting_height(const SubgroupLattice& lat) {
  if (!is_solvable(lat.g())) {
    throw Error(ErrorCode::NotApplicable, "Fitting height of non-solvable " + lat.g().label);
  }
  return fitting_chain(lat).terms.size() - 1;
}

struct GeneralizedFitting {
  std::vector<Subgroup> components;
  Subgroup layer;
  Subgroup fitting;
  Subgroup fstar;
  std::optional<std::size_t> fstarClass;  // empty when F*(G) is not nilpotent
};

/// Perfect, with simple central quotient.
inline bool is_quasisimple(const Group& g, const Subgroup& h) {
  if (h.order() <= 1) return false;
  if (!(commutator_subgroup(g, h, h) == h)) return false;
  const auto ind = induced_group(g, h);
  const auto z = center(*ind.group);
  return is_simple(*quotient_group(ind.group, z).group);
}

inline GeneralizedFitting generalized_fitting(const SubgroupLattice& lat) {
  const Group& g = lat.g();
  GeneralizedFitting out;
  out.layer = trivial_subgroup(g);
  for (std::size_t i = 1; i < lat.size(); ++i) {
    const auto& h = lat.subgroups[i];
    if (!is_quasisimple(g, h) || !is_subnormal(g, h)) continue;
    out.components.push_back(h);
    out.layer = join(g, out.layer, h);
  }
  out.fitting = fitting_subgroup(lat);
  out.fstar = join(g, out.layer, out.fitting);
  const auto nil = nilpotency(g, out.fstar);
  if (nil.nilpotent) out.fstarClass = nil.nilClass;
  return out;
}

}  // namespace fgt

#endif  // FGT_STRUCTURE_HPP_
