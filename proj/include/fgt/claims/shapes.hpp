#ifndef FGT_CLAIMS_SHAPES_HPP_
#define FGT_CLAIMS_SHAPES_HPP_

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fgt/claims/context.hpp"

namespace fgt {

inline std::vector<Elem> elements_of_order(const Group& g, std::size_t n) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < g.order; ++x)
    if (element_order(g, static_cast<Elem>(x)) == n) out.push_back(static_cast<Elem>(x));
  return out;
}

inline bool is_cyclic(const Group& g, const Subgroup& h) {
  bool found = false;
  h.members.for_each([&](Elem x) {
    if (!found && element_order(g, x) == h.order()) found = true;
  });
  return found;
}

inline std::optional<Elem> cyclic_generator(const Group& g, const Subgroup& h) {
  std::optional<Elem> out;
  h.members.for_each([&](Elem x) {
    if (!out && element_order(g, x) == h.order()) out = x;
  });
  return out;
}

inline bool is_elementary_abelian(const Group& g, const Subgroup& h) {
  if (!is_abelian(g, h)) return false;
  std::size_t p = 0;
  bool ok = true;
  h.members.for_each([&](Elem x) {
    if (x == 0) return;
    const auto o = element_order(g, x);
    if (!is_prime(o) || (p != 0 && o != p)) ok = false;
    p = o;
  });
  return ok;
}

/// Exponent m with x^g = x^m, if conjugation by g maps x into ⟨x⟩.
inline std::optional<std::size_t> power_exponent(const Group& g, Elem x, Elem by) {
  const Elem target = g.conj(x, by);
  Elem y = 0;
  const auto o = element_order(g, x);
  for (std::size_t k = 0; k < o; ++k) {
    if (y == target) return k;
    y = g.op(y, x);
  }
  return std::nullopt;
}

inline bool all_maximal_satisfy(const AnalyzedGroup& ag, const std::function<bool(const Group&, const Subgroup&)>& ok) {
  for (auto i : maximal_subgroups(ag.lat()))
    if (!ok(ag.g(), ag.a().sub(i))) return false;
  return true;
}

inline bool is_minimal_non_abelian(const AnalyzedGroup& ag) {
  if (ag.profile.abelian) return false;
  return all_maximal_satisfy(ag, [](const Group& g, const Subgroup& h) { return is_abelian(g, h); });
}

inline bool is_minimal_non_nilpotent(const AnalyzedGroup& ag) {
  if (ag.profile.nilpotent) return false;
  return all_maximal_satisfy(ag, [](const Group& g, const Subgroup& h) { return nilpotency(g, h).nilpotent; });
}

inline bool is_minimal_non_supersolvable(const AnalyzedGroup& ag) {
  if (ag.profile.supersolvable) return false;
  return all_maximal_satisfy(
      ag, [](const Group& g, const Subgroup& h) { return is_supersolvable(induced_group(g, h).group); });
}

/// No subgroup strictly between 1 and the normal subgroup r is invariant under conjugation by c.
inline bool acts_irreducibly(const AnalyzedGroup& ag, std::size_t r, Elem c) {
  const auto& lat = ag.lat();
  for (auto k : subgroups_below(lat, r)) {
    const auto& K = lat.subgroups[k];
    if (K.order() == 1 || k == r) continue;
    if (normalizes(ag.g(), c, K)) return false;
  }
  return true;
}

inline std::optional<std::size_t> unique_sylow(const SubgroupLattice& lat, std::uint64_t p) {
  const auto s = sylow_subgroups(lat, p);
  if (s.size() != 1) return std::nullopt;
  return s.front();
}

inline bool matches_reference(const AnalyzedGroup& ag, const std::string& name) {
  return order_fingerprint(ag.g()) == reference_profile(name);
}

/// ⟨a, x : a^{p^n} = x^p = 1, x^{-1} a x = a^{1+p^{n-1}}⟩ with p odd and n ≥ 2.
inline bool is_modular_shape(const AnalyzedGroup& ag) {
  const Group& g = ag.g();
  const auto primes = prime_divisors(g.order);
  if (primes.size() != 1 || primes[0] == 2) return false;
  const auto p = primes[0];
  const unsigned e = vp_valuation(g.order, p);
  if (e < 3) return false;
  const unsigned n = e - 1;
  const auto pn = ipow(p, n);
  const auto xs = elements_of_order(g, p);
  for (Elem a : elements_of_order(g, pn)) {
    const Subgroup A = generated(g, {a});
    const Elem target = element_pow(g, a, static_cast<std::int64_t>(1 + ipow(p, n - 1)));
    for (Elem x : xs)
      if (!A.contains(x) && g.conj(a, x) == target) return true;
  }
  return false;
}

/// ⟨a, b, x : a^{p^n} = b^p = x^p = 1, [x,a] = b, [a,b] = [b,x] = 1⟩.
inline bool is_heisenberg_shape(const AnalyzedGroup& ag) {
  const Group& g = ag.g();
  const auto primes = prime_divisors(g.order);
  if (primes.size() != 1) return false;
  const auto p = primes[0];
  const unsigned e = vp_valuation(g.order, p);
  if (e < 3) return false;
  const auto xs = elements_of_order(g, p);
  for (Elem a : elements_of_order(g, ipow(p, e - 2))) {
    for (Elem x : xs) {
      const Elem b = g.comm(x, a);
      if (element_order(g, b) != p) continue;
      if (g.comm(a, b) != 0 || g.comm(b, x) != 0) continue;
      if (generated(g, {a, x}).order() == g.order) return true;
    }
  }
  return false;
}

/// Minimal non-abelian of order q^m r^n: normal elementary abelian Sylow r-subgroup
/// acted on irreducibly by a cyclic Sylow q-subgroup. Returns (r, q).
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> minimal_non_abelian_split(const AnalyzedGroup& ag) {
  const auto primes = prime_divisors(ag.g().order);
  if (primes.size() != 2 || !is_minimal_non_abelian(ag)) return std::nullopt;
  for (int k = 0; k < 2; ++k) {
    const auto r = primes[k];
    const auto q = primes[1 - k];
    const auto R = unique_sylow(ag.lat(), r);
    if (!R || !is_elementary_abelian(ag.g(), ag.a().sub(*R))) continue;
    const auto Q = sylow_subgroups(ag.lat(), q).front();
    const auto c = cyclic_generator(ag.g(), ag.a().sub(Q));
    if (!c) continue;
    if (acts_irreducibly(ag, *R, *c)) return std::make_pair(r, q);
  }
  return std::nullopt;
}

/// Two primes p < q with cyclic Sylow p and normal elementary abelian Sylow q of order > q
/// acted on irreducibly; minimal non-supersolvable.
inline bool is_irreducible_non_supersolvable_shape(const AnalyzedGroup& ag) {
  const auto primes = prime_divisors(ag.g().order);
  if (primes.size() != 2) return false;
  const auto p = primes[0];
  const auto q = primes[1];
  const auto Q = unique_sylow(ag.lat(), q);
  if (!Q) return false;
  const auto& QS = ag.a().sub(*Q);
  if (QS.order() <= q || !is_elementary_abelian(ag.g(), QS)) return false;
  const auto P = sylow_subgroups(ag.lat(), p).front();
  const auto c = cyclic_generator(ag.g(), ag.a().sub(P));
  if (!c || !acts_irreducibly(ag, *Q, *c)) return false;
  return is_minimal_non_supersolvable(ag);
}

/// p < q, supersolvable, cyclic Sylow p, elementary abelian Sylow q of order q^2, O_q ≠ 1.
inline bool is_supersolvable_square_shape(const AnalyzedGroup& ag) {
  const auto primes = prime_divisors(ag.g().order);
  if (primes.size() != 2 || !ag.profile.supersolvable) return false;
  const auto p = primes[0];
  const auto q = primes[1];
  const auto P = sylow_subgroups(ag.lat(), p).front();
  const auto Q = sylow_subgroups(ag.lat(), q).front();
  if (!is_cyclic(ag.g(), ag.a().sub(P))) return false;
  const auto& QS = ag.a().sub(Q);
  if (QS.order() != q * q || !is_elementary_abelian(ag.g(), QS)) return false;
  return p_core(ag.lat(), q).order() > 1;
}

/// ⟨a, b, c : a^p = b^p = c^{q^n} = 1, c^{-1} a c = a^r, b central⟩ with r ≢ 1, r^q ≡ 1 (mod p), p > q.
inline bool is_split_metacyclic_shape(const AnalyzedGroup& ag) {
  const Group& g = ag.g();
  const auto primes = prime_divisors(g.order);
  if (primes.size() != 2) return false;
  const auto q = primes[0];
  const auto p = primes[1];
  const auto P = unique_sylow(ag.lat(), p);
  if (!P) return false;
  const auto& PS = ag.a().sub(*P);
  if (PS.order() != p * p || !is_elementary_abelian(g, PS)) return false;
  const auto Q = sylow_subgroups(ag.lat(), q).front();
  const auto c = cyclic_generator(g, ag.a().sub(Q));
  if (!c) return false;
  const auto z = center(g);
  bool found = false;
  PS.members.for_each([&](Elem a) {
    if (found || a == 0) return;
    const auto r = power_exponent(g, a, *c);
    if (!r || *r % p == 1 || powmod(*r, q, p) != 1) return;
    PS.members.for_each([&](Elem b) {
      if (!found && b != 0 && z.contains(b) && !generated(g, {a}).contains(b)) found = true;
    });
  });
  return found;
}

inline bool is_sl23(const AnalyzedGroup& ag) { return ag.g().order == 24 && matches_reference(ag, "SL2_3"); }
inline bool is_d4(const AnalyzedGroup& ag) { return ag.g().order == 8 && matches_reference(ag, "D4"); }

/// Which listed shape for non-PE groups with solvable PNC proper subgroups matches, if any.
inline std::optional<int> minimal_non_pe_shape(const AnalyzedGroup& ag) {
  if (pi_count(ag.g().order) > 2) return std::nullopt;
  if (is_d4(ag)) return 1;
  if (is_modular_shape(ag)) return 2;
  if (is_heisenberg_shape(ag)) return 3;
  if (is_supersolvable_square_shape(ag)) return 4;
  if (is_minimal_non_nilpotent(ag)) {
    const auto primes = prime_divisors(ag.g().order);
    if (primes.size() == 2 && unique_sylow(ag.lat(), primes[0])) {
      const auto split = minimal_non_abelian_split(ag);
      if (split && split->first == primes[0]) return 5;
      if (is_sl23(ag)) return 5;
    }
  }
  if (is_irreducible_non_supersolvable_shape(ag)) return 6;
  return std::nullopt;
}

/// Which listed shape for non-PE groups with ON proper subgroups matches, if any.
inline std::optional<int> minimal_non_on_shape(const AnalyzedGroup& ag) {
  if (minimal_non_abelian_split(ag)) return 1;
  if (is_modular_shape(ag)) return 2;
  if (is_heisenberg_shape(ag)) return 3;
  if (is_irreducible_non_supersolvable_shape(ag)) return 4;
  if (is_split_metacyclic_shape(ag)) return 5;
  if (is_sl23(ag)) return 6;
  return std::nullopt;
}

/// Structural alternative to Dedekind in the ON characterization; returns the prime p when it holds.
inline std::optional<std::uint64_t> on_structure_prime(const AnalyzedGroup& ag) {
  const Group& g = ag.g();
  const auto& lat = ag.lat();
  const auto primes = prime_divisors(g.order);
  for (auto p : primes) {
    bool ok = true;
    Subgroup h1 = trivial_subgroup(g);
    for (auto q : primes) {
      if (q == p) continue;
      const auto Q = unique_sylow(lat, q);
      if (!Q || !is_abelian(g, ag.a().sub(*Q))) {
        ok = false;
        break;
      }
      h1 = join(g, h1, ag.a().sub(*Q));
    }
    if (!ok || h1.order() == 1) continue;
    const auto Pi = sylow_subgroups(lat, p).front();
    const auto& P = ag.a().sub(Pi);
    if (!is_cyclic(g, P) || ag.a().normalizerIdx[Pi] != Pi) continue;
    const auto op = p_core(lat, p);
    const auto h1e = h1.elements();
    bool some = false;
    P.members.for_each([&](Elem x) {
      if (some || element_order(g, x) != P.order()) return;
      if (!(generated(g, {element_pow(g, x, static_cast<std::int64_t>(p))}) == op)) return;
      for (Elem w : h1e) {
        if (w == 0) continue;
        const auto m = power_exponent(g, w, x);
        const auto o = element_order(g, w);
        if (!m || std::gcd(*m, o) != 1 || std::gcd(*m + o - 1, o) != 1) return;
      }
      some = true;
    });
    if (some) return p;
  }
  return std::nullopt;
}

struct HallSplit {
  std::size_t a = 0;
  std::size_t d = 0;
};

/// G = A ⋊ D with A abelian normal Hall, D Dedekind, every subgroup of A normal in G, and
/// every a^d = a^n with n ≡ 1 or gcd(n - 1, o(a)) = 1.
inline std::optional<HallSplit> sufficiency_split(const AnalyzedGroup& ag) {
  const Group& g = ag.g();
  const auto& lat = ag.lat();
  for (auto ai : normal_subgroups(lat)) {
    const auto& A = ag.a().sub(ai);
    const std::size_t na = A.order();
    const std::size_t nd = g.order / na;
    if (std::gcd(na, nd) != 1 || !is_abelian(g, A)) continue;
    bool allNormal = true;
    for (auto k : subgroups_below(lat, ai))
      if (!lat.normal[k]) allNormal = false;
    if (!allNormal) continue;
    for (auto di : subgroups_of_order(lat, nd)) {
      const auto& D = ag.a().sub(di);
      bool dedekind = true;
      for (auto k : subgroups_below(lat, di))
        if (!is_normal_in(g, D, ag.a().sub(k))) dedekind = false;
      if (!dedekind) continue;
      bool powers = true;
      A.members.for_each([&](Elem a) {
        if (!powers || a == 0) return;
        const auto o = element_order(g, a);
        D.members.for_each([&](Elem d) {
          if (!powers) return;
          const auto n = power_exponent(g, a, d);
          if (!n) {
            powers = false;
            return;
          }
          if (*n % o == 1 % o) return;
          if (std::gcd((*n + o - 1) % o, o) != 1) powers = false;
        });
      });
      if (powers) return HallSplit{ai, di};
    }
  }
  return std::nullopt;
}

}  // namespace fgt

#endif  // FGT_CLAIMS_SHAPES_HPP_
