// Independent brute-force oracles. They use only the Cayley table of a group.
#ifndef FGT_TESTS_ORACLES_HPP_
#define FGT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "fgt/group.hpp"

namespace oracle {

using fgt::Elem;
using fgt::Group;
using ElemSet = std::vector<Elem>;  // sorted

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && is_prime(d)) out.push_back(d);
  return out;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

/// Number of subgroups of the dihedral group of order 2n: tau(n) + sigma(n).
inline std::uint64_t dihedral_subgroup_count(std::uint64_t n) { return divisor_count(n) + divisor_sum(n); }

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b == 0 ? a : gcd(b, a % b); }

inline std::uint64_t element_order(const Group& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != 0; y = g.op(y, x)) ++k;
  return k;
}

/// Smallest subset containing `seed` and closed under the product.
inline ElemSet closure(const Group& g, const std::vector<Elem>& seed) {
  std::vector<char> in(g.order, 0);
  std::vector<Elem> list{0};
  in[0] = 1;
  for (Elem s : seed)
    if (!in[s]) {
      in[s] = 1;
      list.push_back(s);
    }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem p : {g.op(list[i], list[j]), g.op(list[j], list[i])}) {
        if (!in[p]) {
          in[p] = 1;
          list.push_back(p);
        }
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

inline bool contains(const ElemSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

inline ElemSet conjugate(const Group& g, const ElemSet& h, Elem x) {
  ElemSet out;
  for (Elem e : h) out.push_back(g.op(g.op(g.inv[x], e), x));
  std::sort(out.begin(), out.end());
  return out;
}

inline ElemSet normalizer(const Group& g, const ElemSet& h) {
  ElemSet out;
  for (std::size_t x = 0; x < g.order; ++x)
    if (conjugate(g, h, static_cast<Elem>(x)) == h) out.push_back(static_cast<Elem>(x));
  return out;
}

inline ElemSet normal_closure(const Group& g, const ElemSet& h) {
  std::vector<Elem> seed;
  for (std::size_t x = 0; x < g.order; ++x)
    for (Elem e : conjugate(g, h, static_cast<Elem>(x))) seed.push_back(e);
  return closure(g, seed);
}

inline std::size_t product_size(const Group& g, const ElemSet& a, const ElemSet& b) {
  std::set<Elem> s;
  for (Elem x : a)
    for (Elem y : b) s.insert(g.op(x, y));
  return s.size();
}

inline bool is_nc(const Group& g, const ElemSet& h) {
  return product_size(g, normal_closure(g, h), normalizer(g, h)) == g.order;
}

inline bool is_normal(const Group& g, const ElemSet& h) { return normalizer(g, h).size() == g.order; }

inline std::size_t conjugacy_class_size(const Group& g, const ElemSet& h) {
  std::set<ElemSet> cls;
  for (std::size_t x = 0; x < g.order; ++x) cls.insert(conjugate(g, h, static_cast<Elem>(x)));
  return cls.size();
}

inline ElemSet whole(const Group& g) {
  ElemSet all;
  for (std::size_t x = 0; x < g.order; ++x) all.push_back(static_cast<Elem>(x));
  return all;
}

inline ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool subset(const ElemSet& a, const ElemSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// N_G(H) ∩ H^G = H.
inline bool is_ne(const Group& g, const ElemSet& h) { return intersect(normalizer(g, h), normal_closure(g, h)) == h; }

/// N_G(H) ∩ H^x ≤ H for all x.
inline bool is_h(const Group& g, const ElemSet& h) {
  const auto n = normalizer(g, h);
  for (std::size_t x = 0; x < g.order; ++x)
    if (!subset(intersect(n, conjugate(g, h, static_cast<Elem>(x))), h)) return false;
  return true;
}

inline bool is_pronormal(const Group& g, const ElemSet& h) {
  for (std::size_t x = 0; x < g.order; ++x) {
    const auto hx = conjugate(g, h, static_cast<Elem>(x));
    std::vector<Elem> seed = h;
    seed.insert(seed.end(), hx.begin(), hx.end());
    bool found = false;
    for (Elem y : closure(g, seed)) found = found || conjugate(g, h, y) == hx;
    if (!found) return false;
  }
  return true;
}

/// Normal closure of H inside K, by conjugating with elements of K.
inline ElemSet normal_closure_in(const Group& g, const ElemSet& k, const ElemSet& h) {
  std::vector<Elem> seed;
  for (Elem x : k)
    for (Elem e : conjugate(g, h, x)) seed.push_back(e);
  return closure(g, seed);
}

inline bool is_subnormal(const Group& g, const ElemSet& h) {
  ElemSet k = whole(g);
  for (;;) {
    const auto next = normal_closure_in(g, k, h);
    if (next == h) return true;
    if (next == k) return false;
    k = next;
  }
}

inline ElemSet commutator(const Group& g, const ElemSet& a, const ElemSet& b) {
  std::vector<Elem> seed;
  for (Elem x : a)
    for (Elem y : b) seed.push_back(g.comm(x, y));
  return closure(g, seed);
}

/// Nilpotency class, or 0 when the lower central series stalls above the identity.
inline std::size_t nilpotency_class(const Group& g) {
  const ElemSet all = whole(g);
  ElemSet cur = all;
  for (std::size_t c = 0;; ++c) {
    if (cur.size() == 1) return c;
    const auto next = commutator(g, cur, all);
    if (next == cur) return 0;
    cur = next;
  }
}

inline bool is_nilpotent(const Group& g) { return g.order == 1 || nilpotency_class(g) > 0; }

inline bool is_solvable(const Group& g) {
  ElemSet cur = whole(g);
  while (cur.size() > 1) {
    const auto next = commutator(g, cur, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

/// Every subgroup, found by testing each identity-containing subset whose size divides |G| for closure.
/// Requires |G| <= 64.
inline std::vector<ElemSet> exhaustive_subgroups(const Group& g) {
  const std::size_t n = g.order;
  std::vector<ElemSet> out;
  const std::size_t free = n - 1;  // elements 1..n-1 map to mask bits 0..n-2
  auto closed = [&](std::uint64_t mask) {
    auto in = [&](Elem e) { return e == 0 || ((mask >> (e - 1)) & 1u); };
    std::vector<Elem> elems{0};
    for (std::size_t b = 0; b < free; ++b)
      if ((mask >> b) & 1u) elems.push_back(static_cast<Elem>(b + 1));
    for (Elem x : elems)
      for (Elem y : elems)
        if (!in(g.op(x, y))) return false;
    return true;
  };
  auto emit = [&](std::uint64_t mask) {
    ElemSet s{0};
    for (std::size_t b = 0; b < free; ++b)
      if ((mask >> b) & 1u) s.push_back(static_cast<Elem>(b + 1));
    out.push_back(std::move(s));
  };
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const std::size_t k = d - 1;
    if (k == 0) {
      emit(0);
      continue;
    }
    const std::uint64_t limit = free == 64 ? ~0ull : (1ull << free);
    // Gosper's hack over all k-bit masks below 2^free.
    for (std::uint64_t m = (1ull << k) - 1; m < limit;) {
      if (closed(m)) emit(m);
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      if (r == 0) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // FGT_TESTS_ORACLES_HPP_
