#ifndef FGT_CATALOG_HPP_
#define FGT_CATALOG_HPP_

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fgt/field.hpp"
#include "fgt/group.hpp"
#include "fgt/group_spec.hpp"
#include "fgt/matrix.hpp"
#include "fgt/number_theory.hpp"
#include "fgt/permutation.hpp"
#include "fgt/subgroup.hpp"

namespace fgt {

/// Cyclic factor C_{p_i^alpha_i} of A with twist t_i.
struct PowerFactor {
  std::uint64_t p = 2;
  unsigned alpha = 1;
  std::uint64_t t = 1;
};

/// A = prod C_{p_i^alpha_i} extended by <a> of order p^alpha, a^-1 a_i a = a_i^(-t_i).
struct PowerActionSpec {
  std::uint64_t p = 2;
  unsigned alpha = 1;
  std::vector<PowerFactor> factors;

  std::uint64_t acting_order() const { return ipow(p, alpha); }
  std::uint64_t factor_order(std::size_t i) const { return ipow(factors[i].p, factors[i].alpha); }
  std::uint64_t order() const {
    std::uint64_t n = acting_order();
    for (std::size_t i = 0; i < factors.size(); ++i) n *= factor_order(i);
    return n;
  }
};

enum class PowerActionIssue { None, Range, Inconsistent };

/// Range checks plus the consistency requirement ord(-t_i mod p_i^alpha_i) | p^alpha.
inline PowerActionIssue power_action_issue(const PowerActionSpec& s, std::string* why = nullptr) {
  auto fail = [&](PowerActionIssue k, std::string m) {
    if (why) *why = std::move(m);
    return k;
  };
  if (!is_prime(s.p) || s.alpha < 1) return fail(PowerActionIssue::Range, "acting prime");
  if (s.factors.empty()) return fail(PowerActionIssue::Range, "no factors");
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    if (!is_prime(f.p) || f.alpha < 1 || f.p == s.p) return fail(PowerActionIssue::Range, "factor prime");
    for (std::size_t j = 0; j < i; ++j) {
      if (s.factors[j].p == f.p) return fail(PowerActionIssue::Range, "repeated factor prime");
    }
    const std::uint64_t m = s.factor_order(i);
    if (f.t < 1 || f.t > m - 1 || std::gcd(f.t, f.p) != 1) {
      return fail(PowerActionIssue::Range, "twist out of range");
    }
    const std::uint64_t neg = (m - f.t % m) % m;
    if (s.acting_order() % multiplicative_order(neg, m) != 0) {
      return fail(PowerActionIssue::Inconsistent,
                  "order of -t mod " + std::to_string(m) + " does not divide " +
                      std::to_string(s.acting_order()));
    }
  }
  return PowerActionIssue::None;
}

inline GroupSpec power_action_to_spec(const PowerActionSpec& s) {
  GroupSpec g("PowerAction");
  g.args.push_back(SpecArg::integer(static_cast<std::int64_t>(s.p)));
  g.args.push_back(SpecArg::integer(s.alpha));
  for (const auto& f : s.factors) {
    g.args.push_back(SpecArg::ints({static_cast<std::int64_t>(f.p), static_cast<std::int64_t>(f.alpha),
                                    static_cast<std::int64_t>(f.t)}));
  }
  return g;
}

inline PowerActionSpec power_action_from_spec(const GroupSpec& g) {
  validate_spec_shape(g);
  if (g.constructor != "PowerAction") throw Error(ErrorCode::InvalidParameters, "not a PowerAction spec");
  PowerActionSpec s;
  auto nonneg = [&](std::int64_t v) {
    if (v < 0) throw Error(ErrorCode::InvalidParameters, to_string(g) + ": negative parameter");
    return static_cast<std::uint64_t>(v);
  };
  s.p = nonneg(g.args[0].value);
  s.alpha = static_cast<unsigned>(nonneg(g.args[1].value));
  for (std::size_t i = 2; i < g.args.size(); ++i) {
    const auto& l = g.args[i].list;
    s.factors.push_back({nonneg(l[0]), static_cast<unsigned>(nonneg(l[1])), nonneg(l[2])});
  }
  return s;
}

namespace detail {

inline std::int64_t int_arg(const GroupSpec& s, std::size_t i, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = s.args[i].value;
  if (v < lo || v > hi) {
    throw Error(ErrorCode::InvalidParameters, to_string(s) + ": argument " + std::to_string(i + 1) +
                                                  " outside [" + std::to_string(lo) + ", " +
                                                  std::to_string(hi) + "]");
  }
  return v;
}

/// Splits q into p^k with p prime, or returns false.
inline bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& k) {
  auto primes = prime_divisors(q);
  if (q < 2 || primes.size() != 1) return false;
  p = static_cast<std::uint32_t>(primes.front());
  k = vp_valuation(q, p);
  return true;
}

inline Closure<std::uint32_t> build_cyclic(std::uint32_t n, const std::string& label) {
  check_order_budget(n, label);
  return closure_generate<std::uint32_t>(
      0, {n == 1 ? 0u : 1u}, [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; }, label);
}

/// Vectors over GF(p) encoded in base p, lowest digit first.
inline Closure<std::uint32_t> build_elementary(std::uint32_t p, std::uint32_t k, const std::string& label) {
  const std::uint64_t n = ipow(p, k);
  check_order_budget(n, label);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t i = 0; i < k; ++i) gens.push_back(static_cast<std::uint32_t>(ipow(p, i)));
  auto add = [p, k](std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  };
  return closure_generate<std::uint32_t>(0, gens, add, label);
}

inline GroupPtr build_dihedral(std::uint32_t n, const std::string& label) {
  check_order_budget(2ull * n, label);
  // (i, e) = a^i b^e encoded as 2i + e.
  auto mul = [n](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x / 2, e = x % 2, j = y / 2, f = y % 2;
    std::uint32_t k = e ? (i + n - j) % n : (i + j) % n;
    return 2 * k + (e ^ f);
  };
  return closure_generate<std::uint32_t>(0, {n == 1 ? 0u : 2u, 1u}, mul, label).group;
}

inline GroupPtr build_dicyclic(std::uint32_t n, const std::string& label) {
  check_order_budget(4ull * n, label);
  // (i, e) = b^i a^e with o(b) = 2n, a^2 = b^n, a^-1 b a = b^-1.
  const std::uint32_t m = 2 * n;
  auto mul = [n, m](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x / 2, e = x % 2, j = y / 2, f = y % 2;
    std::uint32_t k = e ? (i + m - j) : (i + j);
    if (e && f) k += n;
    return 2 * (k % m) + (e ^ f);
  };
  // Generators in the order a, b.
  return closure_generate<std::uint32_t>(0, {1u, 2u}, mul, label).group;
}

inline GroupPtr build_perm_group(const std::vector<Permutation>& gens, std::size_t degree,
                                 const std::string& label) {
  return closure_generate<Permutation>(perm_identity(degree), gens, perm_compose, label, PermutationHash{})
      .group;
}

inline GroupPtr build_sym(std::uint32_t n, const std::string& label) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(perm_from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<std::uint16_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  if (gens.empty()) gens.push_back(perm_identity(n));
  return build_perm_group(gens, n, label);
}

inline GroupPtr build_alt(std::uint32_t n, const std::string& label) {
  std::vector<Permutation> gens;
  for (std::uint16_t i = 2; i < n; ++i) gens.push_back(perm_from_cycles(n, {{0, 1, i}}));
  if (gens.empty()) gens.push_back(perm_identity(n));
  return build_perm_group(gens, n, label);
}

inline GroupPtr build_modular(std::uint32_t p, std::uint32_t n, const std::string& label) {
  const std::uint64_t pn = ipow(p, n);
  check_order_budget(pn * p, label);
  // a^i x^j with x a x^-1 = a^s, s = (1 + p^(n-1))^-1.
  const std::uint64_t s = inverse_mod(1 + ipow(p, n - 1), pn);
  std::vector<std::uint64_t> spow(p);
  spow[0] = 1;
  for (std::uint32_t j = 1; j < p; ++j) spow[j] = spow[j - 1] * s % pn;
  auto mul = [pn, p, spow](std::uint64_t x, std::uint64_t y) {
    std::uint64_t i = x / p, j = x % p, k = y / p, l = y % p;
    std::uint64_t ni = (i + k * spow[j]) % pn;
    return ni * p + (j + l) % p;
  };
  return closure_generate<std::uint64_t>(0, {static_cast<std::uint64_t>(p), 1}, mul, label).group;
}

inline GroupPtr build_heisenberg(std::uint32_t p, std::uint32_t n, const std::string& label) {
  const std::uint64_t pn = ipow(p, n);
  check_order_budget(pn * p * p, label);
  // x^i b^j a^k with a^-1 x a = x b and b central.
  auto enc = [p, pn](std::uint64_t i, std::uint64_t j, std::uint64_t k) { return (i * p + j) * pn + k; };
  auto mul = [p, pn, enc](std::uint64_t u, std::uint64_t v) {
    std::uint64_t i = u / (p * pn), j = (u / pn) % p, k = u % pn;
    std::uint64_t i2 = v / (p * pn), j2 = (v / pn) % p, k2 = v % pn;
    std::uint64_t twist = (i2 * (k % p)) % p;
    return enc((i + i2) % p, (j + j2 + p - twist) % p, (k + k2) % pn);
  };
  return closure_generate<std::uint64_t>(0, {enc(0, 0, 1), enc(1, 0, 0)}, mul, label).group;
}

inline std::shared_ptr<const FieldSpec> field_for(std::uint64_t q, const std::string& label) {
  std::uint32_t p, k;
  if (!prime_power(q, p, k)) throw Error(ErrorCode::InvalidParameters, label + ": q must be a prime power");
  return std::make_shared<const FieldSpec>(field_make(p, k));
}

inline GroupPtr build_sl2(std::uint64_t q, const std::string& label) {
  auto f = field_for(q, label);
  check_order_budget(q * (q * q - 1), label);
  const FieldElement c = field_primitive(*f);
  std::vector<Matrix2> gens{mat_make(f, 1, 1, 0, 1), mat_make(f, 0, field_neg(*f, 1), 1, 0),
                            mat_make(f, c, 0, 0, field_inv(*f, c))};
  auto g = closure_generate<Matrix2>(mat_identity(f), gens, mat_mul, label, Matrix2Hash{}).group;
  if (g->order != q * (q * q - 1)) throw Error(ErrorCode::Internal, label + ": unexpected order");
  return g;
}

/// Moebius maps on the projective line; the point at infinity has index q.
inline GroupPtr build_psl2(std::uint64_t q, const std::string& label) {
  auto f = field_for(q, label);
  const std::uint64_t expected = q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
  check_order_budget(expected, label);
  const std::size_t deg = q + 1;
  const auto inf = static_cast<std::uint16_t>(q);
  const FieldElement c = field_primitive(*f);
  const FieldElement c2 = field_mul(*f, c, c);
  Permutation shift, scale, invert;
  shift.images.resize(deg);
  scale.images.resize(deg);
  invert.images.resize(deg);
  for (std::uint16_t x = 0; x < q; ++x) {
    shift.images[x] = static_cast<std::uint16_t>(field_add(*f, x, 1));
    scale.images[x] = static_cast<std::uint16_t>(field_mul(*f, c2, x));
    invert.images[x] = x == 0 ? inf : static_cast<std::uint16_t>(field_neg(*f, field_inv(*f, x)));
  }
  shift.images[inf] = inf;
  scale.images[inf] = inf;
  invert.images[inf] = 0;
  auto g = build_perm_group({shift, scale, invert}, deg, label);
  if (g->order != expected) throw Error(ErrorCode::Internal, label + ": unexpected order");
  return g;
}

/// 2x2 matrices over GF(9) preserving the standard Hermitian form.
inline std::vector<Matrix2> unitary_matrices_gf9() {
  auto f = std::make_shared<const FieldSpec>(field_make(3, 2));
  std::vector<Matrix2> out;
  const Matrix2 id = mat_identity(f);
  for (FieldElement a = 0; a < 9; ++a)
    for (FieldElement b = 0; b < 9; ++b)
      for (FieldElement c = 0; c < 9; ++c)
        for (FieldElement d = 0; d < 9; ++d) {
          Matrix2 m{f, {a, b, c, d}};
          if (mat_mul(m, mat_conj_transpose(m)) == id) out.push_back(m);
        }
  return out;
}

inline GroupPtr build_gu23(const std::string& label) {
  const auto unitary = unitary_matrices_gf9();
  if (unitary.size() != 96) throw Error(ErrorCode::Internal, "unitary filter count");
  const Matrix2 id = mat_identity(unitary.front().field);
  std::vector<Matrix2> gens;
  Closure<Matrix2> cl = closure_generate<Matrix2>(id, gens, mat_mul, label, Matrix2Hash{});
  for (const auto& m : unitary) {
    if (cl.group->order == unitary.size()) break;
    bool present = false;
    for (const auto& e : cl.elements) present = present || e == m;
    if (present) continue;
    gens.push_back(m);
    cl = closure_generate<Matrix2>(id, gens, mat_mul, label, Matrix2Hash{});
  }
  if (cl.group->order != 96) throw Error(ErrorCode::Internal, "unitary closure order");
  return cl.group;
}

inline std::vector<Elem> power_map_table(const Group& a, std::int64_t e) {
  std::vector<Elem> t(a.order);
  for (std::size_t x = 0; x < a.order; ++x) t[x] = element_pow(a, static_cast<Elem>(x), e);
  return t;
}

inline std::vector<Elem> identity_table(const Group& a) {
  std::vector<Elem> t(a.order);
  std::iota(t.begin(), t.end(), Elem{0});
  return t;
}

/// Multiplication by x on GF(q)[x]/(f), f monic with constant term first.
inline std::vector<std::vector<std::uint32_t>> companion(const std::vector<std::uint32_t>& f, std::uint32_t q) {
  const std::size_t k = f.size() - 1;
  std::vector<std::vector<std::uint32_t>> m(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) m[i + 1][i] = 1;
  for (std::size_t i = 0; i < k; ++i) m[i][k - 1] = (q - f[i] % q) % q;
  return m;
}

inline std::vector<std::vector<std::uint32_t>> mat_mul_mod(const std::vector<std::vector<std::uint32_t>>& a,
                                                           const std::vector<std::vector<std::uint32_t>>& b,
                                                           std::uint32_t q) {
  const std::size_t k = a.size();
  std::vector<std::vector<std::uint32_t>> c(k, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < k; ++l) s += static_cast<std::uint64_t>(a[i][l]) * b[l][j];
      c[i][j] = static_cast<std::uint32_t>(s % q);
    }
  return c;
}

/// First monic irreducible f of degree k over GF(q) with ord(x mod f) = p.
inline std::vector<std::uint32_t> frobenius_polynomial(std::uint32_t q, std::uint32_t k, std::uint32_t p) {
  const std::uint64_t combos = ipow(q, k);
  for (std::uint64_t v = 0; v < combos; ++v) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (k > 1 && !has_no_root(f, q)) continue;
    auto c = companion(f, q);
    auto pw = c;
    bool identity_early = false;
    for (std::uint32_t e = 1; e < p; ++e) {
      bool is_id = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) is_id = is_id && pw[i][j] == (i == j ? 1u : 0u);
      if (is_id) {
        identity_early = true;
        break;
      }
      pw = mat_mul_mod(pw, c, q);
    }
    if (identity_early) continue;
    bool is_id = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) is_id = is_id && pw[i][j] == (i == j ? 1u : 0u);
    if (is_id) return f;
  }
  return {};
}

inline GroupPtr build_irreducible_frobenius(std::uint32_t q, std::uint32_t k, std::uint32_t p,
                                            const std::string& label) {
  const auto f = frobenius_polynomial(q, k, p);
  if (f.empty()) {
    throw Error(ErrorCode::InvalidParameters, label + ": no irreducible action of that order");
  }
  auto a = build_elementary(q, k, label + ".A");
  auto b = build_cyclic(p, label + ".B");
  const auto c = companion(f, q);
  std::vector<Elem> index_of(a.group->order);
  for (std::size_t i = 0; i < a.elements.size(); ++i) index_of[a.elements[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(a.group->order);
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    std::uint32_t v = a.elements[i];
    std::vector<std::uint32_t> vec(k), out(k, 0);
    for (std::uint32_t j = 0; j < k; ++j) {
      vec[j] = v % q;
      v /= q;
    }
    for (std::uint32_t r = 0; r < k; ++r) {
      std::uint64_t s = 0;
      for (std::uint32_t l = 0; l < k; ++l) s += static_cast<std::uint64_t>(c[r][l]) * vec[l];
      out[r] = static_cast<std::uint32_t>(s % q);
    }
    std::uint32_t w = 0;
    for (std::uint32_t j = k; j-- > 0;) w = w * q + out[j];
    table[i] = index_of[w];
  }
  return semidirect_product(*a.group, *b.group, {table}, label);
}

inline GroupPtr build_power_action(const PowerActionSpec& s, const std::string& label) {
  std::string why;
  switch (power_action_issue(s, &why)) {
    case PowerActionIssue::None: break;
    case PowerActionIssue::Range: throw Error(ErrorCode::InvalidParameters, label + ": " + why);
    case PowerActionIssue::Inconsistent: throw Error(ErrorCode::ActionInconsistent, label + ": " + why);
  }
  check_order_budget(s.order(), label);
  GroupPtr a;
  std::vector<std::uint64_t> mods;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const std::uint64_t m = s.factor_order(i);
    mods.push_back(m);
    auto c = build_cyclic(static_cast<std::uint32_t>(m), label + ".A").group;
    a = a ? direct_product(*a, *c, label + ".A") : c;
  }
  // Mixed-radix index of the exponent tuple, first factor most significant.
  std::vector<Elem> table(a->order);
  for (std::size_t idx = 0; idx < a->order; ++idx) {
    std::size_t rest = idx, out = 0, scale = 1;
    for (std::size_t i = mods.size(); i-- > 0;) {
      const std::uint64_t m = mods[i];
      const std::uint64_t x = rest % m;
      rest /= m;
      const std::uint64_t neg = (m - s.factors[i].t % m) % m;
      const std::uint64_t u = inverse_mod(neg, m);
      out += static_cast<std::size_t>(x * u % m) * scale;
      scale *= m;
    }
    table[idx] = static_cast<Elem>(out);
  }
  auto b = build_cyclic(static_cast<std::uint32_t>(s.acting_order()), label + ".B").group;
  return semidirect_product(*a, *b, {table}, label);
}

}  // namespace detail

inline GroupPtr catalog_build(const GroupSpec& spec);

namespace detail {

inline GroupPtr build_unlabeled(const GroupSpec& s) {
  validate_spec_shape(s);
  const std::string label = to_string(s);
  const std::string& c = s.constructor;
  const std::int64_t cap = static_cast<std::int64_t>(kMaxOrderCap);
  if (c == "Cyclic") return build_cyclic(static_cast<std::uint32_t>(int_arg(s, 0, 1, cap)), label).group;
  if (c == "ElementaryAbelian") {
    auto p = static_cast<std::uint32_t>(int_arg(s, 0, 2, cap));
    auto k = static_cast<std::uint32_t>(int_arg(s, 1, 1, 12));
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, label);
    return build_elementary(p, k, label).group;
  }
  if (c == "Dihedral") return build_dihedral(static_cast<std::uint32_t>(int_arg(s, 0, 1, cap)), label);
  if (c == "Dicyclic") return build_dicyclic(static_cast<std::uint32_t>(int_arg(s, 0, 1, cap)), label);
  if (c == "Quaternion") {
    auto n = int_arg(s, 0, 4, 16);
    if (n != 4 && n != 8 && n != 16) throw Error(ErrorCode::InvalidParameters, label + ": order 4, 8 or 16");
    return build_dicyclic(static_cast<std::uint32_t>(n / 4), label);
  }
  if (c == "Sym") return build_sym(static_cast<std::uint32_t>(int_arg(s, 0, 1, 7)), label);
  if (c == "Alt") return build_alt(static_cast<std::uint32_t>(int_arg(s, 0, 1, 7)), label);
  if (c == "Modular") {
    auto p = static_cast<std::uint32_t>(int_arg(s, 0, 2, cap));
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, label);
    return build_modular(p, static_cast<std::uint32_t>(int_arg(s, 1, 2, 12)), label);
  }
  if (c == "HeisenbergLike") {
    auto p = static_cast<std::uint32_t>(int_arg(s, 0, 2, cap));
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, label);
    return build_heisenberg(p, static_cast<std::uint32_t>(int_arg(s, 1, 1, 12)), label);
  }
  if (c == "SL2") return build_sl2(static_cast<std::uint64_t>(int_arg(s, 0, 2, 64)), label);
  if (c == "PSL2") return build_psl2(static_cast<std::uint64_t>(int_arg(s, 0, 2, 64)), label);
  if (c == "GU2_3") return build_gu23(label);
  if (c == "C2sqSemiC4") {
    auto a = build_elementary(2, 2, label + ".A").group;
    auto b = build_cyclic(4, label + ".B").group;
    auto swap = automorphism_from_generator_images(*a, {a->generators[1], a->generators[0]});
    return semidirect_product(*a, *b, {swap}, label);
  }
  if (c == "D4SemiS3") {
    auto a = build_dihedral(4, label + ".A");
    auto b = build_sym(3, label + ".B");
    const Elem ra = a->generators[0], rb = a->generators[1];
    // b generators are (0 1) = d and (0 1 2) = c.
    auto d_act = automorphism_from_generator_images(*a, {a->inv[ra], a->op(ra, rb)});
    return semidirect_product(*a, *b, {d_act, identity_table(*a)}, label);
  }
  if (c == "C5xC3SemiD4") {
    auto c3 = build_cyclic(3, label + ".C3").group;
    auto d4 = build_dihedral(4, label + ".D4");
    auto inv = power_map_table(*c3, -1);
    auto inner = semidirect_product(*c3, *d4, {inv, inv}, label + ".inner");
    auto c5 = build_cyclic(5, label + ".C5").group;
    return direct_product(*c5, *inner, label);
  }
  if (c == "C4WrC2") {
    auto c4 = build_cyclic(4, label + ".C4").group;
    auto base = direct_product(*c4, *c4, label + ".base");
    auto c2 = build_cyclic(2, label + ".C2").group;
    std::vector<Elem> swap(base->order);
    for (std::size_t i = 0; i < base->order; ++i) swap[i] = static_cast<Elem>((i % 4) * 4 + i / 4);
    return semidirect_product(*base, *c2, {swap}, label);
  }
  if (c == "C4CircD4") {
    auto c4 = build_cyclic(4, label + ".C4").group;
    auto d4 = build_dihedral(4, label + ".D4");
    auto prod = direct_product(*c4, *d4, label + ".prod");
    const Subgroup zd = center(*d4);
    Elem z2 = 0;
    zd.members.for_each([&](Elem x) {
      if (x != 0) z2 = x;
    });
    const Elem z1 = 2;  // the involution of Cyclic(4)
    Subgroup n = generated(*prod, {static_cast<Elem>(z1 * d4->order + z2)});
    return quotient_group(prod, n, label).group;
  }
  if (c == "IrreducibleFrobenius") {
    auto q = static_cast<std::uint32_t>(int_arg(s, 0, 2, cap));
    auto k = static_cast<std::uint32_t>(int_arg(s, 1, 1, 3));
    auto p = static_cast<std::uint32_t>(int_arg(s, 2, 2, cap));
    if (!is_prime(q) || !is_prime(p) || p == q) throw Error(ErrorCode::NotPrime, label);
    check_order_budget(ipow(q, k) * p, label);
    return build_irreducible_frobenius(q, k, p, label);
  }
  if (c == "Direct") {
    auto a = catalog_build(s.args[0].spec.front());
    auto b = catalog_build(s.args[1].spec.front());
    return direct_product(*a, *b, label);
  }
  if (c == "PowerAction") return build_power_action(power_action_from_spec(s), label);
  if (c == "CyclicSemidirect") {
    auto n = static_cast<std::uint32_t>(int_arg(s, 0, 1, cap));
    auto d = catalog_build(s.args[1].spec.front());
    const auto& powers = s.args[2].list;
    if (powers.size() != d->generators.size()) {
      throw Error(ErrorCode::InvalidParameters, label + ": one power per generator of the acting group");
    }
    check_order_budget(static_cast<std::size_t>(n) * d->order, label);
    auto a = build_cyclic(n, label + ".A").group;
    std::vector<std::vector<Elem>> acts;
    for (auto r : powers) {
      if (std::gcd(static_cast<std::uint64_t>(mod_floor(r, n)), static_cast<std::uint64_t>(n)) != 1 && n > 1) {
        throw Error(ErrorCode::NotAutomorphism, label + ": power not coprime to n");
      }
      acts.push_back(power_map_table(*a, r));
    }
    return semidirect_product(*a, *d, acts, label);
  }
  throw Error(ErrorCode::UnknownConstructor, c);
}

}  // namespace detail

/// Deterministic construction; the label is the canonical spec string.
inline GroupPtr catalog_build(const GroupSpec& spec) {
  auto g = detail::build_unlabeled(spec);
  return with_identity_info(g, to_string(spec), spec);
}

inline GroupPtr catalog_build(std::string_view text) { return catalog_build(parse_group_spec_any(text)); }

/// The named catalog in its fixed order.
inline std::vector<GroupSpec> default_catalog() {
  std::vector<GroupSpec> out;
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16}) out.push_back(spec("Cyclic", n));
  out.push_back(spec("ElementaryAbelian", 2, 2));
  out.push_back(spec("ElementaryAbelian", 2, 3));
  out.push_back(spec("ElementaryAbelian", 3, 2));
  out.push_back(spec("Direct", spec("Cyclic", 2), spec("Cyclic", 4)));
  out.push_back(spec("Direct", spec("Cyclic", 4), spec("Cyclic", 4)));
  for (int n = 3; n <= 12; ++n) out.push_back(spec("Dihedral", n));
  for (int n = 2; n <= 6; ++n) out.push_back(spec("Dicyclic", n));
  out.push_back(spec("Quaternion", 16));
  out.push_back(spec("Direct", spec("Dicyclic", 2), spec("Cyclic", 2)));
  out.push_back(spec("Direct", spec("Dicyclic", 2), spec("Cyclic", 3)));
  out.push_back(spec("Direct", spec("Dicyclic", 2), spec("ElementaryAbelian", 2, 2)));
  for (int n = 3; n <= 5; ++n) out.push_back(spec("Sym", n));
  out.push_back(spec("Alt", 4));
  out.push_back(spec("Alt", 5));
  out.push_back(spec("Modular", 3, 2));
  out.push_back(spec("Modular", 2, 3));
  out.push_back(spec("HeisenbergLike", 2, 1));
  out.push_back(spec("HeisenbergLike", 3, 1));
  out.push_back(spec("SL2", 3));
  out.push_back(spec("SL2", 5));
  for (int q : {4, 5, 7, 8}) out.push_back(spec("PSL2", q));
  out.push_back(spec("GU2_3"));
  out.push_back(spec("C2sqSemiC4"));
  out.push_back(spec("D4SemiS3"));
  out.push_back(spec("C5xC3SemiD4"));
  out.push_back(spec("C4WrC2"));
  out.push_back(spec("C4CircD4"));
  out.push_back(spec("IrreducibleFrobenius", 5, 2, 3));
  out.push_back(spec("IrreducibleFrobenius", 2, 2, 3));
  out.push_back(spec("IrreducibleFrobenius", 7, 1, 3));
  out.push_back(spec("IrreducibleFrobenius", 2, 3, 7));
  out.push_back(spec("IrreducibleFrobenius", 11, 1, 5));
  out.push_back(spec("IrreducibleFrobenius", 13, 1, 3));
  out.push_back(spec("Direct", spec("Cyclic", 3), spec("Sym", 3)));
  out.push_back(spec("Direct", spec("Cyclic", 5), spec("Sym", 3)));
  out.push_back(spec("Direct", spec("Cyclic", 7), spec("Sym", 3)));
  out.push_back(spec("Direct", spec("Cyclic", 5), spec("Alt", 4)));
  out.push_back(spec("Direct", spec("Cyclic", 3), spec("Dihedral", 4)));
  out.push_back(spec("Direct", spec("Cyclic", 7), spec("Alt", 5)));
  auto pa = [](std::uint64_t p, unsigned alpha, std::vector<PowerFactor> f) {
    return power_action_to_spec(PowerActionSpec{p, alpha, std::move(f)});
  };
  out.push_back(pa(2, 1, {{3, 1, 1}}));
  out.push_back(pa(2, 2, {{3, 1, 1}}));
  out.push_back(pa(2, 1, {{3, 2, 1}}));
  out.push_back(pa(2, 1, {{3, 1, 1}, {5, 1, 1}}));
  out.push_back(pa(2, 1, {{3, 1, 1}, {5, 1, 4}}));
  out.push_back(pa(3, 1, {{7, 1, 5}}));
  out.push_back(pa(3, 1, {{2, 2, 3}, {7, 1, 3}}));
  out.push_back(pa(5, 1, {{2, 1, 1}, {3, 1, 2}}));
  out.push_back(spec("CyclicSemidirect", 7, spec("Cyclic", 9), std::vector<std::int64_t>{2}));
  out.push_back(spec("CyclicSemidirect", 5, spec("Dicyclic", 2), std::vector<std::int64_t>{4, 1}));
  out.push_back(spec("CyclicSemidirect", 13, spec("Cyclic", 4), std::vector<std::int64_t>{5}));
  out.push_back(spec("CyclicSemidirect", 3, spec("Direct", spec("Dicyclic", 2), spec("Cyclic", 2)),
                     std::vector<std::int64_t>{2, 1, 1}));
  out.push_back(spec("CyclicSemidirect", 15, spec("Cyclic", 2), std::vector<std::int64_t>{4}));
  return out;
}

/// Reference groups whose order profiles name isomorphism types.
inline OrderProfile reference_profile(const std::string& name) {
  GroupSpec s;
  if (name == "C2xC4") s = spec("Direct", spec("Cyclic", 2), spec("Cyclic", 4));
  else if (name == "C4xC4") s = spec("Direct", spec("Cyclic", 4), spec("Cyclic", 4));
  else if (name == "C4wrC2") s = spec("C4WrC2");
  else if (name == "C4oD4") s = spec("C4CircD4");
  else if (name == "S3") s = spec("Sym", 3);
  else if (name == "D6") s = spec("Dihedral", 6);
  else if (name == "D4") s = spec("Dihedral", 4);
  else if (name == "Q8") s = spec("Dicyclic", 2);
  else if (name == "C2xC2") s = spec("ElementaryAbelian", 2, 2);
  else if (name == "SL2_3") s = spec("SL2", 3);
  else if (name == "A4") s = spec("Alt", 4);
  else if (name == "D5") s = spec("Dihedral", 5);
  else throw Error(ErrorCode::UnknownConstructor, "reference profile " + name);
  return order_fingerprint(*catalog_build(s));
}

}  // namespace fgt

#endif  // FGT_CATALOG_HPP_
