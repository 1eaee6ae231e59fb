#ifndef FGT_FIELD_HPP_
#define FGT_FIELD_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fgt/error.hpp"
#include "fgt/number_theory.hpp"

namespace fgt {

/// GF(p^k) for k <= 3. Elements are base-p integers whose lowest digit is
/// the constant coefficient of the residue polynomial.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  std::uint32_t size = 2;
  /// Monic modulus, constant coefficient first, length k+1.
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using FieldElement = std::uint32_t;

namespace detail {

inline std::array<std::uint32_t, 3> field_digits(const FieldSpec& f, FieldElement a) {
  std::array<std::uint32_t, 3> d{0, 0, 0};
  for (std::uint32_t i = 0; i < f.k; ++i) {
    d[i] = a % f.p;
    a /= f.p;
  }
  return d;
}

inline FieldElement field_compose(const FieldSpec& f, const std::uint32_t* d) {
  FieldElement v = 0;
  for (std::uint32_t i = f.k; i-- > 0;) v = v * f.p + d[i];
  return v;
}

/// Value of the monic polynomial with the given coefficients at x in GF(p).
inline std::uint32_t poly_eval_mod(const std::vector<std::uint32_t>& c, std::uint32_t x,
                                   std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

/// Degree <= 3 polynomials are irreducible iff they have no root.
inline bool has_no_root(const std::vector<std::uint32_t>& c, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    if (poly_eval_mod(c, x, p) == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> fixed_modulus(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  if (p == 3 && k == 2) return {1, 0, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  if (p == 2 && k == 2) return {1, 1, 1};
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  if (p == 5 && k == 2) return {2, 0, 1};
  // First monic irreducible in increasing base-p order of the lower coefficients.
  std::uint64_t combos = ipow(p, k);
  for (std::uint64_t v = 0; v < combos; ++v) {
    std::vector<std::uint32_t> c(k + 1, 0);
    std::uint64_t x = v;
    for (std::uint32_t i = 0; i < k; ++i) {
      c[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    c[k] = 1;
    if (has_no_root(c, p)) return c;
  }
  throw Error(ErrorCode::Internal, "no irreducible polynomial found");
}

}  // namespace detail

inline FieldSpec field_make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (k < 1 || k > 3) {
    throw Error(ErrorCode::UnsupportedExtension, "degree " + std::to_string(k));
  }
  std::uint64_t size = ipow(p, k);
  if (size > (1u << 16)) {
    throw Error(ErrorCode::UnsupportedExtension, "field size " + std::to_string(size));
  }
  FieldSpec f;
  f.p = p;
  f.k = k;
  f.size = static_cast<std::uint32_t>(size);
  f.modulus = detail::fixed_modulus(p, k);
  if (k > 1 && !detail::has_no_root(f.modulus, p)) {
    throw Error(ErrorCode::Internal, "fixed modulus is reducible");
  }
  return f;
}

inline bool field_valid(const FieldSpec& f, FieldElement a) { return a < f.size; }

inline FieldElement field_add(const FieldSpec& f, FieldElement a, FieldElement b) {
  if (f.k == 1) return (a + b) % f.p;
  auto x = detail::field_digits(f, a);
  auto y = detail::field_digits(f, b);
  for (std::uint32_t i = 0; i < f.k; ++i) x[i] = (x[i] + y[i]) % f.p;
  return detail::field_compose(f, x.data());
}

inline FieldElement field_neg(const FieldSpec& f, FieldElement a) {
  auto x = detail::field_digits(f, a);
  for (std::uint32_t i = 0; i < f.k; ++i) x[i] = (f.p - x[i]) % f.p;
  return detail::field_compose(f, x.data());
}

inline FieldElement field_sub(const FieldSpec& f, FieldElement a, FieldElement b) {
  return field_add(f, a, field_neg(f, b));
}

inline FieldElement field_mul(const FieldSpec& f, FieldElement a, FieldElement b) {
  if (f.k == 1) {
    return static_cast<FieldElement>(static_cast<std::uint64_t>(a) * b % f.p);
  }
  auto x = detail::field_digits(f, a);
  auto y = detail::field_digits(f, b);
  std::array<std::uint64_t, 5> prod{0, 0, 0, 0, 0};
  for (std::uint32_t i = 0; i < f.k; ++i) {
    for (std::uint32_t j = 0; j < f.k; ++j) prod[i + j] += static_cast<std::uint64_t>(x[i]) * y[j];
  }
  for (auto& c : prod) c %= f.p;
  for (std::uint32_t d = 2 * f.k - 2; d >= f.k; --d) {
    std::uint64_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < f.k; ++i) {
      std::uint64_t sub = lead * f.modulus[i] % f.p;
      prod[d - f.k + i] = (prod[d - f.k + i] + f.p - sub) % f.p;
    }
  }
  std::array<std::uint32_t, 3> r{0, 0, 0};
  for (std::uint32_t i = 0; i < f.k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return detail::field_compose(f, r.data());
}

inline FieldElement field_pow(const FieldSpec& f, FieldElement a, std::uint64_t e) {
  FieldElement out = 1;
  while (e > 0) {
    if (e & 1) out = field_mul(f, out, a);
    a = field_mul(f, a, a);
    e >>= 1;
  }
  return out;
}

inline FieldElement field_inv(const FieldSpec& f, FieldElement a) {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return field_pow(f, a, f.size - 2);
}

inline FieldElement field_frobenius(const FieldSpec& f, FieldElement a) {
  return field_pow(f, a, f.p);
}

/// Least-index generator of the multiplicative group.
inline FieldElement field_primitive(const FieldSpec& f) {
  const std::uint64_t m = f.size - 1;
  if (m == 1) return 1;
  auto primes = prime_divisors(m);
  for (FieldElement c = 2; c < f.size; ++c) {
    bool ok = true;
    for (auto q : primes) {
      if (field_pow(f, c, m / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw Error(ErrorCode::Internal, "no primitive element");
}

inline std::string field_name(const FieldSpec& f) { return "GF(" + std::to_string(f.size) + ")"; }

}  // namespace fgt

#endif  // FGT_FIELD_HPP_
