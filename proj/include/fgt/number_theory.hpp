#ifndef FGT_NUMBER_THEORY_HPP_
#define FGT_NUMBER_THEORY_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

#include "fgt/error.hpp"

namespace fgt {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime divisors of n in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Exponent of the prime p in n (v_p(n)); v_p(n) = 0 when p does not divide n.
inline unsigned vp_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::InvalidParameters, "vp_valuation needs n >= 1");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// The p-part |n|_p.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t out = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

/// Least m >= 1 with a^m = 1 mod n; requires gcd(a, n) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  a %= n;
  if (std::gcd(a, n) != 1) {
    throw Error(ErrorCode::InvalidParameters, "multiplicative_order needs a unit");
  }
  std::uint64_t x = a;
  std::uint64_t m = 1;
  while (x != 1) {
    x = x * a % n;
    ++m;
  }
  return m;
}

/// Inverse of a modulo n; requires gcd(a, n) = 1.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorCode::InvalidParameters, "inverse_mod needs a unit");
  if (t < 0) t += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(t);
}

/// Non-negative residue of a (possibly negative) integer.
inline std::uint64_t mod_floor(std::int64_t a, std::uint64_t n) {
  std::int64_t m = a % static_cast<std::int64_t>(n);
  if (m < 0) m += static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(m);
}

}  // namespace fgt

#endif  // FGT_NUMBER_THEORY_HPP_
