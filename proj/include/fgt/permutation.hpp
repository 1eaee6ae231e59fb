#ifndef FGT_PERMUTATION_HPP_
#define FGT_PERMUTATION_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fgt/error.hpp"

namespace fgt {

struct Permutation {
  std::vector<std::uint16_t> images;

  std::size_t degree() const noexcept { return images.size(); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

inline Permutation perm_identity(std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<std::uint16_t>(i);
  return p;
}

/// Builds a permutation from disjoint cycles.
inline Permutation perm_from_cycles(std::size_t degree,
                                    std::initializer_list<std::vector<std::uint16_t>> cycles) {
  Permutation p = perm_identity(degree);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw Error(ErrorCode::InvalidElement, "cycle point out of range");
      p.images[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

inline bool perm_valid(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  for (auto x : p.images) {
    if (x >= p.degree() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

/// result[i] = a[b[i]]: apply b first, then a.
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  }
  Permutation r;
  r.images.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images[i] = a.images[b.images[i]];
  return r;
}

inline Permutation perm_inverse(const Permutation& a) {
  Permutation r;
  r.images.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images[a.images[i]] = static_cast<std::uint16_t>(i);
  return r;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace fgt

#endif  // FGT_PERMUTATION_HPP_
