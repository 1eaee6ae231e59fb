#ifndef FGT_GROUP_HPP_
#define FGT_GROUP_HPP_

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fgt/error.hpp"
#include "fgt/group_spec.hpp"

namespace fgt {

using Elem = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 1200;
inline constexpr std::size_t kMaxOrderCap = 5040;

namespace detail {

inline std::size_t initial_order_cap() {
  if (const char* env = std::getenv("FGT_ORDER_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= kMaxOrderCap) return v;
  }
  return kDefaultOrderCap;
}

inline std::atomic<std::size_t>& order_cap_storage() {
  static std::atomic<std::size_t> cap{initial_order_cap()};
  return cap;
}

}  // namespace detail

inline std::size_t order_cap() { return detail::order_cap_storage().load(); }

inline void set_order_cap(std::size_t cap) {
  if (cap < 1 || cap > kMaxOrderCap) {
    throw Error(ErrorCode::InvalidParameters,
                "order cap must be in [1, " + std::to_string(kMaxOrderCap) + "]");
  }
  detail::order_cap_storage().store(cap);
}

inline void check_order_budget(std::size_t n, const std::string& what) {
  if (n > order_cap()) {
    throw Error(ErrorCode::BudgetExceeded, what + " has order " + std::to_string(n) +
                                               " above the cap " + std::to_string(order_cap()));
  }
}

/// Immutable finite group stored as a dense Cayley table. Element 0 is the identity.
struct Group {
  std::size_t order = 1;
  std::vector<Elem> mul{0};
  std::vector<Elem> inv{0};
  std::vector<Elem> generators;
  std::string label;
  std::optional<GroupSpec> spec;

  Elem op(Elem a, Elem b) const noexcept { return mul[static_cast<std::size_t>(a) * order + b]; }
  Elem conj(Elem x, Elem g) const noexcept { return op(op(inv[g], x), g); }
  Elem comm(Elem x, Elem y) const noexcept { return op(op(inv[x], inv[y]), op(x, y)); }
};

using GroupPtr = std::shared_ptr<const Group>;

struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;
};

inline bool verify_hom(const GroupHom& h) {
  const Group& s = *h.source;
  const Group& t = *h.target;
  if (h.map.size() != s.order || h.map[0] != 0) return false;
  for (std::size_t x = 0; x < s.order; ++x) {
    if (h.map[x] >= t.order) return false;
    for (std::size_t y = 0; y < s.order; ++y) {
      if (h.map[s.op(static_cast<Elem>(x), static_cast<Elem>(y))] != t.op(h.map[x], h.map[y])) {
        return false;
      }
    }
  }
  return true;
}

/// Fills in inverses from a complete table.
inline void finalize_inverses(Group& g) {
  g.inv.assign(g.order, 0);
  for (std::size_t x = 0; x < g.order; ++x) {
    for (std::size_t y = 0; y < g.order; ++y) {
      if (g.op(static_cast<Elem>(x), static_cast<Elem>(y)) == 0) {
        g.inv[x] = static_cast<Elem>(y);
        break;
      }
    }
  }
}

/// Checks identity, inverses, Latin-square rows/columns and associativity.
/// Associativity is exhaustive up to order 512 and sampled above.
inline bool verify_group_table(const Group& g, std::uint64_t seed = 1) {
  const std::size_t n = g.order;
  if (g.mul.size() != n * n || g.inv.size() != n) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (g.op(0, static_cast<Elem>(x)) != x || g.op(static_cast<Elem>(x), 0) != x) return false;
    if (g.op(static_cast<Elem>(x), g.inv[x]) != 0) return false;
  }
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      Elem v = g.op(static_cast<Elem>(x), static_cast<Elem>(y));
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      Elem v = g.op(static_cast<Elem>(y), static_cast<Elem>(x));
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) { return g.op(g.op(a, b), c) == g.op(a, g.op(b, c)); };
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(static_cast<Elem>(a), static_cast<Elem>(b), static_cast<Elem>(c))) return false;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 100000; ++i) {
      if (!assoc(static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)))) {
        return false;
      }
    }
  }
  return true;
}

inline std::size_t element_order(const Group& g, Elem x) {
  std::size_t m = 1;
  Elem y = x;
  while (y != 0) {
    y = g.op(y, x);
    ++m;
  }
  return m;
}

inline Elem element_pow(const Group& g, Elem x, std::int64_t e) {
  std::int64_t o = static_cast<std::int64_t>(element_order(g, x));
  e %= o;
  if (e < 0) e += o;
  Elem r = 0;
  for (std::int64_t i = 0; i < e; ++i) r = g.op(r, x);
  return r;
}

template <class E>
struct Closure {
  GroupPtr group;
  std::vector<E> elements;
};

/// Breadth-first closure under right multiplication by the generators.
/// Elements are numbered in discovery order with the identity at 0.
template <class E, class Mul, class Hash = std::hash<E>, class Eq = std::equal_to<E>>
Closure<E> closure_generate(const E& identity, const std::vector<E>& gens, Mul mul,
                            std::string label, Hash hash = Hash{}, Eq eq = Eq{}) {
  const std::size_t cap = order_cap();
  std::vector<E> elems{identity};
  std::unordered_map<E, Elem, Hash, Eq> index(16, hash, eq);
  index.emplace(identity, 0);
  const std::size_t k = gens.size();
  std::vector<Elem> right;  // right[i*k + s] = index of elems[i] * gens[s]
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      E y = mul(elems[i], gens[s]);
      auto it = index.find(y);
      Elem j;
      if (it == index.end()) {
        if (elems.size() >= cap) {
          throw Error(ErrorCode::BudgetExceeded,
                      label + ": closure passes the order cap " + std::to_string(cap));
        }
        j = static_cast<Elem>(elems.size());
        index.emplace(y, j);
        elems.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(s);
      } else {
        j = it->second;
      }
      right.push_back(j);
    }
  }
  auto g = std::make_shared<Group>();
  const std::size_t n = elems.size();
  g->order = n;
  g->mul.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    g->mul[x * n] = static_cast<Elem>(x);
    for (std::size_t y = 1; y < n; ++y) {
      Elem prev = g->mul[x * n + parent[y]];
      g->mul[x * n + y] = right[static_cast<std::size_t>(prev) * k + via[y]];
    }
  }
  for (const auto& s : gens) {
    Elem gi = index.at(s);
    if (gi != 0) g->generators.push_back(gi);
  }
  g->label = std::move(label);
  finalize_inverses(*g);
  return Closure<E>{std::move(g), std::move(elems)};
}

/// Adopts a precomputed table; the caller vouches for the group axioms.
inline GroupPtr group_from_table(std::size_t n, std::vector<Elem> mul, std::vector<Elem> gens,
                                 std::string label) {
  auto g = std::make_shared<Group>();
  g->order = n;
  g->mul = std::move(mul);
  g->generators = std::move(gens);
  g->label = std::move(label);
  finalize_inverses(*g);
  return g;
}

inline GroupPtr with_identity_info(const GroupPtr& base, std::string label, std::optional<GroupSpec> s) {
  auto g = std::make_shared<Group>(*base);
  g->label = std::move(label);
  g->spec = std::move(s);
  return g;
}

inline GroupPtr trivial_group(std::string label = "Cyclic(1)") {
  auto g = std::make_shared<Group>();
  g->label = std::move(label);
  return g;
}

/// Pairs (x, y) are numbered x*|h| + y.
inline GroupPtr direct_product(const Group& g, const Group& h, std::string label = {}) {
  const std::size_t n = g.order * h.order;
  check_order_budget(n, label.empty() ? "direct product" : label);
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Elem x1 = static_cast<Elem>(a / h.order), y1 = static_cast<Elem>(a % h.order);
    for (std::size_t b = 0; b < n; ++b) {
      const Elem x2 = static_cast<Elem>(b / h.order), y2 = static_cast<Elem>(b % h.order);
      mul[a * n + b] = static_cast<Elem>(g.op(x1, x2) * h.order + h.op(y1, y2));
    }
  }
  std::vector<Elem> gens;
  for (Elem x : g.generators) gens.push_back(static_cast<Elem>(x * h.order));
  for (Elem y : h.generators) gens.push_back(y);
  if (label.empty()) label = "(" + g.label + " x " + h.label + ")";
  return group_from_table(n, std::move(mul), std::move(gens), std::move(label));
}

inline bool is_automorphism(const Group& a, const std::vector<Elem>& t) {
  const std::size_t n = a.order;
  if (t.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Elem v : t) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t[a.op(static_cast<Elem>(x), static_cast<Elem>(y))] != a.op(t[x], t[y])) return false;
  return true;
}

/// Extends images of the generators of a to an endomorphism and checks it is an automorphism.
inline std::vector<Elem> automorphism_from_generator_images(const Group& a,
                                                            const std::vector<Elem>& images) {
  if (images.size() != a.generators.size()) {
    throw Error(ErrorCode::InvalidParameters, "one image per generator required");
  }
  const std::size_t n = a.order;
  std::vector<Elem> t(n, 0);
  std::vector<char> done(n, 0);
  done[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (std::size_t s = 0; s < a.generators.size(); ++s) {
      Elem y = a.op(x, a.generators[s]);
      Elem ty = a.op(t[x], images[s]);
      if (!done[y]) {
        done[y] = 1;
        t[y] = ty;
        queue.push_back(y);
      } else if (t[y] != ty) {
        throw Error(ErrorCode::NotAutomorphism, "generator images do not extend to a homomorphism");
      }
    }
  }
  if (queue.size() != n) throw Error(ErrorCode::InvalidParameters, "generators do not generate the group");
  if (!is_automorphism(a, t)) throw Error(ErrorCode::NotAutomorphism, "map is not bijective");
  return t;
}

/// Extends a per-generator action of b on a to a homomorphism b -> Aut(a).
/// act[y][x] is the image of x under y.
inline std::vector<std::vector<Elem>> extend_action(const Group& a, const Group& b,
                                                    const std::vector<std::vector<Elem>>& gen_action) {
  if (gen_action.size() != b.generators.size()) {
    throw Error(ErrorCode::InvalidParameters, "one action table per generator of the acting group");
  }
  for (const auto& t : gen_action) {
    if (!is_automorphism(a, t)) throw Error(ErrorCode::NotAutomorphism, "action table");
  }
  std::vector<std::vector<Elem>> act(b.order);
  std::vector<Elem> id(a.order);
  for (std::size_t i = 0; i < a.order; ++i) id[i] = static_cast<Elem>(i);
  act[0] = id;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem y = queue[qi];
    for (std::size_t s = 0; s < b.generators.size(); ++s) {
      Elem z = b.op(y, b.generators[s]);
      std::vector<Elem> comp(a.order);
      for (std::size_t x = 0; x < a.order; ++x) comp[x] = act[y][gen_action[s][x]];
      if (act[z].empty()) {
        act[z] = std::move(comp);
        queue.push_back(z);
      } else if (act[z] != comp) {
        throw Error(ErrorCode::ActionInconsistent,
                    "generator action does not extend to a homomorphism");
      }
    }
  }
  if (queue.size() != b.order) {
    throw Error(ErrorCode::InvalidParameters, "acting group generators do not generate it");
  }
  return act;
}

/// Pairs (x in a, y in b) numbered x*|b| + y, with (x1,y1)(x2,y2) = (x1*act(y1)(x2), y1*y2).
inline GroupPtr semidirect_product(const Group& a, const Group& b,
                                   const std::vector<std::vector<Elem>>& gen_action,
                                   std::string label = {}) {
  const std::size_t n = a.order * b.order;
  check_order_budget(n, label.empty() ? "semidirect product" : label);
  auto act = extend_action(a, b, gen_action);
  std::vector<Elem> mul(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    const Elem x1 = static_cast<Elem>(p / b.order), y1 = static_cast<Elem>(p % b.order);
    const auto& phi = act[y1];
    for (std::size_t q = 0; q < n; ++q) {
      const Elem x2 = static_cast<Elem>(q / b.order), y2 = static_cast<Elem>(q % b.order);
      mul[p * n + q] = static_cast<Elem>(a.op(x1, phi[x2]) * b.order + b.op(y1, y2));
    }
  }
  std::vector<Elem> gens;
  for (Elem x : a.generators) gens.push_back(static_cast<Elem>(x * b.order));
  for (Elem y : b.generators) gens.push_back(y);
  if (label.empty()) label = "(" + a.label + " : " + b.label + ")";
  return group_from_table(n, std::move(mul), std::move(gens), std::move(label));
}

/// Stable export: {label, order, mul (row-major), generators}.
inline nlohmann::ordered_json group_export_json(const Group& g) {
  nlohmann::ordered_json j;
  j["label"] = g.label;
  j["order"] = g.order;
  j["mul"] = g.mul;
  j["generators"] = g.generators;
  return j;
}

}  // namespace fgt

#endif  // FGT_GROUP_HPP_
