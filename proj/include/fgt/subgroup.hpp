#ifndef FGT_SUBGROUP_HPP_
#define FGT_SUBGROUP_HPP_

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "fgt/bitset.hpp"
#include "fgt/group.hpp"

namespace fgt {

/// Subset of a parent group's elements that is closed under the group operation.
struct Subgroup {
  Bits members;
  std::vector<Elem> gens;

  std::size_t order() const { return members.count(); }
  bool contains(Elem x) const { return members.test(x); }
  std::vector<Elem> elements() const { return members.to_vector(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

inline Subgroup trivial_subgroup(const Group& g) {
  Subgroup s{Bits(g.order), {}};
  s.members.set(0);
  return s;
}

inline Subgroup whole_group(const Group& g) {
  Subgroup s{Bits(g.order), g.generators};
  for (std::size_t i = 0; i < g.order; ++i) s.members.set(i);
  return s;
}

/// Adds one generator by sweeping whole right cosets of the current subgroup.
inline Subgroup extend(const Group& g, const Subgroup& r, Elem x) {
  if (r.contains(x)) return r;
  Subgroup out = r;
  out.gens.push_back(x);
  const std::vector<Elem> base = r.elements();
  auto add_coset = [&](Elem rep) {
    for (Elem h : base) out.members.set(g.op(h, rep));
  };
  std::vector<Elem> reps{0, x};
  add_coset(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (Elem s : out.gens) {
      Elem e = g.op(reps[i], s);
      if (!out.members.test(e)) {
        add_coset(e);
        reps.push_back(e);
      }
    }
  }
  return out;
}

inline Subgroup generated(const Group& g, const std::vector<Elem>& gens) {
  Subgroup s = trivial_subgroup(g);
  for (Elem x : gens) s = extend(g, s, x);
  return s;
}

/// Wraps a set already known to be a subgroup, choosing generators greedily.
inline Subgroup from_closed_set(const Group& g, const Bits& members) {
  Subgroup s = trivial_subgroup(g);
  members.for_each([&](Elem x) {
    if (!s.contains(x)) s = extend(g, s, x);
  });
  return s;
}

inline bool is_closed_subset(const Group& g, const Bits& members) {
  if (members.size() != g.order || !members.test(0)) return false;
  const auto elems = members.to_vector();
  for (Elem a : elems)
    for (Elem b : elems)
      if (!members.test(g.op(a, b))) return false;
  return true;
}

/// Validating constructor for user-supplied member sets.
inline Subgroup from_members(const Group& g, const Bits& members) {
  if (!is_closed_subset(g, members)) throw Error(ErrorCode::NotSubgroup, "set is not closed");
  return from_closed_set(g, members);
}

inline Subgroup from_member_list(const Group& g, const std::vector<Elem>& elems) {
  Bits b(g.order);
  for (Elem x : elems) {
    if (x >= g.order) throw Error(ErrorCode::InvalidElement, std::to_string(x));
    b.set(x);
  }
  return from_members(g, b);
}

/// H^x = {x^-1 h x}.
inline Subgroup conjugate(const Group& g, const Subgroup& h, Elem x) {
  Subgroup out{Bits(g.order), {}};
  h.members.for_each([&](Elem e) { out.members.set(g.conj(e, x)); });
  for (Elem s : h.gens) out.gens.push_back(g.conj(s, x));
  return out;
}

inline bool normalizes(const Group& g, Elem x, const Subgroup& h) {
  for (Elem s : h.gens) {
    if (!h.contains(g.conj(s, x))) return false;
  }
  return true;
}

inline bool is_normal(const Group& g, const Subgroup& h) {
  for (Elem x : g.generators) {
    if (!normalizes(g, x, h)) return false;
  }
  return true;
}

/// H normal in K, both subgroups of g.
inline bool is_normal_in(const Group& g, const Subgroup& k, const Subgroup& h) {
  for (Elem x : k.gens) {
    if (!normalizes(g, x, h)) return false;
  }
  return true;
}

inline Subgroup normalizer_in(const Group& g, const Subgroup& k, const Subgroup& h) {
  Bits m(g.order);
  k.members.for_each([&](Elem x) {
    if (normalizes(g, x, h)) m.set(x);
  });
  return from_closed_set(g, m);
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  return normalizer_in(g, whole_group(g), h);
}

inline Subgroup centralizer(const Group& g, const Subgroup& h) {
  Bits m(g.order);
  for (std::size_t x = 0; x < g.order; ++x) {
    bool ok = true;
    for (Elem s : h.gens) {
      if (g.op(static_cast<Elem>(x), s) != g.op(s, static_cast<Elem>(x))) {
        ok = false;
        break;
      }
    }
    if (ok) m.set(x);
  }
  return from_closed_set(g, m);
}

inline Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

/// Smallest subgroup containing h that is normalized by every generator of k.
inline Subgroup normal_closure_in(const Group& g, const Subgroup& k, const Subgroup& h) {
  Subgroup n = h;
  std::vector<Elem> work = h.gens;
  while (!work.empty()) {
    Elem t = work.back();
    work.pop_back();
    for (Elem s : k.gens) {
      Elem c = g.conj(t, s);
      if (!n.contains(c)) {
        n = extend(g, n, c);
        work.push_back(c);
      }
    }
  }
  return n;
}

inline Subgroup normal_closure(const Group& g, const Subgroup& h) {
  return normal_closure_in(g, whole_group(g), h);
}

inline Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  if (b.members.is_subset_of(a.members)) return a;
  if (a.members.is_subset_of(b.members)) return b;
  Subgroup s = a;
  for (Elem x : b.gens) s = extend(g, s, x);
  return s;
}

inline Subgroup meet(const Group& g, const Subgroup& a, const Subgroup& b) {
  return from_closed_set(g, a.members & b.members);
}

/// [A,B] generated by all commutators x^-1 y^-1 x y.
inline Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  Bits comms(g.order);
  const auto ea = a.elements();
  const auto eb = b.elements();
  for (Elem x : ea)
    for (Elem y : eb) comms.set(g.comm(x, y));
  Subgroup s = trivial_subgroup(g);
  comms.for_each([&](Elem c) {
    if (!s.contains(c)) s = extend(g, s, c);
  });
  return s;
}

inline Subgroup derived_subgroup(const Group& g) {
  Subgroup w = whole_group(g);
  return commutator_subgroup(g, w, w);
}

struct ProductSize {
  std::size_t size = 0;
  bool equalsG = false;
};

/// |AB| via the order formula when one factor is normal, by enumeration otherwise.
inline ProductSize subgroup_product(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::size_t size;
  if (is_normal(g, a) || is_normal(g, b)) {
    size = a.order() * b.order() / a.members.intersection_count(b.members);
  } else {
    Bits prod(g.order);
    const auto eb = b.elements();
    a.members.for_each([&](Elem x) {
      for (Elem y : eb) prod.set(g.op(x, y));
    });
    size = prod.count();
  }
  return ProductSize{size, size == g.order};
}

inline std::size_t literal_product_size(const Group& g, const Subgroup& a, const Subgroup& b) {
  Bits prod(g.order);
  const auto eb = b.elements();
  a.members.for_each([&](Elem x) {
    for (Elem y : eb) prod.set(g.op(x, y));
  });
  return prod.count();
}

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// Cosets numbered by their least member; the identity coset is 0.
inline Quotient quotient_group(const GroupPtr& gp, const Subgroup& n, std::string label = {}) {
  const Group& g = *gp;
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  const auto ne = n.elements();
  std::vector<Elem> coset_of(g.order, 0);
  std::vector<char> assigned(g.order, 0);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < g.order; ++x) {
    if (assigned[x]) continue;
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem h : ne) {
      Elem y = g.op(static_cast<Elem>(x), h);
      assigned[y] = 1;
      coset_of[y] = id;
    }
  }
  const std::size_t m = reps.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = coset_of[g.op(reps[i], reps[j])];
  std::vector<Elem> gens;
  for (Elem s : g.generators) {
    Elem c = coset_of[s];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  if (label.empty()) label = g.label + "/N" + std::to_string(n.order());
  auto q = group_from_table(m, std::move(mul), std::move(gens), std::move(label));
  return Quotient{q, GroupHom{gp, q, std::move(coset_of)}};
}

struct Induced {
  GroupPtr group;
  std::vector<Elem> embedding;  // local index -> parent index
};

/// The subgroup as a standalone group, elements in increasing parent index.
inline Induced induced_group(const Group& g, const Subgroup& h, std::string label = {}) {
  const auto elems = h.elements();
  const std::size_t m = elems.size();
  std::vector<Elem> local(g.order, 0);
  for (std::size_t i = 0; i < m; ++i) local[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = local[g.op(elems[i], elems[j])];
  std::vector<Elem> gens;
  for (Elem s : h.gens) {
    if (s != 0) gens.push_back(local[s]);
  }
  if (label.empty()) label = g.label + "[" + std::to_string(m) + "]";
  return Induced{group_from_table(m, std::move(mul), std::move(gens), std::move(label)), elems};
}

/// Image under an embedding of a subgroup of the induced group.
inline Subgroup lift_subgroup(const Group& parent, const Induced& ind, const Subgroup& local) {
  Subgroup s{Bits(parent.order), {}};
  local.members.for_each([&](Elem x) { s.members.set(ind.embedding[x]); });
  for (Elem x : local.gens) s.gens.push_back(ind.embedding[x]);
  return s;
}

/// Restriction of a parent subgroup to induced-group coordinates.
inline Subgroup localize_subgroup(const Group& parent, const Induced& ind, const Subgroup& s) {
  const Group& h = *ind.group;
  std::vector<Elem> local(parent.order, 0);
  for (std::size_t i = 0; i < ind.embedding.size(); ++i) local[ind.embedding[i]] = static_cast<Elem>(i);
  Bits b(h.order);
  s.members.for_each([&](Elem x) { b.set(local[x]); });
  return from_closed_set(h, b);
}

/// Isomorphism invariant used in place of isomorphism testing.
struct OrderProfile {
  std::size_t order = 1;
  std::vector<std::pair<std::size_t, std::size_t>> orders;  // (element order, count)
  bool abelian = true;
  std::size_t centerOrder = 1;
  std::size_t derivedOrder = 1;

  friend bool operator==(const OrderProfile&, const OrderProfile&) = default;
};

inline OrderProfile order_fingerprint(const Group& g) {
  OrderProfile p;
  p.order = g.order;
  std::map<std::size_t, std::size_t> census;
  for (std::size_t x = 0; x < g.order; ++x) ++census[element_order(g, static_cast<Elem>(x))];
  p.orders.assign(census.begin(), census.end());
  p.centerOrder = center(g).order();
  p.abelian = p.centerOrder == g.order;
  p.derivedOrder = p.abelian ? 1 : derived_subgroup(g).order();
  return p;
}

inline OrderProfile order_fingerprint(const Group& g, const Subgroup& h) {
  return order_fingerprint(*induced_group(g, h).group);
}

inline nlohmann::ordered_json profile_to_json(const OrderProfile& p) {
  nlohmann::ordered_json j;
  j["order"] = p.order;
  nlohmann::ordered_json census = nlohmann::ordered_json::array();
  for (auto [o, c] : p.orders) census.push_back({o, c});
  j["elementOrders"] = census;
  j["abelian"] = p.abelian;
  j["centerOrder"] = p.centerOrder;
  j["derivedOrder"] = p.derivedOrder;
  return j;
}

}  // namespace fgt

#endif  // FGT_SUBGROUP_HPP_
