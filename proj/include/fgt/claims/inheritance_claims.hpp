#ifndef FGT_CLAIMS_INHERITANCE_CLAIMS_HPP_
#define FGT_CLAIMS_INHERITANCE_CLAIMS_HPP_

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fgt/claims/basic_claims.hpp"

namespace fgt::claims {

/// H^K N_K(H) = K for H ≤ K ≤ G.
inline bool is_nc_in(const Group& g, const Subgroup& k, const Subgroup& h) {
  return subgroup_product(g, normal_closure_in(g, k, h), normalizer_in(g, k, h)).size == k.order();
}

inline Claim coprime_direct_product() {
  Claim c{"coprime-direct-product",
          "H x K is PNC for PNC groups H, K of coprime order; C3 x S3 shows coprimality is needed",
          Expectation::MustHold,
          {"20 seeded pairs of PNC catalog groups of coprime order", "Direct(Cyclic(3),Sym(3))"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::vector<GroupSpec> pool;
    for_each_group(ctx, rec, catalog_up_to(60), [&](const AnalyzedGroup& ag) {
      if (ag.profile.pnc && ag.g().order > 1) pool.push_back(*ag.g().spec);
    });
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const auto a = catalog_build(pool[i])->order, b = catalog_build(pool[j])->order;
        if (std::gcd(a, b) == 1 && a * b <= 360) pairs.emplace_back(i, j);
      }
    }
    std::mt19937 rng(20240601u);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
    if (pairs.size() > 20) pairs.resize(20);
    std::vector<GroupSpec> products;
    for (auto [i, j] : pairs) products.push_back(spec("Direct", pool[i], pool[j]));
    for_each_group(ctx, rec, products, [&](const AnalyzedGroup& ag) {
      rec.checked();
      if (auto w = pnc_witness(ag.a())) rec.fail_sub(ag, *w, "coprime product of PNC groups has a non-NC subgroup");
    });
    rec.finding({{"pairs", spec_names(products)}});
    const auto ce = ctx.cache.get(spec("Direct", spec("Cyclic", 3), spec("Sym", 3)));
    std::vector<std::size_t> hits;
    for (auto i : subgroups_of_order(ce->lat(), 3)) {
      const auto& n = ce->a().normalizer_of(i);
      if (n.order() == 9 && ce->a().closure_of(i).members.is_subset_of(n.members) && !is_nc_subgroup(ce->a(), i)) {
        hits.push_back(i);
      }
    }
    require(rec, !ce->profile.pnc && !hits.empty(), ce->key, "non-coprime witness not reproduced");
    rec.finding({{"group", ce->key}, {"pnc", ce->profile.pnc}, {"c3WithNormalizerOfOrder9", hits}});
  };
  return c;
}

inline std::size_t automorphism_count(const Group& g) {
  std::size_t count = 0;
  const auto& gens = g.generators;
  std::vector<Elem> images(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      try {
        const auto t = automorphism_from_generator_images(g, images);
        if (is_automorphism(g, t)) ++count;
      } catch (const Error&) {
      }
      return;
    }
    for (std::size_t x = 0; x < g.order; ++x) {
      if (element_order(g, static_cast<Elem>(x)) != element_order(g, gens[k])) continue;
      images[k] = static_cast<Elem>(x);
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

inline Claim semidirect_c3_d4() {
  Claim c{"semidirect-c3-d4",
          "semidirect variant with C3 and D4: D4 admits no automorphism of order 3, so C3 acting on D4 is direct; "
          "the report also lists the groups with D4 acting on C3",
          Expectation::ReportOnly,
          {"Direct(Cyclic(3),Dihedral(4))", "CyclicSemidirect(3,Dihedral(4),...)"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    const auto d4 = catalog_build(spec("Dihedral", 4));
    rec.finding({{"automorphismsOfD4", automorphism_count(*d4)}});
    const auto d6 = reference_profile("D6");
    const auto s3 = reference_profile("S3");
    std::vector<GroupSpec> specs{spec("Direct", spec("Cyclic", 3), spec("Dihedral", 4))};
    for (auto powers : std::vector<std::vector<std::int64_t>>{{2, 1}, {1, 2}, {2, 2}}) {
      specs.push_back(spec("CyclicSemidirect", 3, spec("Dihedral", 4), powers));
    }
    for_each_group(ctx, rec, specs, [&](const AnalyzedGroup& ag) {
      rec.checked();
      std::vector<std::size_t> hits;
      std::size_t s3count = 0;
      for (auto i : subgroups_of_order(ag.lat(), 6)) {
        if (order_fingerprint(ag.g(), ag.a().sub(i)) != s3) continue;
        ++s3count;
        const auto& n = ag.a().normalizer_of(i);
        if (order_fingerprint(ag.g(), n) == d6 && ag.a().closure_of(i).members.is_subset_of(n.members)) {
          hits.push_back(i);
        }
      }
      rec.finding({{"group", ag.key},
                   {"pnc", ag.profile.pnc},
                   {"s3Subgroups", s3count},
                   {"s3WithD6NormalizerContainingClosure", hits}});
    });
  };
  return c;
}

inline Claim quotient_closure() {
  Claim c{"quotient-closure",
          "G/N is PNC for PNC G and normal N; D4 is not PNC although every nontrivial quotient is",
          Expectation::MustHold,
          {"every (G, N) pair of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::vector<std::string> converse;
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      rec.checked();
      const auto& lat = ag.lat();
      bool allQuotientsPnc = true;
      for (auto i : normal_subgroups(lat)) {
        if (i == lat.trivial_index()) continue;
        bool qpnc = true;
        if (i != lat.whole_index()) qpnc = analyze_quotient(ag, i)->profile.pnc;
        if (!qpnc) allQuotientsPnc = false;
        if (ag.profile.pnc && !qpnc) rec.fail_sub(ag, i, "quotient by this normal subgroup is not PNC");
        if (!ag.profile.pnc && !allQuotientsPnc) break;
      }
      if (!ag.profile.pnc && allQuotientsPnc) converse.push_back(ag.key);
    });
    const bool d4 = std::find(converse.begin(), converse.end(), "Dihedral(4)") != converse.end();
    require(rec, d4, "Dihedral(4)", "converse witness not reproduced");
    rec.finding({{"nonPncWithAllNontrivialQuotientsPnc", converse}});
  };
  return c;
}

inline Claim normal_subgroup_closure() {
  Claim c{"normal-subgroup-closure",
          "normal subgroups of PNC groups are PNC; C7 x A5 is PNC and contains a non-PNC A4",
          Expectation::MustHold,
          {"normal subgroups of PNC catalog members", "Direct(Cyclic(7),Alt(5))"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!ag.profile.pnc) return;
      rec.checked();
      for (auto i : normal_subgroups(ag.lat())) {
        if (i == ag.lat().whole_index()) continue;
        if (!analyze_subgroup(ag, i)->profile.pnc) rec.fail_sub(ag, i, "normal subgroup is not PNC");
      }
    });
    const auto ce = ctx.cache.get(spec("Direct", spec("Cyclic", 7), spec("Alt", 5)));
    const auto a4 = reference_profile("A4");
    std::optional<std::size_t> hit;
    for (auto i : subgroups_of_order(ce->lat(), 12)) {
      if (order_fingerprint(ce->g(), ce->a().sub(i)) == a4 && !analyze_subgroup(*ce, i)->profile.pnc) {
        hit = i;
        break;
      }
    }
    require(rec, ce->profile.pnc && hit.has_value(), ce->key, "non-normal witness not reproduced");
    rec.finding({{"group", ce->key},
                 {"pnc", ce->profile.pnc},
                 {"nonPncA4", hit ? nlohmann::ordered_json(ce->a().sub(*hit).elements()) : nullptr}});
  };
  return c;
}

inline std::vector<GroupSpec> lift_universe() {
  auto u = default_catalog();
  u.push_back(spec("Direct", spec("Cyclic", 5), spec("Dihedral", 4)));
  u.push_back(spec("Direct", spec("Cyclic", 7), spec("Alt", 4)));
  u.push_back(spec("Direct", spec("Cyclic", 5), spec("C2sqSemiC4")));
  u.push_back(spec("Direct", spec("Cyclic", 7), spec("Sym", 4)));
  u.push_back(spec("Direct", spec("Cyclic", 7), spec("Dicyclic", 3)));
  u.push_back(spec("Direct", spec("Cyclic", 2), spec("HeisenbergLike", 3, 1)));
  u.push_back(spec("Direct", spec("Cyclic", 5), spec("Modular", 3, 2)));
  return u;
}

using LiftFilter = std::function<bool(const AnalyzedGroup&, std::size_t, std::uint64_t)>;

inline void check_lifts(ClaimContext& ctx, ClaimRecorder& rec, const LiftFilter& eligible) {
  for_each_group(ctx, rec, lift_universe(), [&](const AnalyzedGroup& ag) {
    const Group& g = ag.g();
    bool any = false;
    for (auto p : prime_divisors(g.order)) {
      if (p_part(g.order, p) != p) continue;
      for (auto i : subgroups_of_order(ag.lat(), p)) {
        if (!ag.lat().normal[i] || !eligible(ag, i, p)) continue;
        any = true;
        const bool q = analyze_quotient(ag, i)->profile.pnc;
        rec.side(ag.profile.pnc);
        if (q != ag.profile.pnc) rec.fail_sub(ag, i, "PNC status differs from the quotient's");
      }
    }
    if (any) rec.checked();
  });
}

inline Claim central_p_lift() {
  Claim c{"central-p-lift",
          "with <x> central of order p and |G|_p = p, G is PNC exactly when G/<x> is; "
          "C5xC3SemiD4 over a central C2 shows |G|_p = p is needed",
          Expectation::Iff,
          {"catalog plus constructed direct products", "C5xC3SemiD4"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    check_lifts(ctx, rec, [](const AnalyzedGroup& ag, std::size_t i, std::uint64_t) {
      return ag.a().sub(i).members.is_subset_of(center(ag.g()).members);
    });
    const auto ce = ctx.cache.get(spec("C5xC3SemiD4"));
    const auto z = center(ce->g());
    const auto target = order_fingerprint(*catalog_build(spec("Direct", spec("Sym", 3), spec("Cyclic", 10))));
    std::optional<std::size_t> hit;
    for (auto i : subgroups_of_order(ce->lat(), 2)) {
      if (!ce->a().sub(i).members.is_subset_of(z.members)) continue;
      const auto q = analyze_quotient(*ce, i);
      if (q->profile.pnc && order_fingerprint(q->g()) == target) hit = i;
    }
    const bool ok = !ce->profile.pnc && z.order() == 10 && p_part(ce->g().order, 2) == 8 && hit.has_value();
    require(rec, ok, ce->key, "witness for |G|_p > p not reproduced");
    rec.finding({{"group", ce->key},
                 {"pnc", ce->profile.pnc},
                 {"centerOrder", z.order()},
                 {"centralC2WithPncQuotientS3xC10", hit ? nlohmann::ordered_json(*hit) : nullptr}});
  };
  return c;
}

inline Claim central_p_lift_coprime() {
  Claim c{"central-p-lift-coprime",
          "with <x> normal of order p, |G|_p = p and gcd(p - 1, |G|/p) = 1, G is PNC exactly when G/<x> is",
          Expectation::Iff,
          {"catalog plus constructed direct products"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    check_lifts(ctx, rec, [](const AnalyzedGroup& ag, std::size_t, std::uint64_t p) {
      return std::gcd<std::uint64_t, std::uint64_t>(p - 1, ag.g().order / p) == 1;
    });
  };
  return c;
}

inline Claim nc_quotient_correspondence() {
  Claim c{"nc-quotient-correspondence",
          "for N normal and N <= K, K is NC in G exactly when K/N is NC in G/N; D4 shows N <= K is needed",
          Expectation::MustHold,
          {"(G, N, K) triples of catalog groups of order at most 120", "Dihedral(4)"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::size_t triples = 0;
    for_each_group(ctx, rec, catalog_up_to(120), [&](const AnalyzedGroup& ag) {
      rec.checked();
      const Group& g = ag.g();
      const auto& lat = ag.lat();
      for (auto n : normal_subgroups(lat)) {
        if (n == lat.trivial_index() || n == lat.whole_index()) continue;
        const auto q = quotient_group(ag.analysis->group, ag.a().sub(n));
        const Group& qg = *q.group;
        for (std::size_t k = 0; k < lat.size(); ++k) {
          if (!ag.a().sub(n).members.is_subset_of(ag.a().sub(k).members)) continue;
          ++triples;
          Bits img(qg.order);
          ag.a().sub(k).members.for_each([&](Elem x) { img.set(q.projection.map[x]); });
          const bool upstairs = is_nc_subgroup(ag.a(), k);
          const bool downstairs = is_nc_subgroup(qg, from_closed_set(qg, img));
          if (upstairs != downstairs) rec.fail_sub(ag, k, "NC status changes in the quotient");
        }
      }
      (void)g;
    });
    const auto d4 = ctx.cache.get(spec("Dihedral", 4));
    nlohmann::ordered_json witness = nullptr;
    for (auto k : subgroups_of_order(d4->lat(), 2)) {
      if (is_nc_subgroup(d4->a(), k)) continue;
      for (auto n : normal_subgroups(d4->lat())) {
        const auto& N = d4->a().sub(n);
        if (N.order() != 4 || !is_abelian(d4->g(), N) || is_cyclic(d4->g(), N)) continue;
        if (d4->a().sub(k).members.is_subset_of(N.members)) continue;
        witness = {{"K", d4->a().sub(k).elements()}, {"N", N.elements()}, {"kNcInG", false}, {"imageNcInQuotient", true}};
        break;
      }
      if (!witness.is_null()) break;
    }
    require(rec, !witness.is_null(), d4->key, "witness for N not contained in K not reproduced");
    rec.finding({{"nkTriples", triples}, {"dihedral4", witness}});
  };
  return c;
}

/// Embedded left and right factors of a Direct spec, as element lists.
inline std::pair<std::vector<Elem>, std::vector<Elem>> direct_factors(const GroupSpec& s) {
  const auto left = catalog_build(s.args[0].spec.front());
  const auto right = catalog_build(s.args[1].spec.front());
  std::vector<Elem> l, r;
  for (std::size_t x = 0; x < left->order; ++x) l.push_back(static_cast<Elem>(x * right->order));
  for (std::size_t y = 0; y < right->order; ++y) r.push_back(static_cast<Elem>(y));
  return {l, r};
}

inline Claim nc_direct_factor() {
  Claim c{"nc-direct-factor",
          "for H <= K in G = K x T, H is NC in G exactly when it is NC in K; D4SemiS3 shows directness is needed",
          Expectation::MustHold,
          {"direct products in the catalog plus constructed ones", "D4SemiS3"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::vector<GroupSpec> u;
    for (const auto& s : default_catalog())
      if (s.constructor == "Direct") u.push_back(s);
    u.push_back(spec("Direct", spec("Dihedral", 4), spec("Cyclic", 3)));
    u.push_back(spec("Direct", spec("C2sqSemiC4"), spec("Cyclic", 3)));
    u.push_back(spec("Direct", spec("Sym", 4), spec("Cyclic", 5)));
    u.push_back(spec("Direct", spec("Sym", 3), spec("Sym", 3)));
    for_each_group(ctx, rec, u, [&](const AnalyzedGroup& ag) {
      rec.checked();
      const Group& g = ag.g();
      const auto [l, r] = direct_factors(*g.spec);
      for (const auto& elems : {l, r}) {
        const auto K = from_member_list(g, elems);
        for (std::size_t i = 0; i < ag.lat().size(); ++i) {
          const auto& h = ag.a().sub(i);
          if (!h.members.is_subset_of(K.members)) continue;
          if (is_nc_subgroup(ag.a(), i) != is_nc_in(g, K, h)) {
            rec.fail_sub(ag, i, "NC status differs between the factor and the product");
          }
        }
      }
    });
    const auto ce = ctx.cache.get(spec("D4SemiS3"));
    const auto v4 = reference_profile("C2xC2");
    const auto d4 = reference_profile("D4");
    nlohmann::ordered_json witness = nullptr;
    for (std::size_t d = 0; d < ce->lat().size() && witness.is_null(); ++d) {
      const auto& D = ce->a().sub(d);
      if (D.order() != 8 || !ce->lat().normal[d] || order_fingerprint(ce->g(), D) != d4) continue;
      for (auto v : subgroups_below(ce->lat(), d)) {
        const auto& V = ce->a().sub(v);
        if (V.order() != 4 || order_fingerprint(ce->g(), V) != v4) continue;
        if (!is_normal_in(ce->g(), D, V) || is_nc_subgroup(ce->a(), v)) continue;
        witness = {{"V", V.elements()},
                   {"D4", D.elements()},
                   {"normalizerOrder", ce->a().normalizer_of(v).order()},
                   {"closureOrder", ce->a().closure_of(v).order()}};
        break;
      }
    }
    require(rec, !witness.is_null(), ce->key, "semidirect witness not reproduced");
    rec.finding({{"group", ce->key}, {"witness", witness}});
  };
  return c;
}

inline Claim gu23_remarks() {
  Claim c{"gu23-remarks",
          "GU(2,3) has a C2xC4 subgroup that is NC and subnormal in G yet neither NC nor normal in an order-32 "
          "overgroup",
          Expectation::MustHold,
          {"GU2_3"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, {spec("GU2_3")}, [&](const AnalyzedGroup& ag) {
      rec.checked();
      const Group& g = ag.g();
      const auto& lat = ag.lat();
      const auto profile = reference_profile("C2xC4");
      std::size_t candidates = 0, ncInG = 0, subnormal = 0, ncButNotNcAbove = 0, full = 0;
      nlohmann::ordered_json firstNcNotAbove = nullptr;
      for (auto i : subgroups_of_order(lat, 8)) {
        const auto& h = ag.a().sub(i);
        if (order_fingerprint(g, h) != profile) continue;
        ++candidates;
        const bool nc = is_nc_subgroup(ag.a(), i);
        const bool sn = is_subnormal(g, h);
        ncInG += nc;
        subnormal += sn;
        bool failsAbove = false;
        for (auto k : subgroups_of_order(lat, 32)) {
          const auto& K = ag.a().sub(k);
          if (!h.members.is_subset_of(K.members)) continue;
          if (!is_nc_in(g, K, h) && !is_normal_in(g, K, h)) {
            failsAbove = true;
            if (nc && firstNcNotAbove.is_null()) firstNcNotAbove = {{"H", h.elements()}, {"K", K.elements()}};
          }
        }
        if (nc && failsAbove) ++ncButNotNcAbove;
        if (nc && sn && failsAbove) ++full;
      }
      rec.finding({{"c2xc4Subgroups", candidates},
                   {"ncInG", ncInG},
                   {"subnormalInG", subnormal},
                   {"ncInGButNotNcInOrder32Overgroup", ncButNotNcAbove},
                   {"ncSubnormalAndNotNcInOrder32Overgroup", full},
                   {"example", firstNcNotAbove}});
      if (full == 0) {
        rec.fail(ag.key, {},
                 "no C2xC4 subgroup is simultaneously NC, subnormal, and non-NC non-normal in an order-32 overgroup: "
                 "the NC ones are not subnormal and the subnormal ones are not NC");
      }
    });
  };
  return c;
}

}  // namespace fgt::claims

#endif  // FGT_CLAIMS_INHERITANCE_CLAIMS_HPP_
