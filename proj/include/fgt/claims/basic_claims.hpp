#ifndef FGT_CLAIMS_BASIC_CLAIMS_HPP_
#define FGT_CLAIMS_BASIC_CLAIMS_HPP_

#include <numeric>
#include <string>
#include <vector>

#include "fgt/claims/claim.hpp"
#include "fgt/claims/shapes.hpp"

namespace fgt::claims {

inline bool is_prime_power_order(std::size_t n) { return n > 1 && prime_divisors(n).size() == 1; }

inline bool subgroups_normal_in(const AnalyzedGroup& ag, std::size_t i) {
  const auto& h = ag.a().sub(i);
  for (auto k : subgroups_below(ag.lat(), i))
    if (!is_normal_in(ag.g(), h, ag.a().sub(k))) return false;
  return true;
}

inline void require(ClaimRecorder& rec, bool ok, const std::string& group, const std::string& note) {
  if (!ok) rec.fail(group, {}, note);
}

inline Claim pnc_implies_t() {
  Claim c{"pnc-implies-t", "every PNC group is a T-group", Expectation::MustHold, spec_names(default_catalog()),
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      rec.checked();
      if (!ag.profile.pnc) return;
      if (auto w = t_witness(ag.a())) rec.fail_sub(ag, *w, "subnormal but not normal in a PNC group");
    });
  };
  return c;
}

inline Claim nilpotent_pnc_iff_dedekind() {
  Claim c{"nilpotent-pnc-iff-dedekind", "a nilpotent group is PNC exactly when it is Dedekind", Expectation::Iff,
          {"nilpotent members of the catalog"}, {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!ag.profile.nilpotent) return;
      rec.checked();
      rec.side(ag.profile.dedekind);
      if (ag.profile.pnc == ag.profile.dedekind) return;
      if (auto w = pnc_witness(ag.a())) {
        rec.fail_sub(ag, *w, "Dedekind but not NC");
      } else {
        const auto nn = first_failure(ag.a(), [&](std::size_t i) { return ag.lat().normal[i]; });
        rec.fail_sub(ag, nn.value_or(0), "PNC nilpotent with a non-normal subgroup");
      }
    });
  };
  return c;
}

inline Claim solvable_pnc_supersolvable() {
  Claim c{"solvable-pnc-supersolvable",
          "solvable PNC groups are supersolvable; C2sqSemiC4 is supersolvable and not PNC",
          Expectation::MustHold,
          {"solvable PNC members of the catalog", "C2sqSemiC4"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      if (!ag.profile.supersolvable) rec.fail(ag.key, {}, "solvable PNC but not supersolvable");
    });
    const auto ag = ctx.cache.get(spec("C2sqSemiC4"));
    rec.checked();
    require(rec, ag->profile.supersolvable && !ag->profile.pnc, ag->key, "converse witness not reproduced");
    const auto c2c4 = reference_profile("C2xC4");
    std::vector<std::size_t> hits;
    for (auto i : subgroups_of_order(ag->lat(), 4)) {
      const auto& h = ag->a().sub(i);
      if (ag->lat().normal[i] || !is_cyclic(ag->g(), h)) continue;
      const auto& n = ag->a().normalizer_of(i);
      if (order_fingerprint(ag->g(), n) != c2c4) continue;
      if (!ag->a().closure_of(i).members.is_subset_of(n.members)) continue;
      if (is_nc_subgroup(ag->a(), i)) continue;
      hits.push_back(i);
    }
    require(rec, !hits.empty(), ag->key, "no C4 with C2xC4 normalizer containing its normal closure");
    nlohmann::ordered_json f;
    f["group"] = ag->key;
    f["supersolvable"] = ag->profile.supersolvable;
    f["pnc"] = ag->profile.pnc;
    f["cyclicSubgroupsOfOrder4WithC2xC4Normalizer"] = hits;
    rec.finding(std::move(f));
  };
  return c;
}

inline Claim nc_iff_commutator() {
  Claim c{"nc-iff-commutator", "H is NC exactly when [H,G] N_G(H) = G", Expectation::MustHold,
          {"every subgroup of every catalog group of order at most 120"}, {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::size_t pairs = 0;
    for_each_group(ctx, rec, catalog_up_to(120), [&](const AnalyzedGroup& ag) {
      rec.checked();
      const auto w = whole_group(ag.g());
      for (std::size_t i = 0; i < ag.lat().size(); ++i) {
        ++pairs;
        const bool nc = is_nc_subgroup(ag.a(), i);
        const auto k = commutator_subgroup(ag.g(), ag.a().sub(i), w);
        const bool alt = subgroup_product(ag.g(), k, ag.a().normalizer_of(i)).equalsG;
        if (nc != alt) rec.fail_sub(ag, i, "NC status differs from the commutator form");
      }
    });
    rec.finding({{"subgroupsChecked", pairs}});
  };
  return c;
}

/// Index of the first failing item (1-11) for a solvable PNC group, or 0.
inline int first_failing_equivalence(const AnalyzedGroup& ag, std::size_t& witness) {
  const auto& a = ag.a();
  const auto& lat = ag.lat();
  const Group& g = ag.g();
  witness = 0;
  if (!ag.profile.tGroup) return 1;
  {
    const auto w = whole_group(g);
    const auto L = commutator_subgroup(g, w, derived_subgroup(g));
    const std::size_t m = g.order / L.order();
    bool ok = is_abelian(g, L) && std::gcd(L.order(), m) == 1;
    if (ok) {
      ok = false;
      for (auto i : subgroups_of_order(lat, m))
        if (subgroups_normal_in(ag, i)) ok = true;
    }
    if (!ok) return 2;
  }
  if (!(ag.profile.supersolvable && ag.profile.tGroup)) return 3;
  for (auto i : class_representatives(lat)) {
    if (!is_t_group(*analyze_subgroup(ag, i)->analysis)) {
      witness = i;
      return 4;
    }
  }
  for (const auto& pp : ag.profile.primes)
    if (!pp.satisfiesCp) return 5;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const bool pgroup = is_prime_power_order(a.sub(i).order());
    witness = i;
    if (pgroup && !is_pronormal(a, i)) return 6;
    if (!is_h_subgroup(a, i)) return 7;
    if (pgroup && !is_h_subgroup(a, i)) return 8;
    if (!is_normally_embedded(lat, i)) return 9;
    if (!is_ne_subgroup(a, i)) return 10;
    if (pgroup && !is_ne_subgroup(a, i)) return 11;
  }
  witness = 0;
  return 0;
}

inline Claim solvable_pnc_equivalences() {
  Claim c{"solvable-pnc-equivalences",
          "solvable PNC groups satisfy the T, Hall-complement, T-bar, Cp, pronormality, H-subgroup, "
          "normally embedded and NE conditions",
          Expectation::MustHold,
          {"solvable PNC members of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      std::size_t w = 0;
      if (int item = first_failing_equivalence(ag, w)) rec.fail_sub(ag, w, "item " + std::to_string(item) + " fails");
    });
  };
  return c;
}

inline Claim normalizer_closure() {
  Claim c{"normalizer-closure", "(N_G(H))^G = G for every subgroup of a solvable PNC group",
          Expectation::MustHold, {"solvable PNC members of the catalog"}, {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      for (std::size_t i = 0; i < ag.lat().size(); ++i) {
        if (ag.a().closureIdx[ag.a().normalizerIdx[i]] != ag.lat().whole_index()) {
          rec.fail_sub(ag, i, "normal closure of the normalizer is proper");
        }
      }
    });
  };
  return c;
}

inline Claim normalizer_probe() {
  Claim c{"normalizer-probe",
          "the hypothesis N_G(H) < G and N_G(H) = G is contradictory; the probe reports, for each solvable PNC "
          "group, how many subgroups have a proper normalizer next to the Dedekind flag",
          Expectation::ReportOnly,
          {"solvable PNC members of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      std::size_t proper = 0;
      for (std::size_t i = 0; i < ag.lat().size(); ++i)
        if (ag.a().normalizerIdx[i] != ag.lat().whole_index()) ++proper;
      rec.finding({{"group", ag.key}, {"properNormalizers", proper}, {"dedekind", ag.profile.dedekind}});
    });
  };
  return c;
}

inline Claim nilpotent_subgroups_dedekind() {
  Claim c{"nilpotent-subgroups-dedekind", "nilpotent subgroups of solvable PNC groups are Dedekind",
          Expectation::MustHold, {"solvable PNC members of the catalog"}, {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      for (auto i : class_representatives(ag.lat())) {
        if (!nilpotency(ag.g(), ag.a().sub(i)).nilpotent) continue;
        if (!subgroups_normal_in(ag, i)) rec.fail_sub(ag, i, "nilpotent subgroup that is not Dedekind");
      }
    });
  };
  return c;
}

inline Claim min_prime_pnilpotent() {
  Claim c{"min-prime-pnilpotent",
          "solvable PNC groups are p-nilpotent for the least prime divisor p; C5xS3 is not 3-nilpotent",
          Expectation::MustHold,
          {"solvable PNC members of the catalog", "Direct(Cyclic(5),Sym(3))"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag) || ag.g().order == 1) return;
      rec.checked();
      const auto p = prime_divisors(ag.g().order).front();
      if (!ag.profile.prime(p)->pNilpotent) rec.fail(ag.key, {}, "not p-nilpotent for p = " + std::to_string(p));
    });
    const auto ag = ctx.cache.get(spec("Direct", spec("Cyclic", 5), spec("Sym", 3)));
    std::vector<std::size_t> nonNormal10;
    for (auto i : subgroups_of_order(ag->lat(), 10))
      if (!ag->lat().normal[i]) nonNormal10.push_back(i);
    const bool reproduced = solvable_pnc(*ag) && !ag->profile.prime(3)->pNilpotent &&
                            ag->profile.prime(2)->pNilpotent && !nonNormal10.empty();
    require(rec, reproduced, ag->key, "non-minimal-prime witness not reproduced");
    rec.finding({{"group", ag->key},
                 {"pnc", ag->profile.pnc},
                 {"threeNilpotent", ag->profile.prime(3)->pNilpotent},
                 {"twoNilpotent", ag->profile.prime(2)->pNilpotent},
                 {"nonNormalSubgroupsOfOrder10", nonNormal10}});
  };
  return c;
}

inline Claim max_prime_order_normal() {
  Claim c{"max-prime-order-normal",
          "in a PNC group, subgroups of order p = max prime divisor are normal; asserted for solvable groups, "
          "reported for the rest",
          Expectation::MustHold,
          {"PNC members of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!ag.profile.pnc || ag.g().order == 1) return;
      const auto p = prime_divisors(ag.g().order).back();
      std::optional<std::size_t> bad;
      for (auto i : subgroups_of_order(ag.lat(), p))
        if (!ag.lat().normal[i] && !bad) bad = i;
      if (ag.profile.solvable) {
        rec.checked();
        if (bad) rec.fail_sub(ag, *bad, "non-normal subgroup of order " + std::to_string(p));
      } else {
        rec.finding({{"group", ag.key},
                     {"solvable", false},
                     {"p", p},
                     {"holds", !bad.has_value()},
                     {"witness", bad ? nlohmann::ordered_json(ag.a().sub(*bad).elements()) : nullptr}});
      }
    });
  };
  return c;
}

inline Claim nonnilpotent_proper_solvable() {
  Claim c{"nonnilpotent-proper-solvable",
          "if every non-nilpotent proper subgroup is solvable PNC then the group is solvable",
          Expectation::MustHold,
          {"full catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      rec.checked();
      if (ag.profile.solvable) return;
      std::optional<std::size_t> blocker;
      for (auto i : class_representatives(ag.lat())) {
        if (i == ag.lat().whole_index()) continue;
        if (nilpotency(ag.g(), ag.a().sub(i)).nilpotent) continue;
        if (!solvable_pnc(*analyze_subgroup(ag, i))) {
          blocker = i;
          break;
        }
      }
      if (!blocker) {
        rec.fail(ag.key, {}, "hypothesis holds for a non-solvable group");
        return;
      }
      rec.finding({{"group", ag.key}, {"blockingSubgroup", ag.a().sub(*blocker).elements()}});
    });
  };
  return c;
}

inline Claim sylow_in_closure() {
  Claim c{"sylow-in-closure", "every p-subgroup P is Sylow in P^G and |N_G(P)|_p = |G|_p", Expectation::MustHold,
          {"solvable PNC members of the catalog"}, {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      for (std::size_t i = 0; i < ag.lat().size(); ++i) {
        const auto n = ag.a().sub(i).order();
        if (!is_prime_power_order(n)) continue;
        const auto p = prime_divisors(n).front();
        if (p_part(ag.a().closure_of(i).order(), p) != n) rec.fail_sub(ag, i, "not Sylow in its normal closure");
        if (p_part(ag.a().normalizer_of(i).order(), p) != p_part(ag.g().order, p)) {
          rec.fail_sub(ag, i, "normalizer misses part of a Sylow subgroup");
        }
      }
    });
  };
  return c;
}

inline Claim fstar_class() {
  Claim c{"fstar-class",
          "F*(G) has nilpotency class at most 2 for PNC groups; asserted for solvable groups, reported for the rest",
          Expectation::MustHold,
          {"PNC members of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!ag.profile.pnc) return;
      const auto gf = generalized_fitting(ag.lat());
      if (ag.profile.solvable) {
        rec.checked();
        if (!gf.fstarClass || *gf.fstarClass > 2) rec.fail(ag.key, gf.fstar.elements(), "F* class exceeds 2");
        return;
      }
      rec.finding({{"group", ag.key},
                   {"fstarOrder", gf.fstar.order()},
                   {"fstarClass", gf.fstarClass ? nlohmann::ordered_json(*gf.fstarClass) : "NotNilpotent"},
                   {"components", gf.components.size()}});
    });
  };
  return c;
}

/// Index of the first failing structural item (1-8) for a solvable PNC group, or 0.
inline int first_failing_structure(const AnalyzedGroup& ag, nlohmann::ordered_json& info) {
  const Group& g = ag.g();
  const auto& lat = ag.lat();
  const auto F = fitting_subgroup(lat);
  const auto height = fitting_height(lat);
  info["fittingHeight"] = height;
  if (height > 3) return 1;
  std::optional<std::size_t> k;
  for (auto i : class_representatives(lat)) {
    if (!subgroup_product(g, ag.a().sub(i), F).equalsG) continue;
    if (analyze_subgroup(ag, i)->profile.pe) {
      k = i;
      break;
    }
  }
  if (!k) return 2;
  info["smallestPeSupplementOrder"] = ag.a().sub(*k).order();
  const bool odd = g.order % 2 == 1;
  const auto d = derived_subgroup(g);
  if (odd && meet(g, d, center(g)).order() != 1) return 3;
  for (auto p : prime_divisors(g.order)) {
    if (p_length(lat, p) > 1) return 4;
    bool perfect = true;
    for (auto i : normal_subgroups(lat))
      if (ag.a().sub(i).order() * p == g.order) perfect = false;
    if (!ag.profile.prime(p)->pNilpotent && !perfect) return 5;
  }
  if (!is_abelian(g, frattini_subgroup(lat))) return 6;
  if (!ag.profile.metabelian) return 7;
  if (odd && !d.members.is_subset_of(F.members)) return 8;
  return 0;
}

inline Claim structure_bundle() {
  Claim c{"structure-bundle",
          "solvable PNC groups have Fitting height at most 3, a PE supplement of F(G), p-length at most 1, are "
          "p-nilpotent or p-perfect, have abelian Frattini subgroup, are metabelian, and in odd order satisfy "
          "G' meet Z(G) = 1 and G' <= F(G)",
          Expectation::MustHold,
          {"solvable PNC members of the catalog"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      if (!solvable_pnc(ag)) return;
      rec.checked();
      nlohmann::ordered_json info;
      info["group"] = ag.key;
      if (int item = first_failing_structure(ag, info)) rec.fail(ag.key, {}, "item " + std::to_string(item) + " fails");
      rec.finding(std::move(info));
    });
  };
  return c;
}

inline Claim component_lemma() {
  Claim c{"component-lemma",
          "G' <= A'B' whenever G = AB with A, B normal and elementwise commuting; also for the layer",
          Expectation::MustHold,
          {"normal pairs of catalog groups of order at most 120", "layers of catalog groups"},
          {}};
  c.check = [](ClaimContext& ctx, ClaimRecorder& rec) {
    std::size_t pairs = 0, layers = 0;
    for_each_group(ctx, rec, catalog_up_to(120), [&](const AnalyzedGroup& ag) {
      rec.checked();
      const Group& g = ag.g();
      const auto d = derived_subgroup(g);
      const auto ns = normal_subgroups(ag.lat());
      for (auto i : ns) {
        for (auto j : ns) {
          if (j < i) continue;
          const auto& A = ag.a().sub(i);
          const auto& B = ag.a().sub(j);
          if (!subgroup_product(g, A, B).equalsG || commutator_subgroup(g, A, B).order() != 1) continue;
          ++pairs;
          const auto ab = join(g, commutator_subgroup(g, A, A), commutator_subgroup(g, B, B));
          if (!d.members.is_subset_of(ab.members)) rec.fail(ag.key, {}, "G' exceeds A'B'");
        }
      }
    });
    for_each_group(ctx, rec, default_catalog(), [&](const AnalyzedGroup& ag) {
      const auto gf = generalized_fitting(ag.lat());
      if (gf.components.empty()) return;
      ++layers;
      rec.checked();
      const Group& g = ag.g();
      Subgroup prod = trivial_subgroup(g);
      for (const auto& e : gf.components) prod = join(g, prod, commutator_subgroup(g, e, e));
      if (!commutator_subgroup(g, gf.layer, gf.layer).members.is_subset_of(prod.members)) {
        rec.fail(ag.key, gf.layer.elements(), "layer derived subgroup exceeds the product of component derived subgroups");
      }
    });
    rec.finding({{"commutingNormalPairs", pairs}, {"groupsWithComponents", layers}});
  };
  return c;
}

}  // namespace fgt::claims

#endif  // FGT_CLAIMS_BASIC_CLAIMS_HPP_
