#include <catch2/catch_amalgamated.hpp>

#include "fgt/fgt.hpp"
#include "oracles.hpp"

using namespace fgt;

namespace {

PredicateProfile profile_of(const char* text) { return classify_group(*analyze(catalog_build(text))); }

}  // namespace

TEST_CASE("subgroup predicates agree with naive definitions up to order 48", "[predicates][oracle]") {
  for (const auto& s : catalog_up_to(48)) {
    const auto a = analyze(catalog_build(s));
    const Group& g = a->g();
    INFO(to_string(s));
    bool allNc = true, allPrimeNe = true, allNormal = true, tGroup = true;
    for (std::size_t i = 0; i < a->lat().size(); ++i) {
      const auto e = a->sub(i).elements();
      INFO("subgroup " << i << " of order " << e.size());
      const bool nc = oracle::is_nc(g, e);
      const bool ne = oracle::is_ne(g, e);
      const bool normal = oracle::is_normal(g, e);
      const bool subnormal = oracle::is_subnormal(g, e);
      REQUIRE(is_nc_subgroup(*a, i) == nc);
      REQUIRE(is_nc_subgroup(g, a->sub(i)) == nc);
      REQUIRE(is_ne_subgroup(*a, i) == ne);
      REQUIRE(is_ne_subgroup(g, a->sub(i)) == ne);
      REQUIRE(is_h_subgroup(*a, i) == oracle::is_h(g, e));
      REQUIRE(is_pronormal(*a, i) == oracle::is_pronormal(g, e));
      REQUIRE(is_subnormal(g, a->sub(i)) == subnormal);
      REQUIRE(is_self_normalizing(*a, i) == (oracle::normalizer(g, e) == e));
      REQUIRE(satisfies_on_condition(*a, i) ==
              (normal || (oracle::normalizer(g, e) == e && oracle::normal_closure(g, e).size() == g.order)));
      allNc = allNc && nc;
      allNormal = allNormal && normal;
      if (oracle::is_prime(e.size())) allPrimeNe = allPrimeNe && ne;
      if (subnormal && !normal) tGroup = false;
    }
    const auto p = classify_group(*a);
    REQUIRE(p.pnc == allNc);
    REQUIRE(p.pe == allPrimeNe);
    REQUIRE(p.dedekind == allNormal);
    REQUIRE(p.tGroup == tGroup);
    REQUIRE(p.nilpotent == oracle::is_nilpotent(g));
    REQUIRE(p.solvable == oracle::is_solvable(g));
    if (p.nilpotent && g.order > 1) REQUIRE(*p.nilpotencyClass == oracle::nilpotency_class(g));
  }
}

TEST_CASE("subgroup-level implications", "[predicates][property]") {
  for (const auto& s : catalog_up_to(120)) {
    const auto a = analyze(catalog_build(s));
    const auto& lat = a->lat();
    INFO(to_string(s));
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (lat.normal[i]) {
        REQUIRE(is_nc_subgroup(*a, i));
        REQUIRE(is_ne_subgroup(*a, i));
        REQUIRE(is_h_subgroup(*a, i));
        REQUIRE(is_normally_embedded(lat, i));
      }
      if (satisfies_on_condition(*a, i)) REQUIRE(is_nc_subgroup(*a, i));
      if (lat.maximal[i]) REQUIRE(is_pronormal(*a, i));
    }
    for (auto p : prime_divisors(a->g().order)) {
      for (std::size_t i : sylow_subgroups(lat, p)) {
        REQUIRE(is_pronormal(*a, i));
        REQUIRE(is_normally_embedded(lat, i));
      }
    }
  }
}

TEST_CASE("group classes form the expected hierarchy", "[predicates][property]") {
  for (const auto& s : default_catalog()) {
    const auto p = classify_group(*analyze(catalog_build(s)));
    INFO(to_string(s));
    if (p.abelian) REQUIRE(p.dedekind);
    if (p.dedekind) REQUIRE(p.pnc);
    if (p.dedekind) REQUIRE(p.tGroup);
    if (p.nilpotent) REQUIRE(p.supersolvable);
    if (p.supersolvable) REQUIRE(p.solvable);
    if (p.metabelian) REQUIRE(p.solvable);
    if (p.simple) REQUIRE((p.abelian || !p.solvable));
    if (p.nilpotent) REQUIRE(p.tGroup == p.dedekind);
  }
}

TEST_CASE("reference predicate values", "[predicates]") {
  REQUIRE(profile_of("Sym(3)").pnc);
  REQUIRE_FALSE(profile_of("Sym(4)").pnc);
  REQUIRE(profile_of("Sym(5)").pnc);
  REQUIRE_FALSE(profile_of("Dihedral(4)").pnc);
  REQUIRE_FALSE(profile_of("Alt(4)").pnc);
  REQUIRE(profile_of("Dicyclic(2)").dedekind);
  REQUIRE_FALSE(profile_of("Dicyclic(2)").abelian);
  REQUIRE_FALSE(profile_of("Direct(Cyclic(3),Sym(3))").pnc);
  REQUIRE(profile_of("Direct(Cyclic(5),Sym(3))").pnc);
  REQUIRE(profile_of("Alt(5)").simple);
  REQUIRE(profile_of("PSL2(7)").simple);
  REQUIRE_FALSE(profile_of("SL2(5)").simple);
  REQUIRE(profile_of("Cyclic(7)").simple);
  REQUIRE_FALSE(profile_of("Sym(4)").supersolvable);
  REQUIRE(profile_of("Sym(4)").solvable);
  REQUIRE_FALSE(profile_of("Alt(4)").supersolvable);
  REQUIRE(profile_of("Dihedral(4)").supersolvable);
  REQUIRE(*profile_of("Dihedral(4)").nilpotencyClass == 2);
  REQUIRE(*profile_of("Dihedral(8)").nilpotencyClass == 3);
  REQUIRE(*profile_of("Quaternion(16)").nilpotencyClass == 3);
  REQUIRE(*profile_of("HeisenbergLike(3,1)").nilpotencyClass == 2);
  const auto c2sq = profile_of("C2sqSemiC4");
  REQUIRE(c2sq.supersolvable);
  REQUIRE_FALSE(c2sq.pnc);
  const auto c5s3 = profile_of("Direct(Cyclic(5),Sym(3))");
  REQUIRE(c5s3.prime(2)->pNilpotent);
  REQUIRE_FALSE(c5s3.prime(3)->pNilpotent);
}

TEST_CASE("structure subgroups", "[structure]") {
  const auto s4 = all_subgroups(catalog_build("Sym(4)"));
  REQUIRE(fitting_subgroup(*s4).order() == 4);
  REQUIRE(is_normal(s4->g(), fitting_subgroup(*s4)));
  REQUIRE(frattini_subgroup(*s4).order() == 1);
  REQUIRE(generalized_fitting(*s4).fstar.order() == 4);
  REQUIRE(p_length(*s4, 2) == 2);
  REQUIRE(p_length(*s4, 3) == 1);
  REQUIRE(fitting_height(*s4) == 3);

  const auto q8 = all_subgroups(catalog_build("Dicyclic(2)"));
  REQUIRE(frattini_subgroup(*q8) == center(q8->g()));
  REQUIRE(frattini_subgroup(*q8).order() == 2);
  REQUIRE(fitting_subgroup(*q8).order() == 8);

  const auto a5 = all_subgroups(catalog_build("Alt(5)"));
  const auto f = generalized_fitting(*a5);
  REQUIRE(f.fitting.order() == 1);
  REQUIRE(f.fstar.order() == 60);
  REQUIRE(f.layer.order() == 60);
  REQUIRE_FALSE(f.fstarClass.has_value());

  const auto sl25 = all_subgroups(catalog_build("SL2(5)"));
  REQUIRE(generalized_fitting(*sl25).fstar.order() == 120);
  REQUIRE(fitting_subgroup(*sl25).order() == 2);

  REQUIRE(derived_series(*catalog_build("Sym(4)")).terms.size() == 4);
  REQUIRE(is_metabelian(*catalog_build("Sym(3)")));
  REQUIRE_FALSE(is_metabelian(*catalog_build("Sym(4)")));
  REQUIRE(p_core(*s4, 2).order() == 4);
  REQUIRE(p_core(*s4, 3).order() == 1);
}
