#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fgt/fgt.hpp"
#include "oracles.hpp"

using namespace fgt;

namespace {

std::vector<oracle::ElemSet> lattice_sets(const SubgroupLattice& lat) {
  std::vector<oracle::ElemSet> out;
  for (const auto& h : lat.subgroups) out.push_back(h.elements());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lattice matches the exhaustive subset oracle up to order 24", "[lattice][oracle]") {
  std::set<std::string> seen;
  std::vector<GroupSpec> specs = catalog_up_to(24);
  for (int n = 2; n <= 12; ++n) specs.push_back(spec("Dihedral", n));
  for (const auto& s : specs) {
    if (!seen.insert(to_string(s)).second) continue;
    const auto g = catalog_build(s);
    INFO(to_string(s));
    const auto lat = all_subgroups(g);
    REQUIRE(lattice_sets(*lat) == oracle::exhaustive_subgroups(*g));
  }
}

TEST_CASE("known subgroup counts", "[lattice]") {
  const std::vector<std::pair<const char*, std::size_t>> known = {
      {"Sym(3)", 6},   {"Sym(4)", 30},  {"Alt(4)", 10},  {"Dihedral(4)", 10}, {"Dicyclic(2)", 6},
      {"Alt(5)", 59},  {"Sym(5)", 156}, {"PSL2(7)", 179}, {"SL2(3)", 15},     {"ElementaryAbelian(2,3)", 16},
      {"ElementaryAbelian(3,2)", 6}, {"Cyclic(12)", 6}};
  for (auto [text, count] : known) {
    INFO(text);
    REQUIRE(all_subgroups(catalog_build(text))->size() == count);
  }
  for (std::uint64_t n = 2; n <= 30; ++n) {
    INFO("Dihedral(" << n << ")");
    REQUIRE(all_subgroups(catalog_build(spec("Dihedral", static_cast<int>(n))))->size() ==
            oracle::dihedral_subgroup_count(n));
  }
}

TEST_CASE("lattice bookkeeping", "[lattice]") {
  for (const auto& s : catalog_up_to(60)) {
    const auto g = catalog_build(s);
    const auto lat = all_subgroups(g);
    INFO(to_string(s));
    REQUIRE(lat->subgroups[lat->trivial_index()].order() == 1);
    REQUIRE(lat->subgroups[lat->whole_index()].order() == g->order);
    for (std::size_t i = 0; i < lat->size(); ++i) {
      const auto& h = lat->subgroups[i];
      REQUIRE(lat->index_of(h) == i);
      REQUIRE(g->order % h.order() == 0);
      REQUIRE(lat->normal[i] == oracle::is_normal(*g, h.elements()));
    }
    // Maximal means covered only by the whole group.
    const auto& covers = lat->lower_covers();
    std::set<std::size_t> maxes(covers[lat->whole_index()].begin(), covers[lat->whole_index()].end());
    for (std::size_t i = 0; i + 1 < lat->size(); ++i) REQUIRE(lat->maximal[i] == (maxes.count(i) == 1));
    for (std::size_t i = 0; i < lat->size(); ++i) {
      for (std::size_t j : covers[i]) {
        REQUIRE(lat->subgroups[j].members.is_subset_of(lat->subgroups[i].members));
        for (std::size_t k = 0; k < lat->size(); ++k) {
          const auto& m = lat->subgroups[k].members;
          if (k == i || k == j) continue;
          REQUIRE_FALSE((lat->subgroups[j].members.is_subset_of(m) && m.is_subset_of(lat->subgroups[i].members)));
        }
      }
    }
  }
}

TEST_CASE("orbit-stabilizer and product-size identities up to order 120", "[lattice][property]") {
  std::mt19937 rng(97);
  for (const auto& s : catalog_up_to(120)) {
    const auto g = catalog_build(s);
    const auto lat = all_subgroups(g);
    INFO(to_string(s));
    std::vector<std::size_t> classSize(lat->classCount, 0);
    for (std::size_t i = 0; i < lat->size(); ++i) classSize[lat->classId[i]]++;
    for (std::size_t i = 0; i < lat->size(); ++i) {
      const auto& h = lat->subgroups[i];
      const auto n = normalizer(*g, h);
      REQUIRE(classSize[lat->classId[i]] * n.order() == g->order);
      REQUIRE(h.members.is_subset_of(n.members));
    }
    std::uniform_int_distribution<std::size_t> pick(0, lat->size() - 1);
    for (int t = 0; t < 60; ++t) {
      const auto& a = lat->subgroups[pick(rng)];
      const auto& b = lat->subgroups[pick(rng)];
      const std::size_t meetOrder = a.members.intersection_count(b.members);
      const std::size_t expected = a.order() * b.order() / meetOrder;
      REQUIRE(subgroup_product(*g, a, b).size == expected);
      REQUIRE(literal_product_size(*g, a, b) == expected);
      REQUIRE(oracle::product_size(*g, a.elements(), b.elements()) == expected);
      REQUIRE(meet(*g, a, b).order() == meetOrder);
      REQUIRE(join(*g, a, b).elements() == oracle::closure(*g, [&] {
                auto v = a.elements();
                auto w = b.elements();
                v.insert(v.end(), w.begin(), w.end());
                return v;
              }()));
    }
  }
}

TEST_CASE("subgroup operations agree with naive versions", "[subgroup][oracle]") {
  for (const auto& s : catalog_up_to(64)) {
    const auto g = catalog_build(s);
    const auto lat = all_subgroups(g);
    INFO(to_string(s));
    for (const auto& h : lat->subgroups) {
      const auto e = h.elements();
      REQUIRE(normalizer(*g, h).elements() == oracle::normalizer(*g, e));
      REQUIRE(normal_closure(*g, h).elements() == oracle::normal_closure(*g, e));
      REQUIRE(generated(*g, h.gens) == h);
    }
    std::size_t zc = 0;
    for (Elem x = 0; x < g->order; ++x) {
      bool central = true;
      for (Elem y = 0; y < g->order && central; ++y) central = g->op(x, y) == g->op(y, x);
      zc += central;
      REQUIRE(center(*g).contains(x) == central);
    }
    REQUIRE(center(*g).order() == zc);
  }
}

TEST_CASE("lattice queries", "[lattice]") {
  const auto s4 = all_subgroups(catalog_build("Sym(4)"));
  REQUIRE(maximal_subgroups(*s4).size() == 8);  // A4, three D4, four S3
  REQUIRE(sylow_subgroups(*s4, 2).size() == 3);
  REQUIRE(sylow_subgroups(*s4, 3).size() == 4);
  REQUIRE(subgroups_of_order(*s4, 4).size() == 7);
  REQUIRE(normal_subgroups(*s4).size() == 4);
  REQUIRE(minimal_subgroups(*s4).size() == 13);
  for (std::size_t i : second_maximal_subgroups(*s4)) {
    bool below = false;
    for (std::size_t m : maximal_subgroups(*s4)) {
      for (std::size_t k : maximal_in(*s4, m)) below = below || k == i;
    }
    REQUIRE(below);
  }
  const auto a5 = all_subgroups(catalog_build("Alt(5)"));
  REQUIRE(maximal_subgroups(*a5).size() == 21);  // 5 A4, 6 D5, 10 S3
  REQUIRE(sylow_subgroups(*a5, 5).size() == 6);
}

TEST_CASE("lattice export", "[lattice]") {
  const auto lat = all_subgroups(catalog_build("Dihedral(4)"));
  const auto j = lattice_to_json(*lat);
  REQUIRE(j.dump().find("\"subgroups\"") != std::string::npos);
  const auto dot = lattice_to_dot(*lat);
  REQUIRE(dot.rfind("digraph", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++edges;
  std::size_t coverCount = 0;
  for (const auto& c : lat->lower_covers()) coverCount += c.size();
  REQUIRE(edges == coverCount);
}

TEST_CASE("lattice budget is enforced", "[lattice]") {
  const auto saved = lattice_budget();
  set_lattice_budget({20, saved.maxJoins});
  bool threw = false;
  try {
    all_subgroups(catalog_build("Sym(4)"));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::BudgetExceeded;
  }
  set_lattice_budget(saved);
  REQUIRE(threw);
  REQUIRE(all_subgroups(catalog_build("Sym(4)"))->size() == 30);
}
