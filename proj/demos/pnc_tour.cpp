// Builds a few groups, classifies them and prints one NC witness.
#include <iostream>

#include "fgt/fgt.hpp"

int main() {
  using namespace fgt;
  for (const char* text : {"Sym(3)", "Sym(4)", "Dihedral(4)", "Dihedral(6)", "Direct(Cyclic(5),Sym(3))", "Alt(5)"}) {
    const auto a = analyze(catalog_build(text));
    const auto p = classify_group(*a);
    std::cout << text << ": order " << p.order << ", " << p.subgroupCount << " subgroups, pnc=" << p.pnc
              << " supersolvable=" << p.supersolvable << " on=" << p.on << "\n";
    if (auto w = pnc_witness(*a)) {
      const auto& h = a->sub(*w);
      std::cout << "  first non-NC subgroup has order " << h.order() << ", normalizer order "
                << a->normalizer_of(*w).order() << ", normal closure order " << a->closure_of(*w).order() << "\n";
    }
  }

  AnalysisCache cache;
  const auto hits = counterexample_search(parse_profile_expr("supersolvable and not pnc"), parse_universe("catalog<=32"),
                                          cache);
  std::cout << "supersolvable but not PNC, order <= 32:";
  for (const auto& s : hits.matches) std::cout << " " << to_string(s);
  std::cout << "\n";

  std::cout << lattice_to_dot(*all_subgroups(catalog_build("Sym(3)")));
}
