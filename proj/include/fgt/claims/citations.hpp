#ifndef FGT_CLAIMS_CITATIONS_HPP_
#define FGT_CLAIMS_CITATIONS_HPP_

#include <map>
#include <string>

#include "fgt/claims/result.hpp"
#include "fgt/error.hpp"

namespace fgt {

/// Statement name and formula anchor for every registered claim.
inline const std::map<std::string, PaperRef>& citation_table() {
  static const std::map<std::string, PaperRef> table = {
      {"pnc-implies-t", {"PNC groups are T-groups", "H_{i-1} ^G \\leq H_i \\leq N_G (H_{i-1})"}},
      {"nilpotent-pnc-iff-dedekind", {"nilpotent PNC groups are Dedekind", "H \\unlhd \\unlhd G"}},
      {"solvable-pnc-supersolvable",
       {"solvable PNC groups are supersolvable; C2^2:C4 shows the converse fails", "N_G (C_4)=C_2 \\times C_4"}},
      {"nc-iff-commutator", {"commutator form of the NC condition", "[K,G] N_G (K) = G"}},
      {"solvable-pnc-equivalences", {"equivalent conditions satisfied by solvable PNC groups", "L = [G,G^{'}]"}},
      {"normalizer-closure", {"normalizers in solvable PNC groups have full normal closure", "(N_G (H))^G = G"}},
      {"normalizer-probe", {"proper-normalizer hypothesis for Dedekind groups", "N_G (H) <G"}},
      {"nilpotent-subgroups-dedekind",
       {"nilpotent subgroups of solvable PNC groups are Dedekind", "K \\unlhd \\unlhd H"}},
      {"min-prime-pnilpotent",
       {"solvable PNC groups are p-nilpotent for the least prime p", "p = \\min \\lbrace \\pi (G) \\rbrace"}},
      {"max-prime-order-normal", {"subgroups of the largest prime order are normal", "p = \\max(\\pi (G))"}},
      {"nonnilpotent-proper-solvable",
       {"solvable PNC non-nilpotent proper subgroups force solvability", "H < G, H non-nilpotent => H solvable PNC"}},
      {"sylow-in-closure", {"p-subgroups are Sylow in their normal closure", "P \\in {\\rm{Syl_p}} (P^G)"}},
      {"fstar-class", {"generalized Fitting subgroup has class at most 2", "F^{*} (G)' \\leq E(G)' F(G)'"}},
      {"structure-bundle", {"structural bounds for solvable PNC groups", "G' \\leq Fit (G)"}},
      {"component-lemma", {"derived subgroup of a product of commuting normal factors", "G' \\leq A' B'"}},
      {"coprime-direct-product", {"coprime direct products of PNC groups are PNC", "(|H|,|K|)=1"}},
      {"semidirect-c3-d4", {"semidirect variant of the coprime product", "N_G (S_3) =D_6, S_3 ^G \\leq D_6"}},
      {"quotient-closure", {"quotients of PNC groups are PNC", "N_G (T) /N = N_{G/N} (T/N)"}},
      {"normal-subgroup-closure",
       {"normal subgroups of PNC groups are PNC", "U^{U^G} N_{M} (U) = U^{M} N_{M} (U)"}},
      {"central-p-lift", {"lifting PNC through a central subgroup of order p", "\\langle x \\rangle \\leq Z(G)"}},
      {"central-p-lift-coprime", {"lifting PNC through a normal subgroup of order p, coprime form", "(p-1, |G|/p)=1"}},
      {"nc-quotient-correspondence", {"NC subgroups above a normal subgroup correspond", "G = N_G (K) K^G"}},
      {"nc-direct-factor", {"NC subgroups of a direct factor", "N_G (H) = T N_K (H)"}},
      {"gu23-remarks",
       {"NC subgroups of GU(2,3) and their order-32 overgroups", "N_G (C_2 \\times C_4) = C_4 ^2 < C_4\\wr C_2"}},
      {"dihedral-maximals", {"maximal subgroups of dihedral groups", "D_{\\frac{n}{p}}"}},
      {"dihedral-iff",
       {"dihedral PNC criterion", "D_n = \\langle a,b \\,|\\, a^n = b^2=1,\\,bab = a^{-1} \\rangle"}},
      {"dicyclic-iff", {"dicyclic PNC criterion", "a^{2} = b^{n},\\,o(a)= 4,\\,o(b) =2n"}},
      {"power-action-formulas",
       {"conjugation and product formulas for power actions", "(a^s)^{a_1 ^{k_1} a_2 ^{k_2} \\cdots a_n ^{k_n}}"}},
      {"valuation-criterion", {"valuation criterion for power actions", "v_{p_i} (t_i +1) = 0"}},
      {"sufficiency-hall", {"abelian Hall subgroup with Dedekind complement", "n \\equiv 1 \\,(\\!\\!\\!\\mod o(a))"}},
      {"min-non-pe-shapes",
       {"non-PE groups whose proper subgroups are solvable PNC", "|\\pi (G)| \\leq 2"}},
      {"min-non-pe-proper-on",
       {"non-PE groups whose proper subgroups are ON", "r^q \\equiv 1 \\,(\\!\\!\\!\\mod p)"}},
      {"on-characterization", {"structure of ON groups", "\\langle x^p \\rangle = O_p (G)"}},
      {"maximal-pnc-dichotomy", {"groups whose maximal subgroups are solvable PNC", "q^m 2^n"}},
      {"simple-second-maximal",
       {"simple groups whose second maximal subgroups are solvable PNC",
        "p^2 -1 \\not\\equiv 0 \\,(\\!\\!\\!\\mod 16)"}},
      {"nonsolvable-second-maximal",
       {"non-solvable non-simple groups whose second maximal subgroups are solvable PNC", "{\\rm{SL}} (2,3^r)"}},
      {"sn-probe", {"PNC status of symmetric groups", "S_n"}},
  };
  return table;
}

inline const PaperRef& citation(const std::string& id) {
  const auto& t = citation_table();
  auto it = t.find(id);
  if (it == t.end()) throw Error(ErrorCode::UnknownClaim, "no citation for " + id);
  return it->second;
}

}  // namespace fgt

#endif  // FGT_CLAIMS_CITATIONS_HPP_
