#pragma once

#include <string>
#include <vector>

#include "klcells/cells.hpp"

namespace klc::chars {

using cells::CellPartition;
using cells::FamilyAssignment;
using hecke::KLTable;
using num::FLaurent;

struct Report {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string s) {
    ok = false;
    failures.push_back(std::move(s));
  }
};

// chi_phi(T_w) for every character and element
struct HeckeCharacterValues {
  std::vector<std::vector<FLaurent>> values;  // [chi][w]
  const FLaurent& at(int chi, Elt w) const { return values[chi][w]; }
};

// The element of D = {z : a(z) = Delta(z)} in each left cell; needs kl.a_values().
std::vector<Elt> distinguished_per_left_cell(const KLTable& kl, const CellPartition& p);

// Values on c_w^dagger transported through the asymptotic algebra, extended to all T_w
// by the length recursion on conjugates.
HeckeCharacterValues hecke_character_values(const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                                            const FamilyAssignment& fam);

// Cell-module traces sum_chi <[C],chi> chi_phi(T_w) on class representatives (or every
// element), symmetry under w -> w^-1 and the specialization v -> 1.
Report verify_hecke_values(const HeckeCharacterValues& hv, const KLTable& kl, const CellPartition& p,
                           const CharacterTable& t, const std::vector<std::vector<long long>>& mult,
                           bool all_elements);

struct LeadingData {
  std::vector<int> a_char;
  std::vector<std::vector<AlgebraicNumber>> c;  // [chi][w]
  std::vector<AlgebraicNumber> f_char;
  std::vector<int> b_char;
  std::vector<char> special, exceptional;
  std::vector<AlgebraicNumber> n;  // n_w = sum_chi c_{w,chi} / f_chi
  std::vector<Elt> distinguished;  // n_w != 0
};

LeadingData leading_data(const HeckeCharacterValues& hv, const CharacterTable& t);
void classify_special_exceptional(LeadingData& ld, const CharacterTable& t);

// symmetry, global and per-cell orthogonality, support in cells, distinguished elements
Report verify_leading_data(const LeadingData& ld, const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                           const FamilyAssignment& fam, const std::vector<std::vector<long long>>& mult);

// exactly one special character per family; sign pattern of the special one on C cap C^-1
Report check_diamonds(const LeadingData& ld, const CellPartition& p, const CharacterTable& t,
                      const FamilyAssignment& fam);

// v -> -v twist: chi~ from (-1)^l(w) chi_phi(T_w)|_{v=-1}; index per character, -1 if not applicable
std::vector<int> twisted_characters(const HeckeCharacterValues& hv, const CharacterTable& t, const KLTable& kl);
Report check_twist_duality(const std::vector<int>& twist, const LeadingData& ld, const CharacterTable& t,
                           const FamilyAssignment& fam);

struct SmoothnessRow {
  int cell = 0;
  bool cond[6] = {false, false, false, false, false, false};
  bool smooth() const { return cond[0]; }
  bool consistent() const {
    for (bool c : cond)
      if (c != cond[0]) return false;
    return true;
  }
};

std::vector<SmoothnessRow> smoothness(const CellPartition& p, const FamilyAssignment& fam, const LeadingData& ld,
                                      const CharacterTable& t, const std::vector<std::vector<long long>>& mult);

// Ind_{W_J}^W(chi') truncated to the constituents psi with b_psi = b_chi'; multiplicities per psi
std::vector<long long> j_induction(const CharacterTable& parent, const cox::GenMask j, const CharacterTable& sub,
                                   int sub_char);
// parent ids of the elements of W_J, in the order of the subgroup's own ids
std::vector<Elt> embed_parabolic(const CoxeterGroup& parent, cox::GenMask j, const CoxeterGroup& sub);

// a_chi = phi(w0') and <Ind(sign'), chi> != 0 imply chi in the family of w0', for every J
Report check_parabolic_sign_families(const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                                     const FamilyAssignment& fam, const LeadingData& ld);

}  // namespace klc::chars
