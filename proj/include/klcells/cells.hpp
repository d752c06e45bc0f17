#pragma once

#include <string>
#include <vector>

#include "klcells/chartable.hpp"
#include "klcells/hecke.hpp"

namespace klc::cells {

using chars::CharacterTable;
using chars::ClassFunction;
using chars::AlgebraicNumber;
using cox::Elt;
using hecke::KLTable;
using num::Integer;
using num::LaurentPoly;

struct CellPartition {
  std::vector<std::vector<Elt>> left, right, two_sided;  // each sorted; cells ordered by minimal element
  std::vector<int> left_of, right_of, two_sided_of;
  // below[i][j] != 0 iff cell j <= cell i in the induced preorder
  std::vector<std::vector<char>> left_below, right_below, two_sided_below;

  bool leq_left(Elt x, Elt y) const { return left_below[left_of[y]][left_of[x]]; }
  bool leq_right(Elt x, Elt y) const { return right_below[right_of[y]][right_of[x]]; }
  bool leq_two_sided(Elt x, Elt y) const { return two_sided_below[two_sided_of[y]][two_sided_of[x]]; }
  // left cells contained in a two-sided cell
  std::vector<int> left_cells_in(int two_sided_cell) const;
};

// Preorders from generator products c_s c_w (or all products c_x c_w with full_sweep).
CellPartition compute_cells(const KLTable& kl, bool full_sweep = false);

struct SparseColumn {
  std::vector<std::pair<int, LaurentPoly>> entries;  // (row, value)
};

// V_C with c_x^dagger . e_y = sum_{z in C} h_{x,y,z} e_z.
struct CellModule {
  std::vector<Elt> cell;
  std::vector<int> weights;
  std::vector<std::vector<SparseColumn>> dagger_action;  // [s][y]: column y of the matrix of c_s^dagger

  int dim() const { return static_cast<int>(cell.size()); }
  // T_s acts by v^{phi(s)} - (matrix of c_s^dagger)
  std::vector<LaurentPoly> apply_t(int s, const std::vector<LaurentPoly>& x) const;
  LaurentPoly trace_t(const cox::CoxeterGroup& g, Elt w) const;
  // quadratic and braid relations, checked on every basis vector
  bool check_relations(const cox::CoxeterGroup& g, std::string* why = nullptr) const;
  // traces at v = 1 on class representatives
  ClassFunction specialized_character(const cox::CoxeterGroup& g) const;
};

CellModule cell_module(const KLTable& kl, const std::vector<Elt>& cell);
ClassFunction specialized_cell_character(const CellModule& m, const CharacterTable& t);
// [C] for every left cell, in partition order; relation-checks each module first
std::vector<ClassFunction> left_cell_characters(const KLTable& kl, const CellPartition& p, const CharacterTable& t);
std::vector<std::vector<long long>> left_cell_multiplicities(const CharacterTable& t, const std::vector<ClassFunction>& cell_chars);

struct FamilyAssignment {
  std::vector<int> family_of_char;            // character -> two-sided cell
  std::vector<std::vector<int>> members;      // two-sided cell -> characters
};

// left_cell_mults[c][chi] = <[C], chi>
FamilyAssignment assign_families(const CellPartition& p, const CharacterTable& t,
                                 const std::vector<std::vector<long long>>& left_cell_mults);

// components of the graph on Irr(W) joining characters that share a left cell
std::vector<int> character_graph_components(const std::vector<std::vector<long long>>& left_cell_mults, int nchars);

struct PairingResult {
  long long inner_product = 0;
  long long intersection = 0;
};
PairingResult cell_intersection_pairing(const CellPartition& p, const CharacterTable& t,
                                        const std::vector<ClassFunction>& cell_chars, int c, int c2);

struct DualityReport {
  bool ok = true;
  std::vector<std::string> failures;
};
DualityReport w0_duality_check(const cox::CoxeterGroup& g, const CellPartition& p, const CharacterTable& t,
                               const std::vector<ClassFunction>& cell_chars, const FamilyAssignment& fam);

}  // namespace klc::cells
