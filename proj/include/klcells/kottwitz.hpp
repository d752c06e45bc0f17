#pragma once

#include <string>
#include <vector>

#include "klcells/analysis.hpp"

namespace klc::kott {

using chars::CharacterTable;
using chars::ClassFunction;
using cox::CoxeterGroup;
using cox::Elt;
using cells::CellPartition;

// W acting on span{a_w : w in a union of involution classes} by signed permutations.
struct InvolutionModule {
  std::vector<Elt> basis;                               // sorted element ids
  std::vector<std::vector<std::pair<int, int>>> action;  // [s][i] = (j, sign): s.a_i = sign a_j

  int dim() const { return static_cast<int>(basis.size()); }
  // w.a_i as (j, sign), along a reduced word of w
  std::pair<int, int> apply(const CoxeterGroup& g, Elt w, int i) const;
  bool check_relations(const CoxeterGroup& g) const;
  // trace at every class representative
  ClassFunction character(const CoxeterGroup& g) const;
};

// classes: indices into g.classes(), all involution classes
InvolutionModule involution_module(const CoxeterGroup& g, const std::vector<int>& classes);
ClassFunction rho_character(const CoxeterGroup& g, const std::vector<int>& classes);
// Ind_{C_W(sigma)}^W(eps_sigma) with sigma the longest element of a parabolic in which it is central
ClassFunction rho_via_induction(const CharacterTable& t, int involution_class);
// involution classes of g
std::vector<int> involution_classes(const CoxeterGroup& g);

struct Check {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  std::string details;
};

struct VerificationReport {
  std::string group;
  std::string phi;
  std::vector<Check> checks;
  double seconds = 0;

  void add(const std::string& name, bool ok, const std::string& details = "");
  void skip(const std::string& name, const std::string& why);
  const Check* find(const std::string& name) const;
  bool all_passed() const;
  // sort by name
  void finalize();
};

std::string status_name(Check::Status s);

// rho constructions, per-class conjecture, all-involutions identity
void verify_kottwitz(const Analysis& an, VerificationReport& rep);
// theorem parts (a), (b), (c) and the class-set conjecture for all phi
void verify_main_theorem(const Analysis& an, VerificationReport& rep);
// the (G, C, class)-identity and its smooth and classical specializations
void verify_identity_GCC(const Analysis& an, VerificationReport& rep);
// rho_{C w0} = rho_C x sign when w0 is central
void verify_w0_twist(const Analysis& an, VerificationReport& rep);
// both restriction/induction inequalities over all standard parabolics
void verify_restriction_inequalities(const Analysis& an, VerificationReport& rep);
// (K1)-(K3) for each strongly non-cuspidal two-sided cell
void verify_inductive_conditions(const Analysis& an, VerificationReport& rep);

// everything above plus the cell- and character-level consistency checks
VerificationReport verify_all(const Analysis& an);

// involution classes meeting X
std::vector<int> classes_met(const CoxeterGroup& g, const std::vector<Elt>& x);

}  // namespace klc::kott
