#pragma once

#include <string>
#include <vector>

#include "klcells/kottwitz.hpp"

namespace klc::classical {

using chars::CharacterTable;
using chars::ClassFunction;
using cox::CoxeterGroup;
using cox::Elt;
using cox::GenMask;
using kott::VerificationReport;

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  Partition conjugate() const;
  int odd_parts() const;
  std::string str() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::vector<Partition> partitions(int n);

struct Bipartition {
  Partition alpha, beta;
  int size() const { return alpha.size() + beta.size(); }
  std::string str() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

std::vector<Bipartition> bipartitions(int n);

// rows lambda_1 < ... < lambda_{m+1} and mu_1 < ... < mu_m
struct BSymbol {
  std::vector<int> top, bottom;

  int m() const { return static_cast<int>(bottom.size()); }
  // n = sum of entries - m^2
  int rank() const;
  Bipartition bipartition() const;
  std::vector<int> entries() const;  // both rows, sorted, with repeats
  std::string str() const;           // "top / bottom"
};

// smallest m with alpha padded to m+1 parts and beta to m parts; 0 is then never in both rows
int default_m(const Bipartition& bp);
BSymbol symbol(const Bipartition& bp, int m);
inline BSymbol symbol(const Bipartition& bp) { return symbol(bp, default_m(bp)); }

struct SymbolInvariants {
  int d = 0;
  int j0 = 0;
  bool special = false;
  friend bool operator==(const SymbolInvariants&, const SymbolInvariants&) = default;
};

SymbolInvariants symbol_invariants(const Bipartition& bp, int m);
inline SymbolInvariants symbol_invariants(const Bipartition& bp) { return symbol_invariants(bp, default_m(bp)); }

long long binomial(int n, int k);

// <rho_{l,j}, chi^{(alpha,beta)}> in W(B_n)
long long kottwitz_multiplicity_B(const Bipartition& bp, int l, int j);
// <rho_j, chi^alpha> in S_n
int kottwitz_multiplicity_A(const Partition& alpha, int j);

struct Cuspidality {
  enum class Kind { cuspidal, strongly_non_cuspidal, non_cuspidal_via_w0 };
  Kind kind = Kind::cuspidal;
  int r = 0;              // witness: W' = W_{n-r} x S_r
  Bipartition psi0;       // special character of W_{n-r}
};

std::string kind_name(Cuspidality::Kind k);
// bp labels a special character
Cuspidality cuspidality_B(const Bipartition& bp);

// Murnaghan-Nakayama
long long character_A(const Partition& alpha, const std::vector<int>& cycle_type);
long long character_B(const Bipartition& bp, const std::vector<int>& positive_cycles,
                      const std::vector<int>& negative_cycles);

// images of 1..n under an element of A_{n-1}, generator i = (i+1, i+2)
std::vector<int> permutation_A(const CoxeterGroup& g, Elt w);
std::vector<int> cycle_type(const std::vector<int>& perm);
// cycle lengths of a signed permutation, split by the sign of the cycle
std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const std::vector<int>& sperm);

// table index of chi^alpha for every partition of n (group A_{n-1}); throws unless a bijection
std::vector<int> label_type_A(const CharacterTable& t, const std::vector<Partition>& labels);
// table index of chi^{(alpha,beta)} for every bipartition (group B_n); throws unless a bijection
std::vector<int> label_type_B(const CharacterTable& t, const std::vector<Bipartition>& labels);

// generator mask of the Young subgroup with the given block sizes, using generators first..first+sum-2
GenMask young_mask(const std::vector<int>& blocks, int first);

// D_n: swap of u and s_1, which is conjugation by t in B_n
Elt theta(const CoxeterGroup& g, Elt w);
ClassFunction theta_conjugate(const CharacterTable& t, const ClassFunction& f);

struct TypeDPair {
  Partition alpha;
  int plus = -1, minus = -1;
  Elt longest = 0;  // w_{2 alpha*}
  GenMask young = 0;
};

// n even, alpha a partition of n/2; throws if the characterization is not unique
TypeDPair typeD_pm_characters(const CoxeterGroup& g, const CharacterTable& t, const Partition& alpha);

void verify_type_A(const Analysis& an, VerificationReport& rep);
void verify_type_B(const Analysis& an, VerificationReport& rep);
void verify_type_D(const Analysis& an, VerificationReport& rep);
// B_n, n = 2, 3: weights (b, a, ..., a) for a in as and b = a, 2a, ..., 2n a and a few others
void verify_smoothness_criterion_B(int n, const std::vector<int>& as, VerificationReport& rep);
// dispatches on the type label; no-op for other types
void verify_classical(const Analysis& an, VerificationReport& rep);

}  // namespace klc::classical
