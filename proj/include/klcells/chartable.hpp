#pragma once

#include <string>
#include <vector>

#include "klcells/coxeter.hpp"
#include "klcells/field.hpp"

namespace klc::chars {

using cox::CoxeterGroup;
using cox::Elt;
using num::AlgebraicNumber;
using ClassFunction = std::vector<AlgebraicNumber>;  // indexed by conjugacy class

// Irreducible characters of W with values in the base field of the reflection representation.
struct CharacterTable {
  const CoxeterGroup* group = nullptr;
  int prime = 0;                                 // modulus used for the computation
  std::vector<long long> class_sizes;
  std::vector<int> element_orders;               // per class
  std::vector<ClassFunction> values;             // [character][class]
  std::vector<long long> degrees;
  std::vector<int> b_values;
  std::vector<std::string> labels;               // phi_{d,b} with primes for repeats
  int trivial = -1, sign = -1, reflection = -1;

  int size() const { return static_cast<int>(values.size()); }
  const AlgebraicNumber& value(int chi, Elt w) const { return values[chi][group->class_of(w)]; }
  // <f, g>_W for real class functions
  AlgebraicNumber inner(const ClassFunction& f, const ClassFunction& g) const;
  // multiplicities of the irreducibles in f
  std::vector<AlgebraicNumber> decompose(const ClassFunction& f) const;
  // integer multiplicities; throws if some is not a nonnegative integer
  std::vector<long long> multiplicities(const ClassFunction& f) const;
  ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) const;
  int index_of(const ClassFunction& f) const;  // -1 if not irreducible
  // sum of m_i chi_i
  ClassFunction combine(const std::vector<long long>& m) const;
  // value at every element id
  std::vector<AlgebraicNumber> on_elements(const ClassFunction& f) const;
};

CharacterTable ordinary_character_table(const CoxeterGroup& g);

// b_chi from the Molien series (1/|W|) sum chi(w)/det(1 - q w) up to q^order
std::vector<std::vector<long long>> molien_coefficients(const CharacterTable& t, int order);

// Ind_{H}^{W}(f) for a subgroup H given by its element list and a function on it (indexed like the list)
ClassFunction induce(const CharacterTable& t, const std::vector<Elt>& subgroup, const std::vector<AlgebraicNumber>& f);

}  // namespace klc::chars
