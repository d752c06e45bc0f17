#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "klcells/coxeter.hpp"
#include "klcells/laurent.hpp"

namespace klc::hecke {

using cox::CoxeterGroup;
using cox::Elt;
using num::Integer;
using num::LaurentPoly;

class WeightFunction {
 public:
  WeightFunction() = default;
  // values per generator; validated against generator conjugacy
  WeightFunction(const CoxeterGroup& g, std::vector<int> values);
  static WeightFunction uniform(const CoxeterGroup& g) { return {g, std::vector<int>(g.rank(), 1)}; }

  int operator[](int s) const { return values_[s]; }
  const std::vector<int>& values() const { return values_; }
  int of(const CoxeterGroup& g, Elt w) const;
  bool is_uniform() const;
  std::string str() const;

 private:
  std::vector<int> values_;
};

// generators s, t conjugate in W (joined by a path of odd labels)
std::vector<int> generator_conjugacy_classes(const cox::CoxeterSystem& sys);

using Terms = std::vector<std::pair<Elt, LaurentPoly>>;  // sorted by element id

// Sparse element of H in the T-basis (or any basis, by convention of the caller).
class HeckeElement {
 public:
  HeckeElement() = default;
  static HeckeElement basis(Elt w, LaurentPoly c = LaurentPoly(Integer(1)));
  static HeckeElement from_terms(const Terms& t);

  const std::map<Elt, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(Elt w) const;
  bool is_zero() const { return terms_.empty(); }
  void add(Elt w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement operator*(const LaurentPoly& c) const;
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Elt, LaurentPoly> terms_;
};

// T-basis arithmetic of H(W, S, phi).
class HeckeAlgebra {
 public:
  HeckeAlgebra(const CoxeterGroup& g, WeightFunction phi) : g_(&g), phi_(std::move(phi)) {}
  const CoxeterGroup& group() const { return *g_; }
  const WeightFunction& weights() const { return phi_; }

  HeckeElement left_gen(int s, const HeckeElement& h) const;   // T_s h
  HeckeElement right_gen(const HeckeElement& h, int s) const;  // h T_s
  HeckeElement left_gen_inverse(int s, const HeckeElement& h) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement bar(const HeckeElement& h) const;
  HeckeElement dagger(const HeckeElement& h) const;
  // bar(T_w) in the T-basis
  HeckeElement bar_basis(Elt w) const;
  bool is_central(const HeckeElement& h) const;

 private:
  const CoxeterGroup* g_;
  WeightFunction phi_;
};

// Kazhdan-Lusztig basis, structure constants and derived invariants.
class KLTable {
 public:
  KLTable(const CoxeterGroup& g, WeightFunction phi);
  // from stored c_w expansions and generator products; nothing is recomputed
  KLTable(const CoxeterGroup& g, WeightFunction phi, std::vector<Terms> c, std::vector<Terms> gen);

  const CoxeterGroup& group() const { return *g_; }
  const WeightFunction& weights() const { return phi_; }
  const HeckeAlgebra& algebra() const { return alg_; }

  // c_w = sum_y p_{y,w} T_y
  const Terms& c(Elt w) const { return c_[w]; }
  LaurentPoly p(Elt y, Elt w) const;
  HeckeElement c_element(Elt w) const { return HeckeElement::from_terms(c_[w]); }
  size_t total_terms() const;

  // c_s c_w in the c-basis
  const Terms& gen_product(int s, Elt w) const { return gen_[static_cast<size_t>(s) * g_->size() + w]; }
  // T-basis element -> c-basis coefficients
  HeckeElement to_c_basis(const HeckeElement& h) const;
  // h_{x,y,.}: c_x c_y in the c-basis
  Terms structure_constants(Elt x, Elt y) const;
  // c_x c_y for all x with y fixed (index x), c-basis
  std::shared_ptr<const std::vector<Terms>> products_with(Elt y) const;
  // same restricted to z in keep (entries outside dropped after each step)
  std::vector<Terms> products_with_truncated(Elt y, const std::vector<char>& keep) const;

  // both defining properties of c_w; bar-invariance through bar(T_y) expansions
  bool verify_element(Elt w) const;
  // verified elements: all when |W| <= full_limit, else an evenly spaced sample including w0
  std::vector<Elt> verification_set(int full_limit = 600, int sample = 48) const;

  // Delta(z) = -deg p_{e,z}, n_z = leading coefficient of p_{e,z}
  int delta(Elt z) const { return -p(0, z).degree(); }
  Integer n_coeff(Elt z) const { return p(0, z).leading(); }

  // a(z) = max deg h_{x,y,z} over all x, y (full sweep)
  std::vector<int> a_function_full() const;
  // a from Delta on two-sided cells: a = min Delta over the cell
  std::vector<int> a_function_from_cells(const std::vector<int>& two_sided_cell) const;
  void set_a_values(std::vector<int> a) { a_ = std::move(a); }
  const std::vector<int>& a_values() const { return a_; }
  // coefficient of v^{-a(z^-1)} in h_{x,y,z^-1}
  Integer gamma(Elt x, Elt y, Elt z) const;

 private:
  void build();
  void build_bar_table() const;
  Terms lift(std::vector<LaurentPoly>& dense, std::vector<Elt>& touched, Elt top, Terms& coeffs) const;

  const CoxeterGroup* g_;
  WeightFunction phi_;
  HeckeAlgebra alg_;
  std::vector<Terms> c_;
  std::vector<Terms> gen_;
  std::vector<int> a_;
  mutable std::mutex mu_;
  mutable std::map<Elt, std::shared_ptr<const std::vector<Terms>>> columns_;
  mutable std::vector<Terms> bar_table_;  // bar(T_y) in the T-basis
};

// sum_{w in classes} f(w) T_w; throws if a class is not an involution class
HeckeElement central_involution_sum(const CoxeterGroup& g, const std::vector<int>& classes,
                                    const std::function<Integer(Elt)>& f);

}  // namespace klc::hecke
