#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/field.hpp"
#include "klcells/linalg.hpp"

namespace klc::cox {

using Elt = int;  // dense element id; 0 is the identity
using GenMask = uint32_t;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoxeterSystem {
  int rank = 0;
  std::vector<std::vector<int>> matrix;
  std::string type_label;
  num::FieldPtr base_field;  // field of 2cos(pi/M), M = lcm of non-crystallographic labels

  // "A3", "B4", "D4", "H3", "F4", "E6", "G2", "I2(7)", products "B2xA1"
  static CoxeterSystem from_label(const std::string& label);
  static CoxeterSystem from_matrix(const std::vector<std::vector<int>>& m, const std::string& label = "");
  // restriction to the generators in J, numbered in increasing order
  CoxeterSystem restrict_to(GenMask j) const;

  bool positive_definite() const;
  // connected components of the Coxeter graph
  std::vector<std::vector<int>> components() const;
  // order predicted from the type label, 0 if unknown
  long long expected_order() const;
};

struct ConjClass {
  std::vector<Elt> members;  // sorted
  Elt min_length_rep = 0;
  bool is_involution_class = false;
};

struct ParabolicSubgroup {
  GenMask generators = 0;
  std::vector<Elt> elements;  // sorted
  Elt longest = 0;
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem sys, long long budget = 2000);

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank; }
  int size() const { return static_cast<int>(len_.size()); }
  int length(Elt w) const { return len_[w]; }
  Elt inverse(Elt w) const { return inv_[w]; }
  Elt lmul(int s, Elt w) const { return lmul_[static_cast<size_t>(s) * size() + w]; }
  Elt rmul(Elt w, int s) const { return rmul_[static_cast<size_t>(s) * size() + w]; }
  Elt generator(int s) const { return lmul(s, 0); }
  GenMask left_descents(Elt w) const { return ldesc_[w]; }
  GenMask right_descents(Elt w) const { return rdesc_[w]; }
  Elt longest() const { return w0_; }
  int max_length() const { return len_[w0_]; }
  Elt multiply(Elt x, Elt y) const;
  std::vector<int> reduced_word(Elt w) const;
  Elt from_word(const std::vector<int>& word) const;
  std::string word_string(Elt w) const;

  // roots: 0..N-1 positive, r+N is -root r
  int num_positive_roots() const { return npos_; }
  const std::vector<num::AlgebraicNumber>& root(int r) const { return roots_[r]; }
  int act_on_root(Elt w, int r) const;
  bool is_positive_root(int r) const { return r < npos_; }
  // matrix of w on V in the simple-root basis (column j = w(alpha_j))
  num::Matrix<num::AlgebraicNumber> reflection_matrix(Elt w) const;

  bool bruhat_leq(Elt x, Elt y) const;
  bool has_bruhat_table() const { return !bruhat_.empty(); }

  const std::vector<ConjClass>& classes() const { return classes_; }
  int class_of(Elt w) const { return class_of_[w]; }
  bool is_involution(Elt w) const { return multiply(w, w) == 0; }
  std::vector<Elt> involutions() const;

  ParabolicSubgroup parabolic(GenMask j) const;
  std::vector<Elt> centralizer(Elt w) const;
  // (-1)^k, k = #positive roots of the parabolic system on J sent negative by w
  int epsilon_sigma(Elt sigma, GenMask j, Elt w) const;
  // support of a positive root, as a generator mask
  GenMask root_support(int r) const;
  // a J with sigma = longest element of W_J and sigma central in W_J, or nullopt
  std::optional<GenMask> central_parabolic_of(Elt sigma) const;

 private:
  void enumerate(long long budget);
  void build_bruhat();
  void build_classes();

  CoxeterSystem sys_;
  std::vector<std::vector<num::AlgebraicNumber>> roots_;
  std::vector<std::vector<int>> root_perm_;  // [s][r]
  int npos_ = 0;
  std::vector<int> len_;
  std::vector<Elt> inv_, lmul_, rmul_;
  std::vector<int> first_letter_;
  std::vector<GenMask> ldesc_, rdesc_;
  Elt w0_ = 0;
  std::vector<std::vector<uint64_t>> bruhat_;
  std::vector<ConjClass> classes_;
  std::vector<int> class_of_;
};

// Signed permutation images of e_1..e_n (1-based values, sign = negation), for the
// B_n / D_n generator conventions: B_n index 0 = t (flips e_1), index i = s_i;
// D_n index 0 = u = t s_1 t.
std::vector<int> signed_permutation(const CoxeterGroup& g, Elt w, char type);

struct LabelledElement {
  std::string label;
  Elt element;
};

// Minimal-length involution class representatives for the classical types.
// Type A uses degree n (group A_{n-1}); types B and D use rank n.
std::vector<LabelledElement> involution_class_reps_classical(const CoxeterGroup& g, char type, int n);

}  // namespace klc::cox
