#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "klcells/integer.hpp"
#include "klcells/laurent.hpp"

namespace klc::num {

// Q(2cos(pi/m)) presented by the minimal polynomial of its generator.
class MinPolyField {
 public:
  explicit MinPolyField(int m);

  int m() const { return m_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  // monic, low degree first
  const std::vector<Integer>& minimal_polynomial() const { return minpoly_; }
  // x^k mod minpoly, k < 2*degree-1
  const std::vector<Rational>& power(int k) const { return powers_.at(k); }
  std::string name() const;

 private:
  int m_;
  std::vector<Integer> minpoly_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const MinPolyField>;

// Shared instance per m.
FieldPtr field_for(int m);

// Minimal polynomial of 2cos(2pi/n), n >= 1, low degree first.
std::vector<Integer> minpoly_two_cos_two_pi_over(int n);

class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(long long a) : AlgebraicNumber(Rational(static_cast<long>(a))) {}  // NOLINT
  AlgebraicNumber(int a) : AlgebraicNumber(Rational(a)) {}                          // NOLINT
  AlgebraicNumber(const Rational& a) {                                               // NOLINT
    if (sgn(a) != 0) {
      c_.push_back(a);
      c_.back().canonicalize();
    }
  }
  AlgebraicNumber(FieldPtr f, std::vector<Rational> coords);
  static AlgebraicNumber generator(const FieldPtr& f);
  // 2cos(k pi / m) inside field_for(m)
  static AlgebraicNumber two_cos(int k, const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const std::vector<Rational>& coords() const { return c_; }
  Rational coord(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;
  int sign() const;
  double to_double() const;
  std::string str() const;

  AlgebraicNumber operator-() const;
  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber inv() const;

  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inv(); }
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.c_ == b.c_; }
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }
  // total order by real value
  friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (b - a).sign() > 0; }

 private:
  void trim();
  void adopt(const AlgebraicNumber& o);
  FieldPtr f_;
  std::vector<Rational> c_;
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
inline std::string coeff_str(const AlgebraicNumber& a) { return a.str(); }
inline AlgebraicNumber field_inv(const AlgebraicNumber& a) { return a.inv(); }
inline Rational field_inv(const Rational& a) {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  return 1 / a;
}

// Express a in field_for(target) (a subfield of a's field); throws if a is not in it.
AlgebraicNumber to_subfield(const AlgebraicNumber& a, const FieldPtr& target);

using FLaurent = Laurent<AlgebraicNumber>;
inline FLaurent to_field(const LaurentPoly& p) {
  return p.map<AlgebraicNumber>([](const Integer& a) { return AlgebraicNumber(to_rational(a)); });
}

// q with p*q = 1 mod x^{order+1}
template <class K>
std::vector<K> truncated_series_inverse(const std::vector<K>& p, int order) {
  if (p.empty() || is_zero(p[0])) throw std::domain_error("series inverse: zero constant term");
  K c0inv = field_inv(p[0]);
  std::vector<K> q(order + 1);
  q[0] = c0inv;
  for (int n = 1; n <= order; ++n) {
    K s = K();
    for (int k = 1; k <= n && k < static_cast<int>(p.size()); ++k) s += p[k] * q[n - k];
    q[n] = -(s * c0inv);
  }
  return q;
}

}  // namespace klc::num
