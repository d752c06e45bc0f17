#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace klc::num {

// Integer with an int64 fast path; spills to GMP on overflow.
class Integer {
 public:
  Integer() = default;
  Integer(long long v) : small_(v) {}  // NOLINT
  Integer(long v) : small_(v) {}       // NOLINT
  Integer(int v) : small_(v) {}        // NOLINT
  explicit Integer(const mpz_class& z) { assign(z); }

  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_small() const { return !big_; }
  int64_t small() const { return small_; }
  int sign() const;
  mpz_class to_mpz() const;
  std::string str() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend bool operator==(const Integer& a, const Integer& b);
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend bool operator<(const Integer& a, const Integer& b);

 private:
  void assign(const mpz_class& z);
  int64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline Rational to_rational(const Integer& a) { return Rational(a.to_mpz()); }

}  // namespace klc::num
