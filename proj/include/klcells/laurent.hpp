#pragma once

#include <algorithm>
#include <climits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "klcells/integer.hpp"

namespace klc::num {

constexpr int kDegNegInf = INT_MIN;

template <class R>
bool coeff_is_zero(const R& a) {
  return is_zero(a);
}

// Laurent polynomial in v; dense storage from the lowest exponent, both ends trimmed.
template <class R>
class Laurent {
 public:
  Laurent() = default;
  Laurent(const R& a) {  // NOLINT
    if (!coeff_is_zero(a)) c_.push_back(a);
  }
  static Laurent monomial(const R& a, int e) {
    Laurent p(a);
    if (!p.c_.empty()) p.lo_ = e;
    return p;
  }
  // v^e + ... built from a list of (exponent, coefficient)
  static Laurent from_terms(const std::vector<std::pair<int, R>>& terms) {
    Laurent p;
    for (auto& [e, a] : terms) p += monomial(a, e);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegNegInf : lo_ + static_cast<int>(c_.size()) - 1; }
  int valuation() const { return c_.empty() ? INT_MAX : lo_; }
  R coeff(int e) const {
    if (e < lo_ || e > degree()) return R();
    return c_[e - lo_];
  }
  R leading() const { return c_.empty() ? R() : c_.back(); }
  const std::vector<R>& raw() const { return c_; }
  int low() const { return lo_; }

  std::vector<std::pair<int, R>> terms() const {
    std::vector<std::pair<int, R>> out;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!coeff_is_zero(c_[i])) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
    return out;
  }

  Laurent bar() const {
    Laurent p;
    p.c_.assign(c_.rbegin(), c_.rend());
    p.lo_ = c_.empty() ? 0 : -degree();
    return p;
  }
  Laurent shift(int k) const {
    Laurent p = *this;
    if (!p.c_.empty()) p.lo_ += k;
    return p;
  }
  R eval_at_one() const {
    R s = R();
    for (auto& a : c_) s += a;
    return s;
  }
  bool is_bar_invariant() const { return *this == bar(); }

  Laurent operator-() const {
    Laurent p = *this;
    for (auto& a : p.c_) a = -a;
    return p;
  }
  Laurent& operator+=(const Laurent& o) { return axpy(o, 1); }
  Laurent& operator-=(const Laurent& o) { return axpy(o, -1); }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent& operator*=(const R& a) {
    if (coeff_is_zero(a)) {
      c_.clear();
      lo_ = 0;
      return *this;
    }
    for (auto& x : c_) x = x * a;
    trim();
    return *this;
  }

  // this += (sign) * o
  Laurent& axpy(const Laurent& o, int sign) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
      *this = o;
      if (sign < 0)
        for (auto& a : c_) a = -a;
      return *this;
    }
    int lo = std::min(lo_, o.lo_), hi = std::max(degree(), o.degree());
    if (lo < lo_) {
      c_.insert(c_.begin(), lo_ - lo, R());
      lo_ = lo;
    }
    if (static_cast<int>(c_.size()) < hi - lo_ + 1) c_.resize(hi - lo_ + 1);
    for (size_t i = 0; i < o.c_.size(); ++i) {
      auto& t = c_[o.lo_ - lo_ + i];
      if (sign > 0)
        t += o.c_[i];
      else
        t -= o.c_[i];
    }
    trim();
    return *this;
  }
  // this += a * b
  void add_product(const Laurent& a, const Laurent& b) {
    if (a.c_.empty() || b.c_.empty()) return;
    int lo = a.lo_ + b.lo_, hi = a.degree() + b.degree();
    if (c_.empty()) {
      lo_ = lo;
      c_.assign(hi - lo + 1, R());
    } else {
      if (lo < lo_) {
        c_.insert(c_.begin(), lo_ - lo, R());
        lo_ = lo;
      }
      if (static_cast<int>(c_.size()) < hi - lo_ + 1) c_.resize(hi - lo_ + 1);
    }
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c_[a.lo_ + b.lo_ - lo_ + i + j] += a.c_[i] * b.c_[j];
    }
    trim();
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    p.add_product(a, b);
    return p;
  }
  friend Laurent operator*(Laurent a, const R& s) { return a *= s; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  template <class S, class F>
  Laurent<S> map(F f) const {
    Laurent<S> out;
    for (size_t i = 0; i < c_.size(); ++i) out += Laurent<S>::monomial(f(c_[i]), lo_ + static_cast<int>(i));
    return out;
  }

 private:
  void trim() {
    size_t b = 0;
    while (b < c_.size() && coeff_is_zero(c_[b])) ++b;
    if (b == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    size_t e = c_.size();
    while (coeff_is_zero(c_[e - 1])) --e;
    c_.resize(e);
    if (b) {
      c_.erase(c_.begin(), c_.begin() + b);
      lo_ += static_cast<int>(b);
    }
  }

  std::vector<R> c_;
  int lo_ = 0;
};

using LaurentPoly = Laurent<Integer>;
using QLaurent = Laurent<Rational>;

// Laurent polynomial v^k - v^{-k}
inline LaurentPoly v_minus_vinv(int k) {
  return LaurentPoly::monomial(Integer(1), k) - LaurentPoly::monomial(Integer(1), -k);
}
inline LaurentPoly vpow(int k) { return LaurentPoly::monomial(Integer(1), k); }

inline std::string coeff_str(const Integer& a) { return a.str(); }
inline std::string coeff_str(const Rational& a) { return a.get_str(); }

template <class R>
std::string to_string(const Laurent<R>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    std::string c = coeff_str(it->second);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    int e = it->first;
    bool one = c == "1";
    if (e == 0) {
      os << c;
      continue;
    }
    if (!one) os << c << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace klc::num
