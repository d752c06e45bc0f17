#include "klcells/field.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <sstream>

namespace klc::num {

namespace {

using IPoly = std::vector<Integer>;  // low degree first

void trim_poly(IPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

IPoly poly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim_poly(r);
  return r;
}

// exact division by a monic polynomial
IPoly poly_div_monic(IPoly a, const IPoly& b) {
  trim_poly(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {};
  IPoly q(a.size() - db);
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    Integer c = a[k];
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim_poly(a);
  if (!a.empty()) throw std::logic_error("cyclotomic division not exact");
  return q;
}

IPoly cyclotomic(int n) {
  thread_local std::map<int, IPoly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  IPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_monic(p, cyclotomic(d));
  memo[n] = p;
  return p;
}

// Gaussian elimination: solve A y = b (A given by columns); returns false if inconsistent.
bool solve_rational(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, int ncols,
                    std::vector<Rational>& out) {
  int nr = static_cast<int>(rows.size());
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < ncols && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (sgn(rows[i][c]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational iv = 1 / rows[r][c];
    for (int j = c; j < ncols; ++j) rows[r][j] *= iv;
    rhs[r] *= iv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (sgn(rhs[i]) != 0) return false;
  out.assign(ncols, Rational(0));
  for (int i = 0; i < r; ++i) out[pivcol[i]] = rhs[i];
  return true;
}

}  // namespace

std::vector<Integer> minpoly_two_cos_two_pi_over(int n) {
  if (n <= 0) throw std::invalid_argument("minpoly: n must be positive");
  if (n == 1) return {Integer(-2), Integer(1)};
  if (n == 2) return {Integer(2), Integer(1)};
  IPoly p = cyclotomic(n);
  int d = (static_cast<int>(p.size()) - 1) / 2;
  // z^{-d} P(z) = p_d + sum_k p_{d+k} (z^k + z^-k), and z^k + z^-k = D_k(z + 1/z)
  IPoly dprev{Integer(2)}, dcur{Integer(0), Integer(1)};
  IPoly psi{p[d]};
  for (int k = 1; k <= d; ++k) {
    IPoly term = dcur;
    for (auto& c : term) c *= p[d + k];
    if (psi.size() < term.size()) psi.resize(term.size());
    for (size_t i = 0; i < term.size(); ++i) psi[i] += term[i];
    IPoly next = poly_mul(dcur, {Integer(0), Integer(1)});
    if (next.size() < dprev.size()) next.resize(dprev.size());
    for (size_t i = 0; i < dprev.size(); ++i) next[i] -= dprev[i];
    dprev = dcur;
    dcur = next;
  }
  trim_poly(psi);
  return psi;
}

MinPolyField::MinPolyField(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("field label must be >= 1");
  minpoly_ = minpoly_two_cos_two_pi_over(2 * m);
  int d = degree();
  powers_.resize(std::max(1, 2 * d - 1));
  for (int k = 0; k < static_cast<int>(powers_.size()); ++k) {
    std::vector<Rational> v(d, Rational(0));
    if (k < d) {
      v[k] = 1;
    } else {
      // x * x^{k-1}, then reduce x^d = -sum minpoly_i x^i
      const auto& prev = powers_[k - 1];
      Rational top = prev[d - 1];
      for (int i = d - 1; i >= 1; --i) v[i] = prev[i - 1];
      v[0] = 0;
      for (int i = 0; i < d; ++i) v[i] -= top * to_rational(minpoly_[i]);
    }
    powers_[k] = v;
  }
}

std::string MinPolyField::name() const {
  if (degree() == 1) return "Q";
  return "Q(2cos(pi/" + std::to_string(m_) + "))";
}

FieldPtr field_for(int m) {
  static std::mutex mu;
  static std::map<int, FieldPtr> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& f = memo[m];
  if (!f) f = std::make_shared<const MinPolyField>(m);
  return f;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr f, std::vector<Rational> coords) : f_(std::move(f)), c_(std::move(coords)) {
  if (f_ && static_cast<int>(c_.size()) > f_->degree()) throw std::invalid_argument("too many coordinates");
  for (auto& a : c_) a.canonicalize();
  trim();
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& f) {
  if (f->degree() == 1) return AlgebraicNumber(f, {-to_rational(f->minimal_polynomial()[0])});
  return AlgebraicNumber(f, {Rational(0), Rational(1)});
}

AlgebraicNumber AlgebraicNumber::two_cos(int k, const FieldPtr& f) {
  int period = 2 * f->m();
  k = ((k % period) + period) % period;
  AlgebraicNumber x = generator(f);
  AlgebraicNumber prev(2), cur = x;
  if (k == 0) {
    AlgebraicNumber two(2);
    two.f_ = f;
    return two;
  }
  for (int i = 1; i < k; ++i) {
    AlgebraicNumber next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  cur.f_ = f;
  return cur;
}

void AlgebraicNumber::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

void AlgebraicNumber::adopt(const AlgebraicNumber& o) {
  if (!o.f_) return;
  if (!f_) {
    f_ = o.f_;
  } else if (f_ != o.f_ && f_->m() != o.f_->m()) {
    if (!o.is_rational() || !is_rational())
      throw std::invalid_argument("arithmetic across different number fields");
    if (o.f_->degree() > f_->degree()) f_ = o.f_;
  }
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("not a rational number: " + str());
  return c_.empty() ? Rational(0) : c_[0];
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  adopt(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  adopt(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& a : c_) a *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational s = c_[0];
    c_ = o.c_;
    for (auto& a : c_) a *= s;
    return *this;
  }
  int d = f_->degree();
  std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  std::vector<Rational> r(d, Rational(0));
  for (size_t k = 0; k < prod.size(); ++k) {
    if (sgn(prod[k]) == 0) continue;
    const auto& pw = f_->power(static_cast<int>(k));
    for (int i = 0; i < d; ++i)
      if (sgn(pw[i]) != 0) r[i] += prod[k] * pw[i];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

AlgebraicNumber AlgebraicNumber::inv() const {
  if (c_.empty()) throw std::domain_error("division by zero");
  if (c_.size() == 1) {
    AlgebraicNumber r(Rational(1 / c_[0]));
    r.f_ = f_;
    return r;
  }
  int d = f_->degree();
  // column j of the multiplication matrix = coords of this * x^j
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d, Rational(0)));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> e(d, Rational(0));
    e[j] = 1;
    AlgebraicNumber col = *this * AlgebraicNumber(f_, e);
    for (int i = 0; i < d; ++i) rows[i][j] = col.coord(i);
  }
  std::vector<Rational> rhs(d, Rational(0)), y;
  rhs[0] = 1;
  if (!solve_rational(rows, rhs, d, y)) throw std::logic_error("field inverse failed");
  return AlgebraicNumber(f_, y);
}

namespace {

struct Mpfr {
  mpfr_t x;
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(x, p); }
  ~Mpfr() { mpfr_clear(x); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// value and a rigorous-enough error bound at the given precision
void evaluate(const AlgebraicNumber& a, mpfr_prec_t prec, Mpfr& val, Mpfr& bound) {
  Mpfr theta(prec), pw(prec), term(prec), absum(prec), q(prec);
  int m = a.field() ? a.field()->m() : 1;
  mpfr_const_pi(theta.x, MPFR_RNDN);
  mpfr_div_si(theta.x, theta.x, m, MPFR_RNDN);
  mpfr_cos(theta.x, theta.x, MPFR_RNDN);
  mpfr_mul_si(theta.x, theta.x, 2, MPFR_RNDN);
  mpfr_set_si(pw.x, 1, MPFR_RNDN);
  mpfr_set_si(val.x, 0, MPFR_RNDN);
  mpfr_set_si(absum.x, 0, MPFR_RNDN);
  const auto& c = a.coords();
  for (size_t k = 0; k < c.size(); ++k) {
    mpfr_set_q(q.x, c[k].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.x, q.x, pw.x, MPFR_RNDN);
    mpfr_add(val.x, val.x, term.x, MPFR_RNDN);
    mpfr_abs(term.x, term.x, MPFR_RNDN);
    mpfr_add(absum.x, absum.x, term.x, MPFR_RNDN);
    mpfr_mul(pw.x, pw.x, theta.x, MPFR_RNDN);
  }
  // each term carries O(k) roundings of relative size 2^-prec
  mpfr_mul_2si(bound.x, absum.x, -static_cast<long>(prec) + 8 + 2 * static_cast<long>(c.size()), MPFR_RNDU);
}

}  // namespace

int AlgebraicNumber::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return sgn(c_[0]);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    Mpfr val(prec), bound(prec), absval(prec);
    evaluate(*this, prec, val, bound);
    mpfr_abs(absval.x, val.x, MPFR_RNDN);
    if (mpfr_cmp(absval.x, bound.x) > 0) return mpfr_sgn(val.x);
    if (prec > (1 << 20)) throw std::logic_error("sign refinement did not terminate");
  }
}

double AlgebraicNumber::to_double() const {
  Mpfr val(128), bound(128);
  evaluate(*this, 128, val, bound);
  return mpfr_get_d(val.x, MPFR_RNDN);
}

std::string AlgebraicNumber::str() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    std::string s = c_[k].get_str();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (k == 0) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    os << "c" << f_->m();
    if (k > 1) os << "^" << k;
  }
  os << ")";
  return os.str();
}

AlgebraicNumber to_subfield(const AlgebraicNumber& a, const FieldPtr& target) {
  if (a.is_rational()) {
    AlgebraicNumber r(a.is_zero() ? Rational(0) : a.coords()[0]);
    return r;
  }
  const FieldPtr& big = a.field();
  if (big->m() == target->m()) return a;
  if (big->m() % target->m() != 0) throw std::invalid_argument("not a subfield");
  int db = big->degree(), dt = target->degree();
  AlgebraicNumber theta = AlgebraicNumber::two_cos(big->m() / target->m(), big);
  std::vector<std::vector<Rational>> rows(db, std::vector<Rational>(dt, Rational(0)));
  AlgebraicNumber pw(1);
  for (int j = 0; j < dt; ++j) {
    for (int i = 0; i < db; ++i) rows[i][j] = pw.coord(i);
    pw *= theta;
  }
  std::vector<Rational> rhs(db), y;
  for (int i = 0; i < db; ++i) rhs[i] = a.coord(i);
  if (!solve_rational(rows, rhs, dt, y)) throw std::domain_error("value " + a.str() + " not in " + target->name());
  return AlgebraicNumber(target, y);
}

}  // namespace klc::num
