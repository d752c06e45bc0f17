#include "klcells/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klc::hecke {

std::vector<int> generator_conjugacy_classes(const cox::CoxeterSystem& sys) {
  std::vector<int> cls(sys.rank, -1);
  int next = 0;
  for (int i = 0; i < sys.rank; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> stack{i};
    cls[i] = next;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < sys.rank; ++b)
        if (cls[b] < 0 && a != b && sys.matrix[a][b] % 2 == 1) {
          cls[b] = next;
          stack.push_back(b);
        }
    }
    ++next;
  }
  return cls;
}

WeightFunction::WeightFunction(const CoxeterGroup& g, std::vector<int> values) : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != g.rank()) throw std::invalid_argument("weight function: wrong number of values");
  for (int x : values_)
    if (x <= 0) throw std::invalid_argument("weight function: values must be positive");
  auto cls = generator_conjugacy_classes(g.system());
  for (int s = 0; s < g.rank(); ++s)
    for (int t = 0; t < g.rank(); ++t)
      if (cls[s] == cls[t] && values_[s] != values_[t])
        throw std::invalid_argument("weight function: conjugate generators " + std::to_string(s) + ", " +
                                    std::to_string(t) + " have different weights");
}

int WeightFunction::of(const CoxeterGroup& g, Elt w) const {
  int s = 0;
  for (int x : g.reduced_word(w)) s += values_[x];
  return s;
}

bool WeightFunction::is_uniform() const {
  return std::all_of(values_.begin(), values_.end(), [&](int x) { return x == values_[0]; });
}

std::string WeightFunction::str() const {
  std::string s;
  for (size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s;
}

HeckeElement HeckeElement::basis(Elt w, LaurentPoly c) {
  HeckeElement h;
  h.add(w, c);
  return h;
}

HeckeElement HeckeElement::from_terms(const Terms& t) {
  HeckeElement h;
  for (auto& [w, c] : t) h.add(w, c);
  return h;
}

LaurentPoly HeckeElement::coeff(Elt w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(Elt w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement HeckeElement::operator*(const LaurentPoly& c) const {
  HeckeElement h;
  for (auto& [w, a] : terms_) h.add(w, a * c);
  return h;
}

HeckeElement HeckeAlgebra::left_gen(int s, const HeckeElement& h) const {
  HeckeElement r;
  LaurentPoly diff = num::v_minus_vinv(phi_[s]);
  for (auto& [w, a] : h.terms()) {
    Elt sw = g_->lmul(s, w);
    r.add(sw, a);
    if (g_->length(sw) < g_->length(w)) r.add(w, a * diff);
  }
  return r;
}

HeckeElement HeckeAlgebra::right_gen(const HeckeElement& h, int s) const {
  HeckeElement r;
  LaurentPoly diff = num::v_minus_vinv(phi_[s]);
  for (auto& [w, a] : h.terms()) {
    Elt ws = g_->rmul(w, s);
    r.add(ws, a);
    if (g_->length(ws) < g_->length(w)) r.add(w, a * diff);
  }
  return r;
}

HeckeElement HeckeAlgebra::left_gen_inverse(int s, const HeckeElement& h) const {
  // T_s^{-1} = T_s - (v^L - v^-L)
  return left_gen(s, h) - h * num::v_minus_vinv(phi_[s]);
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (auto& [x, c] : a.terms()) {
    HeckeElement t = b;
    auto word = g_->reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_gen(*it, t);
    r += t * c;
  }
  return r;
}

HeckeElement HeckeAlgebra::bar_basis(Elt w) const {
  HeckeElement t = HeckeElement::basis(0);
  auto word = g_->reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = left_gen_inverse(*it, t);
  return t;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  HeckeElement r;
  for (auto& [w, a] : h.terms()) r += bar_basis(w) * a.bar();
  return r;
}

HeckeElement HeckeAlgebra::dagger(const HeckeElement& h) const {
  HeckeElement r;
  for (auto& [w, a] : h.terms()) r += bar_basis(w) * (g_->length(w) % 2 ? -a : a);
  return r;
}

bool HeckeAlgebra::is_central(const HeckeElement& h) const {
  for (int s = 0; s < g_->rank(); ++s)
    if (!(left_gen(s, h) == right_gen(h, s))) return false;
  return true;
}

namespace {

// dense accumulator over group elements
struct Workspace {
  std::vector<LaurentPoly> val;
  std::vector<char> in;
  std::vector<Elt> touched;
  explicit Workspace(int n) : val(n), in(n, 0) {}
  void touch(Elt z) {
    if (!in[z]) {
      in[z] = 1;
      touched.push_back(z);
    }
  }
  void add(Elt z, const LaurentPoly& p) {
    touch(z);
    val[z] += p;
  }
  void add_product(Elt z, const LaurentPoly& a, const LaurentPoly& b) {
    touch(z);
    val[z].add_product(a, b);
  }
  Terms extract() {
    Terms t;
    std::sort(touched.begin(), touched.end());
    for (Elt z : touched) {
      if (!val[z].is_zero()) t.emplace_back(z, std::move(val[z]));
      val[z] = LaurentPoly();
      in[z] = 0;
    }
    touched.clear();
    return t;
  }
};

// bar-symmetric part of the nonnegative-degree terms
LaurentPoly symmetric_part(const LaurentPoly& q) {
  LaurentPoly m;
  for (auto& [e, a] : q.terms()) {
    if (e < 0) continue;
    m += LaurentPoly::monomial(a, e);
    if (e > 0) m += LaurentPoly::monomial(a, -e);
  }
  return m;
}

}  // namespace

KLTable::KLTable(const CoxeterGroup& g, WeightFunction phi) : g_(&g), phi_(std::move(phi)), alg_(g, phi_) {
  for (Elt w = 1; w < g.size(); ++w)
    if (g.length(w) < g.length(w - 1)) throw std::logic_error("element ids must be sorted by length");
  build();
}

KLTable::KLTable(const CoxeterGroup& g, WeightFunction phi, std::vector<Terms> c, std::vector<Terms> gen)
    : g_(&g), phi_(std::move(phi)), alg_(g, phi_), c_(std::move(c)), gen_(std::move(gen)) {
  if (static_cast<int>(c_.size()) != g.size() || gen_.size() != static_cast<size_t>(g.rank()) * g.size())
    throw std::invalid_argument("KL table: stored data has the wrong shape");
}

// Peels the c-basis expansion off a T-basis vector, longest elements first.
// With top >= 0, the T_top coefficient is assumed to be 1 and c_top unknown: other
// coefficients are taken as the bar-symmetric part of their nonnegative-degree terms, and
// the remainder is returned as c_top. With top < 0, full coefficients are taken.
Terms KLTable::lift(std::vector<LaurentPoly>& val, std::vector<Elt>& touched, Elt top, Terms& coeffs) const {
  int maxlen = g_->max_length();
  std::vector<std::vector<Elt>> bucket(maxlen + 1);
  std::vector<char> queued(g_->size(), 0);
  for (Elt z : touched)
    if (!queued[z]) {
      queued[z] = 1;
      bucket[g_->length(z)].push_back(z);
    }
  coeffs.clear();
  for (int l = maxlen; l >= 0; --l) {
    for (size_t i = 0; i < bucket[l].size(); ++i) {
      Elt z = bucket[l][i];
      if (val[z].is_zero()) continue;
      if (z == top) {
        if (!(val[z] == LaurentPoly(Integer(1)))) throw std::logic_error("KL lift: top coefficient is not 1");
        coeffs.emplace_back(z, val[z]);
        continue;
      }
      LaurentPoly m = top >= 0 ? symmetric_part(val[z]) : val[z];
      if (m.is_zero()) continue;
      coeffs.emplace_back(z, m);
      for (auto& [y, p] : c_[z]) {
        if (!queued[y]) {
          queued[y] = 1;
          touched.push_back(y);
          bucket[g_->length(y)].push_back(y);
        }
        val[y].add_product(-m, p);
      }
    }
  }
  std::sort(coeffs.begin(), coeffs.end(), [](auto& a, auto& b) { return a.first < b.first; });
  Terms rest;
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  for (Elt z : touched) {
    if (!val[z].is_zero()) rest.emplace_back(z, std::move(val[z]));
    val[z] = LaurentPoly();
  }
  touched.clear();
  return rest;
}

void KLTable::build() {
  int n = g_->size(), k = g_->rank();
  c_.assign(n, {});
  gen_.assign(static_cast<size_t>(k) * n, {});
  c_[0] = {{0, LaurentPoly(Integer(1))}};
  std::vector<char> done(n, 0);
  done[0] = 1;
  std::vector<LaurentPoly> val(n);
  std::vector<Elt> touched;
  for (Elt w = 0; w < n; ++w) {
    if (!done[w]) throw std::logic_error("KL basis: element reached out of order");
    for (int s = 0; s < k; ++s) {
      Elt sw = g_->lmul(s, w);
      int L = phi_[s];
      if (g_->length(sw) < g_->length(w)) {
        gen_[static_cast<size_t>(s) * n + w] = {{w, num::vpow(L) + num::vpow(-L)}};
        continue;
      }
      // c_s c_w = (T_s + v^-L) c_w in the T-basis
      LaurentPoly diff = num::v_minus_vinv(L), vinv = num::vpow(-L);
      for (auto& [y, p] : c_[w]) {
        Elt sy = g_->lmul(s, y);
        touched.push_back(sy);
        val[sy] += p;
        if (g_->length(sy) < g_->length(y)) val[y].add_product(diff, p);
        val[y].add_product(vinv, p);
        touched.push_back(y);
      }
      Terms coeffs;
      Terms rest = lift(val, touched, sw, coeffs);
      gen_[static_cast<size_t>(s) * n + w] = coeffs;
      if (!done[sw]) {
        c_[sw] = std::move(rest);
        done[sw] = 1;
      } else if (!(rest == c_[sw])) {
        throw std::logic_error("KL basis: inconsistent lifts for element " + g_->word_string(sw));
      }
    }
  }
}

LaurentPoly KLTable::p(Elt y, Elt w) const {
  const auto& t = c_[w];
  auto it = std::lower_bound(t.begin(), t.end(), y, [](auto& a, Elt b) { return a.first < b; });
  if (it == t.end() || it->first != y) return LaurentPoly();
  return it->second;
}

size_t KLTable::total_terms() const {
  size_t s = 0;
  for (auto& t : c_) s += t.size();
  return s;
}

HeckeElement KLTable::to_c_basis(const HeckeElement& h) const {
  std::vector<LaurentPoly> val(g_->size());
  std::vector<Elt> touched;
  for (auto& [w, a] : h.terms()) {
    val[w] = a;
    touched.push_back(w);
  }
  Terms coeffs;
  Terms rest = lift(val, touched, -1, coeffs);
  if (!rest.empty()) throw std::logic_error("to_c_basis: residue left");
  return HeckeElement::from_terms(coeffs);
}

std::vector<Terms> KLTable::products_with_truncated(Elt y, const std::vector<char>& keep) const {
  int n = g_->size();
  std::vector<Terms> x(n);
  Workspace ws(n);
  if (keep.empty() || keep[y]) x[0] = {{y, LaurentPoly(Integer(1))}};
  for (Elt w = 1; w < n; ++w) {
    int s = g_->reduced_word(w)[0];
    Elt sw = g_->lmul(s, w);
    // c_w = c_s c_sw - sum_{z != w} h_{s,sw,z} c_z
    for (auto& [u, a] : x[sw])
      for (auto& [z, h] : gen_product(s, u)) ws.add_product(z, a, h);
    for (auto& [z, h] : gen_product(s, sw)) {
      if (z == w) continue;
      for (auto& [u, b] : x[z]) ws.add_product(u, -h, b);
    }
    Terms t = ws.extract();
    if (!keep.empty()) t.erase(std::remove_if(t.begin(), t.end(), [&](auto& e) { return !keep[e.first]; }), t.end());
    x[w] = std::move(t);
  }
  return x;
}

std::shared_ptr<const std::vector<Terms>> KLTable::products_with(Elt y) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = columns_.find(y);
    if (it != columns_.end()) return it->second;
  }
  auto col = std::make_shared<const std::vector<Terms>>(products_with_truncated(y, {}));
  std::lock_guard<std::mutex> lock(mu_);
  if (columns_.size() > 64) columns_.clear();
  columns_.emplace(y, col);
  return col;
}

Terms KLTable::structure_constants(Elt x, Elt y) const { return (*products_with(y))[x]; }

void KLTable::build_bar_table() const {
  if (!bar_table_.empty()) return;
  int n = g_->size();
  bar_table_.assign(n, {});
  bar_table_[0] = {{0, LaurentPoly(Integer(1))}};
  Workspace ws(n);
  for (Elt w = 1; w < n; ++w) {
    int s = g_->reduced_word(w)[0];
    Elt sw = g_->lmul(s, w);
    LaurentPoly diff = num::v_minus_vinv(phi_[s]);
    // bar(T_w) = (T_s - diff) bar(T_sw)
    for (auto& [y, a] : bar_table_[sw]) {
      Elt sy = g_->lmul(s, y);
      ws.add(sy, a);
      if (g_->length(sy) < g_->length(y)) ws.add_product(y, diff, a);
      ws.add_product(y, -diff, a);
    }
    bar_table_[w] = ws.extract();
  }
}

bool KLTable::verify_element(Elt w) const {
  const auto& t = c_[w];
  for (auto& [y, p] : t) {
    if (y == w) {
      if (!(p == LaurentPoly(Integer(1)))) return false;
    } else if (p.degree() >= 0) {
      return false;
    }
    if (!g_->bruhat_leq(y, w)) return false;
  }
  if (p(w, w).is_zero()) return false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    build_bar_table();
  }
  Workspace ws(g_->size());
  for (auto& [y, p] : t) {
    LaurentPoly pb = p.bar();
    for (auto& [x, r] : bar_table_[y]) ws.add_product(x, pb, r);
  }
  return ws.extract() == t;
}

std::vector<Elt> KLTable::verification_set(int full_limit, int sample) const {
  std::vector<Elt> out;
  int n = g_->size();
  if (n <= full_limit) {
    out.resize(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (int i = 0; i < sample; ++i) out.push_back(static_cast<Elt>(static_cast<long long>(i) * (n - 1) / (sample - 1)));
  out.push_back(g_->longest());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> KLTable::a_function_full() const {
  int n = g_->size();
  std::vector<int> a(n, num::kDegNegInf);
  for (Elt y = 0; y < n; ++y) {
    auto col = products_with_truncated(y, {});
    for (Elt x = 0; x < n; ++x)
      for (auto& [z, h] : col[x]) a[z] = std::max(a[z], h.degree());
  }
  return a;
}

std::vector<int> KLTable::a_function_from_cells(const std::vector<int>& two_sided_cell) const {
  int n = g_->size();
  std::map<int, int> best;
  for (Elt z = 0; z < n; ++z) {
    int c = two_sided_cell[z];
    auto it = best.find(c);
    if (it == best.end())
      best[c] = delta(z);
    else
      it->second = std::min(it->second, delta(z));
  }
  std::vector<int> a(n);
  for (Elt z = 0; z < n; ++z) a[z] = best[two_sided_cell[z]];
  return a;
}

Integer KLTable::gamma(Elt x, Elt y, Elt z) const {
  if (a_.empty()) throw std::logic_error("gamma: a-values not set");
  Elt zi = g_->inverse(z);
  for (auto& [u, h] : structure_constants(x, y))
    if (u == zi) return h.coeff(-a_[zi]);
  return Integer(0);
}

HeckeElement central_involution_sum(const CoxeterGroup& g, const std::vector<int>& classes,
                                    const std::function<Integer(Elt)>& f) {
  HeckeElement h;
  for (int c : classes) {
    const auto& cl = g.classes().at(c);
    if (!cl.is_involution_class) throw std::invalid_argument("central_involution_sum: class is not an involution class");
    for (Elt w : cl.members) h.add(w, LaurentPoly(f(w)));
  }
  return h;
}

}  // namespace klc::hecke
