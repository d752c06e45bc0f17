#include "klcells/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <unordered_map>

namespace klc::cox {

using num::AlgebraicNumber;

namespace {

bool crystallographic(int m) { return m == 2 || m == 3 || m == 4 || m == 6; }

void link(std::vector<std::vector<int>>& m, int i, int j, int label) { m[i][j] = m[j][i] = label; }

std::vector<std::vector<int>> irreducible_matrix(char type, int n, int dihedral) {
  if (type == 'I') {
    if (n != 2 || dihedral < 2) throw std::invalid_argument("I2(m) needs m >= 2");
    std::vector<std::vector<int>> m{{1, dihedral}, {dihedral, 1}};
    return m;
  }
  if (n < 1) throw std::invalid_argument("rank must be positive");
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto chain = [&](int from) {
    for (int i = from; i + 1 < n; ++i) link(m, i, i + 1, 3);
  };
  switch (type) {
    case 'A':
      chain(0);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      chain(1);
      link(m, 0, 1, 4);
      break;
    case 'D':
      if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
      chain(1);
      if (n >= 3) link(m, 0, 2, 3);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      // Bourbaki numbering: 1-3-4-5-..., 2 attached to 4
      link(m, 0, 2, 3);
      link(m, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1, 3);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n needs n = 4");
      chain(0);
      m[1][2] = m[2][1] = 4;
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G_n needs n = 2");
      link(m, 0, 1, 6);
      break;
    case 'H':
      if (n < 2 || n > 4) throw std::invalid_argument("H_n needs 2 <= n <= 4");
      chain(0);
      link(m, 0, 1, 5);
      break;
    default:
      throw std::invalid_argument(std::string("unknown Coxeter type ") + type);
  }
  return m;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long long irreducible_order(char type, int n, int dihedral) {
  switch (type) {
    case 'A':
      return factorial(n + 1);
    case 'B':
    case 'C':
      return (1LL << n) * factorial(n);
    case 'D':
      return (1LL << (n - 1)) * factorial(n);
    case 'E':
      return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F':
      return 1152;
    case 'G':
      return 12;
    case 'H':
      return n == 2 ? 10 : n == 3 ? 120 : 14400;
    case 'I':
      return 2LL * dihedral;
  }
  return 0;
}

struct Component {
  char type;
  int n;
  int dihedral;
};

std::vector<Component> parse_label(const std::string& label) {
  static const std::regex re(R"(([A-IZ])(\d+)(?:\((\d+)\))?)");
  std::vector<Component> out;
  size_t start = 0;
  while (start <= label.size()) {
    size_t x = label.find('x', start);
    std::string part = label.substr(start, x == std::string::npos ? std::string::npos : x - start);
    std::smatch mt;
    if (!std::regex_match(part, mt, re)) throw std::invalid_argument("cannot parse group label '" + label + "'");
    Component c{mt[1].str()[0], std::stoi(mt[2]), mt[3].matched ? std::stoi(mt[3]) : 0};
    if (c.type == 'I' && !mt[3].matched) throw std::invalid_argument("I2 needs a label, e.g. I2(5)");
    out.push_back(c);
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return out;
}

std::string key_of(const std::vector<int>& imgs) {
  std::string k(imgs.size() * 2, '\0');
  for (size_t i = 0; i < imgs.size(); ++i) {
    k[2 * i] = static_cast<char>(imgs[i] & 0xff);
    k[2 * i + 1] = static_cast<char>((imgs[i] >> 8) & 0xff);
  }
  return k;
}

std::string root_key(const std::vector<AlgebraicNumber>& r) {
  std::string k;
  for (auto& a : r) {
    for (int i = 0; i < static_cast<int>(a.coords().size()); ++i) k += a.coords()[i].get_str() + ",";
    k += ";";
  }
  return k;
}

}  // namespace

CoxeterSystem CoxeterSystem::from_label(const std::string& label) {
  auto comps = parse_label(label);
  int total = 0;
  for (auto& c : comps) total += c.n;
  std::vector<std::vector<int>> m(total, std::vector<int>(total, 2));
  int off = 0;
  for (auto& c : comps) {
    auto sub = irreducible_matrix(c.type, c.n, c.dihedral);
    for (int i = 0; i < c.n; ++i)
      for (int j = 0; j < c.n; ++j) m[off + i][off + j] = sub[i][j];
    off += c.n;
  }
  return from_matrix(m, label);
}

CoxeterSystem CoxeterSystem::from_matrix(const std::vector<std::vector<int>>& m, const std::string& label) {
  CoxeterSystem s;
  s.rank = static_cast<int>(m.size());
  if (s.rank > 32) throw std::invalid_argument("rank must be at most 32");
  for (int i = 0; i < s.rank; ++i) {
    if (static_cast<int>(m[i].size()) != s.rank) throw std::invalid_argument("Coxeter matrix not square");
    for (int j = 0; j < s.rank; ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("Coxeter matrix not symmetric");
      if (i == j && m[i][j] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      if (i != j && m[i][j] < 2) throw std::invalid_argument("Coxeter matrix entries must be >= 2 (finite)");
    }
  }
  s.matrix = m;
  s.type_label = label;
  int big = 1;
  for (int i = 0; i < s.rank; ++i)
    for (int j = 0; j < s.rank; ++j)
      if (!crystallographic(m[i][j]) && i != j) big = std::lcm(big, m[i][j]);
  s.base_field = num::field_for(big);
  return s;
}

CoxeterSystem CoxeterSystem::restrict_to(GenMask j) const {
  std::vector<int> idx;
  for (int i = 0; i < rank; ++i)
    if (j >> i & 1) idx.push_back(i);
  std::vector<std::vector<int>> m(idx.size(), std::vector<int>(idx.size()));
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) m[a][b] = matrix[idx[a]][idx[b]];
  return from_matrix(m, "");
}

bool CoxeterSystem::positive_definite() const {
  int l = 1;
  for (auto& row : matrix)
    for (int x : row) l = std::lcm(l, x);
  auto f = num::field_for(l);
  num::Matrix<AlgebraicNumber> g(rank, std::vector<AlgebraicNumber>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      g[i][j] = i == j ? AlgebraicNumber(2) : -AlgebraicNumber::two_cos(l / matrix[i][j], f);
  for (int k = 1; k <= rank; ++k) {
    num::Matrix<AlgebraicNumber> minor(k, std::vector<AlgebraicNumber>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = g[i][j];
    if (num::determinant(minor).sign() <= 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> CoxeterSystem::components() const {
  std::vector<int> comp(rank, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < rank; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> c{i};
    comp[i] = static_cast<int>(out.size());
    for (size_t k = 0; k < c.size(); ++k)
      for (int j = 0; j < rank; ++j)
        if (comp[j] < 0 && matrix[c[k]][j] > 2) {
          comp[j] = comp[i];
          c.push_back(j);
        }
    std::sort(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

long long CoxeterSystem::expected_order() const {
  if (type_label.empty()) return 0;
  try {
    long long o = 1;
    for (auto& c : parse_label(type_label)) o *= irreducible_order(c.type, c.n, c.dihedral);
    return o;
  } catch (const std::exception&) {
    return 0;
  }
}

CoxeterGroup::CoxeterGroup(CoxeterSystem sys, long long budget) : sys_(std::move(sys)) {
  if (!sys_.positive_definite()) throw std::invalid_argument("Coxeter system is not finite (form not positive definite)");
  long long expect = sys_.expected_order();
  if (expect > 0 && expect > budget)
    throw BudgetExceeded("group " + sys_.type_label + " has " + std::to_string(expect) + " elements, budget is " +
                         std::to_string(budget));
  enumerate(budget);
  if (size() <= 2000) build_bruhat();
  build_classes();
}

void CoxeterGroup::enumerate(long long budget) {
  int n = sys_.rank;
  auto f = sys_.base_field;
  // s_i(alpha_j) = alpha_j + c[i][j] alpha_i, c[i][i] = -2
  std::vector<std::vector<AlgebraicNumber>> c(n, std::vector<AlgebraicNumber>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = sys_.matrix[i][j];
      if (i == j)
        c[i][j] = -2;
      else if (m == 2)
        c[i][j] = 0;
      else if (m == 3)
        c[i][j] = 1;
      else if (m == 4)
        c[i][j] = i < j ? 1 : 2;
      else if (m == 6)
        c[i][j] = i < j ? 1 : 3;
      else
        c[i][j] = AlgebraicNumber::two_cos(f->m() / m, f);
    }
  auto reflect = [&](int i, const std::vector<AlgebraicNumber>& b) {
    AlgebraicNumber k;
    for (int j = 0; j < n; ++j)
      if (!b[j].is_zero() && !c[i][j].is_zero()) k += c[i][j] * b[j];
    auto r = b;
    r[i] += k;
    return r;
  };
  // positive roots by closure from the simple roots
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    std::vector<AlgebraicNumber> e(n);
    e[i] = 1;
    index[root_key(e)] = i;
    roots_.push_back(e);
  }
  for (size_t k = 0; k < roots_.size(); ++k)
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(k) == i) continue;
      auto r = reflect(i, roots_[k]);
      auto key = root_key(r);
      if (index.count(key)) continue;
      index[key] = static_cast<int>(roots_.size());
      roots_.push_back(r);
      if (roots_.size() > 20000) throw BudgetExceeded("root system too large");
    }
  npos_ = static_cast<int>(roots_.size());
  for (int k = 0; k < npos_; ++k) {
    auto neg = roots_[k];
    for (auto& a : neg) a = -a;
    index[root_key(neg)] = npos_ + k;
    roots_.push_back(neg);
  }
  root_perm_.assign(n, std::vector<int>(2 * npos_));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2 * npos_; ++k) {
      auto it = index.find(root_key(reflect(i, roots_[k])));
      if (it == index.end()) throw std::logic_error("root system not closed under reflections");
      root_perm_[i][k] = it->second;
    }

  // elements by breadth-first closure, keyed by the images of the simple roots
  std::vector<int> images;  // flattened per element
  std::vector<std::vector<Elt>> lm;
  std::unordered_map<std::string, Elt> ids;
  std::vector<int> id0(n);
  std::iota(id0.begin(), id0.end(), 0);
  ids[key_of(id0)] = 0;
  images = id0;
  len_.push_back(0);
  first_letter_.push_back(-1);
  for (size_t w = 0; w < len_.size(); ++w) {
    lm.emplace_back(n, -1);
    for (int s = 0; s < n; ++s) {
      std::vector<int> img(n);
      for (int j = 0; j < n; ++j) img[j] = root_perm_[s][images[w * n + j]];
      auto key = key_of(img);
      auto it = ids.find(key);
      if (it != ids.end()) {
        lm[w][s] = it->second;
        continue;
      }
      Elt id = static_cast<Elt>(len_.size());
      if (id >= budget) throw BudgetExceeded("group enumeration exceeded budget of " + std::to_string(budget));
      ids.emplace(std::move(key), id);
      images.insert(images.end(), img.begin(), img.end());
      len_.push_back(len_[w] + 1);
      first_letter_.push_back(s);
      lm[w][s] = id;
    }
  }
  int sz = size();
  lmul_.assign(static_cast<size_t>(n) * sz, 0);
  for (int w = 0; w < sz; ++w)
    for (int s = 0; s < n; ++s) lmul_[static_cast<size_t>(s) * sz + w] = lm[w][s];
  inv_.assign(sz, 0);
  rdesc_.assign(sz, 0);
  ldesc_.assign(sz, 0);
  for (int w = 0; w < sz; ++w) {
    Elt x = 0;
    for (int s : reduced_word(w)) x = lmul(s, x);
    inv_[w] = x;
    for (int s = 0; s < n; ++s)
      if (images[static_cast<size_t>(w) * n + s] >= npos_) rdesc_[w] |= GenMask(1) << s;
  }
  for (int w = 0; w < sz; ++w) ldesc_[w] = rdesc_[inv_[w]];
  rmul_.assign(static_cast<size_t>(n) * sz, 0);
  for (int w = 0; w < sz; ++w)
    for (int s = 0; s < n; ++s) rmul_[static_cast<size_t>(s) * sz + w] = inv_[lmul(s, inv_[w])];
  w0_ = static_cast<Elt>(std::max_element(len_.begin(), len_.end()) - len_.begin());
}

std::vector<int> CoxeterGroup::reduced_word(Elt w) const {
  std::vector<int> word;
  while (w != 0) {
    int s = first_letter_[w];
    word.push_back(s);
    w = lmul(s, w);
  }
  return word;
}

Elt CoxeterGroup::from_word(const std::vector<int>& word) const {
  Elt x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = lmul(*it, x);
  return x;
}

std::string CoxeterGroup::word_string(Elt w) const {
  if (w == 0) return "e";
  std::string s;
  for (int g : reduced_word(w)) s += std::to_string(g);
  return s;
}

Elt CoxeterGroup::multiply(Elt x, Elt y) const {
  auto word = reduced_word(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = lmul(*it, y);
  return y;
}

int CoxeterGroup::act_on_root(Elt w, int r) const {
  auto word = reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = root_perm_[*it][r];
  return r;
}

num::Matrix<AlgebraicNumber> CoxeterGroup::reflection_matrix(Elt w) const {
  int n = rank();
  num::Matrix<AlgebraicNumber> m(n, std::vector<AlgebraicNumber>(n));
  for (int j = 0; j < n; ++j) {
    const auto& r = roots_[act_on_root(w, j)];
    for (int i = 0; i < n; ++i) m[i][j] = r[i];
  }
  return m;
}

GenMask CoxeterGroup::root_support(int r) const {
  GenMask m = 0;
  for (int i = 0; i < rank(); ++i)
    if (!roots_[r][i].is_zero()) m |= GenMask(1) << i;
  return m;
}

void CoxeterGroup::build_bruhat() {
  int sz = size();
  size_t words = (sz + 63) / 64;
  bruhat_.assign(sz, std::vector<uint64_t>(words, 0));
  std::vector<Elt> order(sz);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Elt a, Elt b) { return len_[a] < len_[b]; });
  bruhat_[0][0] = 1;
  // sw < w: {x <= w} = {x <= sw} union s{x <= sw}
  for (Elt w : order) {
    if (w == 0) continue;
    int s = first_letter_[w];
    Elt sw = lmul(s, w);
    auto& row = bruhat_[w];
    row = bruhat_[sw];
    const auto& src = bruhat_[sw];
    for (size_t b = 0; b < words; ++b) {
      uint64_t bits = src[b];
      while (bits) {
        int t = __builtin_ctzll(bits);
        bits &= bits - 1;
        Elt x = lmul(s, static_cast<Elt>(b * 64 + t));
        row[x / 64] |= uint64_t(1) << (x % 64);
      }
    }
  }
}

bool CoxeterGroup::bruhat_leq(Elt x, Elt y) const {
  if (!bruhat_.empty()) return bruhat_[y][x / 64] >> (x % 64) & 1;
  // lifting: for sy < y, x <= y iff min(x, sx) <= sy
  while (true) {
    if (len_[x] > len_[y]) return false;
    if (y == 0) return x == 0;
    int s = first_letter_[y];
    Elt sx = lmul(s, x);
    if (len_[sx] < len_[x]) x = sx;
    y = lmul(s, y);
  }
}

void CoxeterGroup::build_classes() {
  int sz = size();
  class_of_.assign(sz, -1);
  std::vector<ConjClass> tmp;
  for (Elt w = 0; w < sz; ++w) {
    if (class_of_[w] >= 0) continue;
    ConjClass c;
    int id = static_cast<int>(tmp.size());
    c.members.push_back(w);
    class_of_[w] = id;
    for (size_t k = 0; k < c.members.size(); ++k)
      for (int s = 0; s < rank(); ++s) {
        Elt y = rmul(lmul(s, c.members[k]), s);
        if (class_of_[y] < 0) {
          class_of_[y] = id;
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    c.min_length_rep = c.members[0];
    for (Elt y : c.members)
      if (len_[y] < len_[c.min_length_rep]) c.min_length_rep = y;
    c.is_involution_class = multiply(c.min_length_rep, c.min_length_rep) == 0;
    tmp.push_back(std::move(c));
  }
  std::vector<int> order(tmp.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    Elt ra = tmp[a].min_length_rep, rb = tmp[b].min_length_rep;
    return std::make_pair(len_[ra], ra) < std::make_pair(len_[rb], rb);
  });
  std::vector<int> newid(tmp.size());
  for (size_t i = 0; i < order.size(); ++i) {
    newid[order[i]] = static_cast<int>(i);
    classes_.push_back(std::move(tmp[order[i]]));
  }
  for (auto& c : class_of_) c = newid[c];
}

std::vector<Elt> CoxeterGroup::involutions() const {
  std::vector<Elt> out;
  for (Elt w = 0; w < size(); ++w)
    if (inv_[w] == w) out.push_back(w);
  return out;
}

ParabolicSubgroup CoxeterGroup::parabolic(GenMask j) const {
  ParabolicSubgroup p;
  p.generators = j;
  std::vector<char> seen(size(), 0);
  p.elements.push_back(0);
  seen[0] = 1;
  for (size_t k = 0; k < p.elements.size(); ++k)
    for (int s = 0; s < rank(); ++s) {
      if (!(j >> s & 1)) continue;
      Elt y = lmul(s, p.elements[k]);
      if (!seen[y]) {
        seen[y] = 1;
        p.elements.push_back(y);
      }
    }
  std::sort(p.elements.begin(), p.elements.end());
  p.longest = p.elements[0];
  for (Elt y : p.elements)
    if (len_[y] > len_[p.longest]) p.longest = y;
  return p;
}

std::vector<Elt> CoxeterGroup::centralizer(Elt w) const {
  std::vector<Elt> out;
  auto word = reduced_word(w);
  for (Elt x = 0; x < size(); ++x) {
    // x w == w x, computed via generator tables
    Elt xw = multiply(x, w);
    Elt wx = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) wx = lmul(*it, wx);
    if (xw == wx) out.push_back(x);
  }
  return out;
}

int CoxeterGroup::epsilon_sigma(Elt sigma, GenMask j, Elt w) const {
  auto p = parabolic(j);
  if (p.longest != sigma) throw std::invalid_argument("sigma is not the longest element of W_J");
  for (int s = 0; s < rank(); ++s)
    if ((j >> s & 1) && lmul(s, sigma) != rmul(sigma, s)) throw std::invalid_argument("sigma is not central in W_J");
  if (multiply(w, sigma) != multiply(sigma, w)) throw std::invalid_argument("w does not centralize sigma");
  int k = 0;
  for (int r = 0; r < npos_; ++r)
    if ((root_support(r) & ~j) == 0 && act_on_root(w, r) >= npos_) ++k;
  return k % 2 ? -1 : 1;
}

std::optional<GenMask> CoxeterGroup::central_parabolic_of(Elt sigma) const {
  GenMask j = ldesc_[sigma];
  if (parabolic(j).longest != sigma) return std::nullopt;
  for (int s = 0; s < rank(); ++s)
    if ((j >> s & 1) && lmul(s, sigma) != rmul(sigma, s)) return std::nullopt;
  return j;
}

std::vector<int> signed_permutation(const CoxeterGroup& g, Elt w, char type) {
  int n = g.rank();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  auto word = g.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    for (int& x : p) {
      int a = std::abs(x), sg = x < 0 ? -1 : 1;
      if (s == 0 && type == 'B') {
        if (a == 1) sg = -sg;
      } else if (s == 0 && type == 'D') {
        if (a == 1) {
          a = 2;
          sg = -sg;
        } else if (a == 2) {
          a = 1;
          sg = -sg;
        }
      } else if (a == s) {
        a = s + 1;
      } else if (a == s + 1) {
        a = s;
      }
      x = sg * a;
    }
  }
  return p;
}

std::vector<LabelledElement> involution_class_reps_classical(const CoxeterGroup& g, char type, int n) {
  std::vector<LabelledElement> out;
  auto lbl = [](int l, int j) { return "sigma_{" + std::to_string(l) + "," + std::to_string(j) + "}"; };
  if (type == 'A') {
    if (n < 1 || g.rank() != n - 1) throw std::invalid_argument("type A reps: group must be A_{n-1}");
    for (int j = 0; 2 * j <= n; ++j) {
      std::vector<int> word;
      for (int i = 0; i < j; ++i) word.push_back(2 * i);
      out.push_back({"sigma_" + std::to_string(j), g.from_word(word)});
    }
    return out;
  }
  if (type == 'B') {
    if (n < 2 || g.rank() != n) throw std::invalid_argument("type B reps: rank mismatch");
    for (int l = 0; l <= n; ++l)
      for (int j = 0; l + 2 * j <= n; ++j) {
        Elt x = 0;
        // t_1 ... t_l, with t_1 = t, t_i = s_{i-1} t_{i-1} s_{i-1}
        for (int i = 1; i <= l; ++i) {
          std::vector<int> ti;
          for (int k = i - 1; k >= 1; --k) ti.push_back(k);
          ti.push_back(0);
          for (int k = 1; k <= i - 1; ++k) ti.push_back(k);
          x = g.multiply(x, g.from_word(ti));
        }
        for (int i = 0; i < j; ++i) x = g.rmul(x, l + 1 + 2 * i);
        out.push_back({lbl(l, j), x});
      }
    return out;
  }
  if (type == 'D') {
    if (n < 2 || g.rank() != n) throw std::invalid_argument("type D reps: rank mismatch");
    std::map<std::vector<int>, Elt> by_perm;
    for (Elt w = 0; w < g.size(); ++w) by_perm[signed_permutation(g, w, 'D')] = w;
    for (int l = 0; l <= n; l += 2)
      for (int j = 0; l + 2 * j <= n; ++j) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        for (int i = 0; i < l; ++i) p[i] = -p[i];
        for (int i = 0; i < j; ++i) std::swap(p[l + 2 * i], p[l + 2 * i + 1]);
        Elt x = by_perm.at(p);
        Elt rep = g.classes()[g.class_of(x)].min_length_rep;
        if (l == 0 && 2 * j == n) {
          std::vector<int> word, theta_word;
          for (int i = 0; i < j; ++i) word.push_back(2 * i + 1);
          theta_word = word;
          theta_word[0] = 0;
          out.push_back({lbl(0, j), g.from_word(word)});
          out.push_back({"theta(" + lbl(0, j) + ")", g.from_word(theta_word)});
        } else {
          out.push_back({lbl(l, j), rep});
        }
      }
    return out;
  }
  throw std::invalid_argument("classical reps: type must be A, B or D");
}

}  // namespace klc::cox
