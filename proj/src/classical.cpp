#include "klcells/classical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klc::classical {

using chars::AlgebraicNumber;
using kott::Check;

namespace {

struct Failures {
  std::vector<std::string> items;
  void operator()(std::string s) { items.push_back(std::move(s)); }
  bool ok() const { return items.empty(); }
  std::string str(const std::string& on_pass = "") const {
    if (items.empty()) return on_pass;
    std::ostringstream os;
    for (size_t i = 0; i < items.size() && i < 3; ++i) os << (i ? "; " : "") << items[i];
    if (items.size() > 3) os << "; ... (" << items.size() << " total)";
    return os.str();
  }
};

std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> x(len, 0);
  for (int i = 0; i < len; ++i) x[i] = (i < p.length() ? p.parts[i] : 0) + len - 1 - i;
  return x;  // decreasing
}

Partition from_beta_set(std::vector<int> x) {
  std::sort(x.rbegin(), x.rend());
  std::vector<int> parts;
  int len = static_cast<int>(x.size());
  for (int i = 0; i < len; ++i) parts.push_back(x[i] - (len - 1 - i));
  return Partition(parts);
}

// partitions obtained by removing a rim hook of size k, with sign (-1)^height
std::vector<std::pair<Partition, int>> remove_hooks(const Partition& p, int k) {
  std::vector<std::pair<Partition, int>> out;
  auto x = beta_set(p, p.length());
  std::set<int> xs(x.begin(), x.end());
  for (int v : x) {
    int u = v - k;
    if (u < 0 || xs.count(u)) continue;
    int between = 0;
    for (int y : x) between += y > u && y < v;
    auto y = x;
    std::replace(y.begin(), y.end(), v, u);
    out.emplace_back(from_beta_set(y), between % 2 ? -1 : 1);
  }
  return out;
}

long long mn_A(const Partition& p, const std::vector<int>& cyc, size_t from) {
  if (from == cyc.size()) return p.size() == 0 ? 1 : 0;
  long long s = 0;
  for (auto& [q, sg] : remove_hooks(p, cyc[from])) s += sg * mn_A(q, cyc, from + 1);
  return s;
}

long long mn_B(const Partition& a, const Partition& b, const std::vector<std::pair<int, int>>& cyc, size_t from) {
  if (from == cyc.size()) return a.size() == 0 && b.size() == 0 ? 1 : 0;
  auto [k, sign] = cyc[from];
  long long s = 0;
  for (auto& [q, sg] : remove_hooks(a, k)) s += sg * mn_B(q, b, cyc, from + 1);
  for (auto& [q, sg] : remove_hooks(b, k)) s += sign * sg * mn_B(a, q, cyc, from + 1);
  return s;
}

std::vector<int> increasing_padded(const Partition& p, int len) {
  std::vector<int> v(len, 0);
  for (int i = 0; i < p.length(); ++i) v[len - 1 - i] = p.parts[i];
  return v;
}

long long as_int(const AlgebraicNumber& a) {
  if (!a.is_rational() || a.rational_value().get_den() != 1) throw std::logic_error("not an integer");
  return a.rational_value().get_num().get_si();
}

long long inner(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g) { return as_int(t.inner(f, g)); }

// (l, j) = (number of i -> -i, number of 2-cycles) for an involution given as a signed permutation
std::pair<int, int> involution_type(const std::vector<int>& p) {
  int l = 0, moved = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] == -(i + 1)) ++l;
    if (std::abs(p[i]) != i + 1) ++moved;
  }
  return {l, moved / 2};
}

// <rho_C, [C']> = <rho_C, chi_0> for every left cell, chi_0 special in its family
void check_special_reduction(const Analysis& an, const std::string& name, VerificationReport& rep) {
  const auto& t = an.table;
  Failures f;
  for (int c : kott::involution_classes(*an.group)) {
    auto rho = kott::rho_character(*an.group, {c});
    auto m = t.multiplicities(rho);
    for (size_t cell = 0; cell < an.cells.left.size(); ++cell) {
      int fam = an.cells.two_sided_of[an.cells.left[cell][0]];
      int chi0 = -1;
      for (int chi : an.families.members[fam])
        if (an.leading.special[chi]) chi0 = chi;
      if (chi0 < 0) {
        f("no special character in cell " + std::to_string(fam));
        continue;
      }
      if (inner(t, rho, an.cell_chars[cell]) != m[chi0]) f("left cell " + std::to_string(cell));
    }
  }
  rep.add(name, f.ok(), f.str());
}

}  // namespace

Partition::Partition(std::vector<int> p) {
  std::sort(p.rbegin(), p.rend());
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!p.empty() && p.back() < 0) throw std::invalid_argument("negative part");
  parts = std::move(p);
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int i = 1; !parts.empty() && i <= parts[0]; ++i) {
    int k = 0;
    for (int x : parts) k += x >= i;
    c.push_back(k);
  }
  return Partition(c);
}

int Partition::odd_parts() const {
  int k = 0;
  for (int x : parts) k += x % 2;
  return k;
}

std::string Partition::str() const {
  if (parts.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxp) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string Bipartition::str() const { return "(" + alpha.str() + "|" + beta.str() + ")"; }

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (auto& a : partitions(k))
      for (auto& b : partitions(n - k)) out.push_back({a, b});
  return out;
}

int BSymbol::rank() const {
  int s = 0;
  for (int x : top) s += x;
  for (int x : bottom) s += x;
  return s - m() * m();
}

Bipartition BSymbol::bipartition() const {
  std::vector<int> a, b;
  for (int i = 0; i < static_cast<int>(top.size()); ++i) a.push_back(top[i] - i);
  for (int i = 0; i < static_cast<int>(bottom.size()); ++i) b.push_back(bottom[i] - i);
  return {Partition(a), Partition(b)};
}

std::vector<int> BSymbol::entries() const {
  std::vector<int> e = top;
  e.insert(e.end(), bottom.begin(), bottom.end());
  std::sort(e.begin(), e.end());
  return e;
}

std::string BSymbol::str() const {
  auto row = [](const std::vector<int>& r) {
    std::string s;
    for (size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s;
  };
  return row(top) + " / " + row(bottom);
}

int default_m(const Bipartition& bp) { return std::max(bp.alpha.length() - 1, bp.beta.length()); }

BSymbol symbol(const Bipartition& bp, int m) {
  if (m < default_m(bp)) throw std::invalid_argument("symbol: m too small");
  BSymbol s;
  auto a = increasing_padded(bp.alpha, m + 1), b = increasing_padded(bp.beta, m);
  for (int i = 0; i <= m; ++i) s.top.push_back(a[i] + i);
  for (int i = 0; i < m; ++i) s.bottom.push_back(b[i] + i);
  return s;
}

SymbolInvariants symbol_invariants(const Bipartition& bp, int m) {
  auto s = symbol(bp, m);
  auto a = increasing_padded(bp.alpha, m + 1), b = increasing_padded(bp.beta, m);
  SymbolInvariants r;
  r.special = true;
  for (int i = 0; i < m; ++i) {
    if (std::find(s.top.begin(), s.top.end(), s.bottom[i]) == s.top.end()) ++r.d;
    r.j0 += std::min(a[i + 1], b[i]);
    if (!(s.top[i] <= s.bottom[i] && s.bottom[i] <= s.top[i + 1])) r.special = false;
  }
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long kottwitz_multiplicity_B(const Bipartition& bp, int l, int j) {
  auto inv = symbol_invariants(bp);
  if (!inv.special || j + l != bp.beta.size()) return 0;
  return binomial(inv.d, inv.j0 - j);
}

int kottwitz_multiplicity_A(const Partition& alpha, int j) {
  return alpha.size() - 2 * j == alpha.conjugate().odd_parts() ? 1 : 0;
}

std::string kind_name(Cuspidality::Kind k) {
  switch (k) {
    case Cuspidality::Kind::cuspidal: return "cuspidal";
    case Cuspidality::Kind::strongly_non_cuspidal: return "strongly non-cuspidal";
    default: return "non-cuspidal via w0";
  }
}

Cuspidality cuspidality_B(const Bipartition& bp) {
  auto s = symbol(bp);
  auto e = s.entries();
  int top = e.empty() ? 0 : e.back();
  std::set<int> present(e.begin(), e.end());
  int gap = -1;
  for (int i = top - 1; i >= 0; --i)
    if (!present.count(i)) {
      gap = i;
      break;
    }
  Cuspidality c;
  if (gap >= 0) {
    c.kind = Cuspidality::Kind::strongly_non_cuspidal;
    BSymbol lower = s;
    for (auto* row : {&lower.top, &lower.bottom})
      for (int& x : *row)
        if (x > gap) {
          --x;
          ++c.r;
        }
    c.psi0 = lower.bipartition();
    return c;
  }
  bool once = static_cast<int>(e.size()) == 2 * s.m() + 1;
  for (int i = 0; once && i <= 2 * s.m(); ++i) once = e[i] == i;
  c.kind = once ? Cuspidality::Kind::cuspidal : Cuspidality::Kind::non_cuspidal_via_w0;
  return c;
}

long long character_A(const Partition& alpha, const std::vector<int>& cycle_type) {
  return mn_A(alpha, cycle_type, 0);
}

long long character_B(const Bipartition& bp, const std::vector<int>& positive_cycles,
                      const std::vector<int>& negative_cycles) {
  std::vector<std::pair<int, int>> cyc;
  for (int k : positive_cycles) cyc.emplace_back(k, 1);
  for (int k : negative_cycles) cyc.emplace_back(k, -1);
  return mn_B(bp.alpha, bp.beta, cyc, 0);
}

std::vector<int> permutation_A(const CoxeterGroup& g, Elt w) {
  std::vector<int> p(g.rank() + 1);
  std::iota(p.begin(), p.end(), 1);
  auto word = g.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    for (int& x : p)
      if (x == *it + 1)
        x = *it + 2;
      else if (x == *it + 2)
        x = *it + 1;
  return p;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> out;
  std::vector<char> seen(perm.size(), 0);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = std::abs(perm[j]) - 1) seen[j] = 1, ++len;
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const std::vector<int>& sperm) {
  std::vector<int> pos, neg;
  std::vector<char> seen(sperm.size(), 0);
  for (size_t i = 0; i < sperm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    for (size_t j = i; !seen[j]; j = std::abs(sperm[j]) - 1) {
      seen[j] = 1;
      ++len;
      if (sperm[j] < 0) sign = -sign;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  return {pos, neg};
}

std::vector<int> label_type_A(const CharacterTable& t, const std::vector<Partition>& labels) {
  const auto& g = *t.group;
  std::vector<std::vector<int>> types;
  for (auto& c : g.classes()) types.push_back(cycle_type(permutation_A(g, c.min_length_rep)));
  std::vector<int> out;
  std::set<int> used;
  for (auto& a : labels) {
    ClassFunction f;
    for (auto& ty : types) f.push_back(AlgebraicNumber(character_A(a, ty)));
    int i = t.index_of(f);
    if (i < 0 || !used.insert(i).second) throw std::logic_error("type A labelling failed at " + a.str());
    out.push_back(i);
  }
  if (static_cast<int>(used.size()) != t.size()) throw std::logic_error("type A labelling is not onto");
  return out;
}

std::vector<int> label_type_B(const CharacterTable& t, const std::vector<Bipartition>& labels) {
  const auto& g = *t.group;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> types;
  for (auto& c : g.classes()) types.push_back(signed_cycle_type(cox::signed_permutation(g, c.min_length_rep, 'B')));
  std::vector<int> out;
  std::set<int> used;
  for (auto& bp : labels) {
    ClassFunction f;
    for (auto& [p, n] : types) f.push_back(AlgebraicNumber(character_B(bp, p, n)));
    int i = t.index_of(f);
    if (i < 0 || !used.insert(i).second) throw std::logic_error("type B labelling failed at " + bp.str());
    out.push_back(i);
  }
  if (static_cast<int>(used.size()) != t.size()) throw std::logic_error("type B labelling is not onto");
  return out;
}

GenMask young_mask(const std::vector<int>& blocks, int first) {
  GenMask m = 0;
  int pos = 0;
  for (int c : blocks) {
    for (int k = 0; k + 1 < c; ++k) m |= GenMask(1) << (first + pos + k);
    pos += c;
  }
  return m;
}

Elt theta(const CoxeterGroup& g, Elt w) {
  auto word = g.reduced_word(w);
  for (int& s : word)
    if (s <= 1) s = 1 - s;
  return g.from_word(word);
}

ClassFunction theta_conjugate(const CharacterTable& t, const ClassFunction& f) {
  const auto& g = *t.group;
  ClassFunction out;
  for (auto& c : g.classes()) out.push_back(f[g.class_of(theta(g, c.min_length_rep))]);
  return out;
}

TypeDPair typeD_pm_characters(const CoxeterGroup& g, const CharacterTable& t, const Partition& alpha) {
  int n = g.rank();
  if (n % 2 || alpha.size() * 2 != n) throw std::invalid_argument("type D pair: need n even and |alpha| = n/2");
  TypeDPair r;
  r.alpha = alpha;
  std::vector<int> blocks;
  for (int x : alpha.conjugate().parts) blocks.push_back(2 * x);
  r.young = young_mask(blocks, 1);
  auto par = g.parabolic(r.young);
  r.longest = par.longest;
  std::vector<AlgebraicNumber> eps;
  for (Elt x : par.elements) eps.push_back(AlgebraicNumber(g.length(x) % 2 ? -1 : 1));
  auto m = t.multiplicities(chars::induce(t, par.elements, eps));
  int len = g.length(par.longest);
  for (int chi = 0; chi < t.size(); ++chi) {
    if (!m[chi]) continue;
    if (t.b_values[chi] < len) throw std::logic_error("type D pair: constituent below the expected b");
    if (t.b_values[chi] == len) {
      if (r.plus >= 0 || m[chi] != 1) throw std::logic_error("type D pair: not unique for " + alpha.str());
      r.plus = chi;
    }
  }
  if (r.plus < 0) throw std::logic_error("type D pair: no constituent for " + alpha.str());
  r.minus = t.index_of(theta_conjugate(t, t.values[r.plus]));
  if (r.minus < 0 || r.minus == r.plus) throw std::logic_error("type D pair: character is theta-stable");
  return r;
}

void verify_type_A(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  const int n = g.rank() + 1;
  auto parts = partitions(n);
  std::vector<int> idx;
  try {
    idx = label_type_A(t, parts);
    rep.add("classical.A.labels", true, std::to_string(parts.size()) + " partitions");
  } catch (const std::exception& e) {
    rep.add("classical.A.labels", false, e.what());
    return;
  }
  auto inv = kott::involution_classes(g);
  Failures mult, all, match;
  ClassFunction total(t.class_sizes.size());
  for (int c : inv) {
    auto p = permutation_A(g, g.classes()[c].min_length_rep);
    int j = 0;
    for (int i = 0; i < n; ++i) j += p[i] != i + 1;
    j /= 2;
    auto rho = kott::rho_character(g, {c});
    for (size_t k = 0; k < total.size(); ++k) total[k] += rho[k];
    auto m = t.multiplicities(rho);
    for (size_t a = 0; a < parts.size(); ++a)
      if (m[idx[a]] != kottwitz_multiplicity_A(parts[a], j))
        mult("j=" + std::to_string(j) + ", alpha=" + parts[a].str());
  }
  std::vector<long long> ones(t.size(), 1);
  if (total != t.combine(ones)) all("rho of all involutions");
  for (size_t a = 0; a < parts.size(); ++a) {
    int chi = idx[a];
    auto par = g.parabolic(young_mask(parts[a].conjugate().parts, 0));
    Elt w = par.longest;
    int cls = g.class_of(w);
    for (int c : inv) {
      long long want = c == cls ? 1 : 0;
      if (t.multiplicities(kott::rho_character(g, {c}))[chi] != want) match(parts[a].str() + ": rho multiplicity");
    }
    if (an.leading.a_char[chi] != g.length(w)) match(parts[a].str() + ": a-value");
    int fam = an.families.family_of_char[chi];
    if (an.cells.two_sided_of[w] != fam) match(parts[a].str() + ": longest element outside its cell");
    if (kott::classes_met(g, an.cells.two_sided[fam]) != std::vector<int>{cls}) match(parts[a].str() + ": classes met");
    std::vector<AlgebraicNumber> eps;
    for (Elt x : par.elements) eps.push_back(AlgebraicNumber(g.length(x) % 2 ? -1 : 1));
    if (t.multiplicities(chars::induce(t, par.elements, eps))[chi] != 1) match(parts[a].str() + ": induced sign");
  }
  rep.add("classical.A.multiplicity", mult.ok(), mult.str());
  rep.add("classical.A.rho_all", all.ok(), all.str());
  rep.add("classical.A.matching", match.ok(), match.str());
}

void verify_type_B(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  const int n = g.rank();
  auto bps = bipartitions(n);
  std::vector<int> idx;
  try {
    idx = label_type_B(t, bps);
    rep.add("classical.B.labels", true, std::to_string(bps.size()) + " bipartitions");
  } catch (const std::exception& e) {
    rep.add("classical.B.labels", false, e.what());
    return;
  }
  // involution classes by (l, j)
  Failures reps;
  std::map<int, std::pair<int, int>> type_of;
  for (int c : kott::involution_classes(g))
    type_of[c] = involution_type(cox::signed_permutation(g, g.classes()[c].min_length_rep, 'B'));
  auto listed = cox::involution_class_reps_classical(g, 'B', n);
  if (listed.size() != type_of.size()) reps("class count");
  for (auto& le : listed) {
    auto ty = type_of.at(g.class_of(le.element));
    std::string want = "sigma_{" + std::to_string(ty.first) + "," + std::to_string(ty.second) + "}";
    if (le.label != want) reps(le.label + " lies in class " + want);
    if (g.length(le.element) != g.length(g.classes()[g.class_of(le.element)].min_length_rep))
      reps(le.label + " not of minimal length");
  }
  rep.add("classical.B.class_reps", reps.ok(), reps.str());

  Failures mult, all;
  ClassFunction total(t.class_sizes.size());
  for (auto& [c, ty] : type_of) {
    auto rho = kott::rho_character(g, {c});
    for (size_t k = 0; k < total.size(); ++k) total[k] += rho[k];
    auto m = t.multiplicities(rho);
    for (size_t b = 0; b < bps.size(); ++b)
      if (m[idx[b]] != kottwitz_multiplicity_B(bps[b], ty.first, ty.second))
        mult("(l,j)=(" + std::to_string(ty.first) + "," + std::to_string(ty.second) + "), " + bps[b].str());
  }
  std::vector<long long> want(t.size(), 0);
  for (size_t b = 0; b < bps.size(); ++b) {
    auto inv = symbol_invariants(bps[b]);
    if (inv.special) want[idx[b]] = 1LL << inv.d;
  }
  if (total != t.combine(want)) all("rho of all involutions");
  rep.add("classical.B.multiplicity", mult.ok(), mult.str());
  rep.add("classical.B.rho_all", all.ok(), all.str());

  Failures sym, fs;
  for (size_t b = 0; b < bps.size(); ++b) {
    int m = default_m(bps[b]);
    auto inv = symbol_invariants(bps[b], m);
    if (!(inv == symbol_invariants(bps[b], m + 1) && inv == symbol_invariants(bps[b], m + 2))) sym(bps[b].str());
    if (symbol(bps[b], m + 1).bipartition() != bps[b]) sym(bps[b].str() + " round trip");
    auto s = symbol(bps[b], m);
    if (m > 0 && s.top[0] == 0 && s.bottom[0] == 0) sym(bps[b].str() + " has 0 in both rows");
    int chi = idx[b];
    if (an.equal_parameters()) {
      if (an.leading.f_char[chi] != AlgebraicNumber(1LL << inv.d)) fs(bps[b].str() + ": f");
      if (static_cast<bool>(an.leading.special[chi]) != inv.special) fs(bps[b].str() + ": special");
    }
  }
  rep.add("classical.B.symbol_shift", sym.ok(), sym.str());
  if (an.equal_parameters())
    rep.add("classical.B.f_and_special", fs.ok(), fs.str());
  else
    rep.skip("classical.B.f_and_special", "equal parameters only");

  Failures cusp, wit;
  std::map<std::string, int> kinds;
  for (size_t b = 0; b < bps.size(); ++b) {
    auto inv = symbol_invariants(bps[b]);
    if (!inv.special) continue;
    auto c = cuspidality_B(bps[b]);
    ++kinds[kind_name(c.kind)];
    if (c.kind == Cuspidality::Kind::cuspidal) {
      bool ok = false;
      for (int d = 1; d * d + d <= n; ++d) ok = ok || d * d + d == n;
      if (!ok) cusp(bps[b].str() + ": cuspidal but n is not d^2 + d");
      continue;
    }
    if (c.kind != Cuspidality::Kind::strongly_non_cuspidal) continue;
    auto pinv = symbol_invariants(c.psi0);
    if (c.r < 1 || c.r > n || c.psi0.size() != n - c.r || !pinv.special) cusp(bps[b].str() + ": witness shape");
    if (pinv.d != inv.d || inv.j0 != pinv.j0 + c.r / 2 || bps[b].beta.size() != c.psi0.beta.size() + c.r / 2)
      cusp(bps[b].str() + ": d, j0 or |beta| relation");
    // the witness under J-induction
    GenMask j = 0;
    for (int s = 0; s < n; ++s)
      if (s != n - c.r) j |= GenMask(1) << s;
    cox::CoxeterGroup sub(g.system().restrict_to(j));
    auto st = chars::ordinary_character_table(sub);
    auto emb = chars::embed_parabolic(g, j, sub);
    ClassFunction f;
    for (auto& cl : sub.classes()) {
      auto sp = cox::signed_permutation(g, emb[cl.min_length_rep], 'B');
      std::vector<int> head(sp.begin(), sp.begin() + (n - c.r)), tail;
      for (int i = n - c.r; i < n; ++i) tail.push_back(sp[i] - (n - c.r));
      auto [pos, neg] = signed_cycle_type(head);
      long long sign = 1;
      for (int len : cycle_type(tail)) sign *= len % 2 ? 1 : -1;
      f.push_back(AlgebraicNumber(character_B(c.psi0, pos, neg) * sign));
    }
    int k = st.index_of(f);
    if (k < 0) {
      wit(bps[b].str() + ": witness character not irreducible");
      continue;
    }
    auto m = chars::j_induction(t, j, st, k);
    for (int chi = 0; chi < t.size(); ++chi)
      if (m[chi] != (chi == idx[b] ? 1 : 0)) wit(bps[b].str() + ": J-induction of the witness");
  }
  std::string summary;
  for (auto& [k, v] : kinds) summary += (summary.empty() ? "" : ", ") + std::to_string(v) + " " + k;
  rep.add("classical.B.cuspidality", cusp.ok(), cusp.str(summary));
  rep.add("classical.B.witness_induction", wit.ok(), wit.str());
  if (an.equal_parameters())
    check_special_reduction(an, "classical.B.special_reduction", rep);
  else
    rep.skip("classical.B.special_reduction", "equal parameters only");
}

void verify_type_D(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  const int n = g.rank();
  // embedding into B_n with u = t s_1 t
  cox::CoxeterGroup gb(cox::CoxeterSystem::from_label("B" + std::to_string(n)));
  std::vector<Elt> gen(n);
  gen[0] = gb.from_word({0, 1, 0});
  for (int s = 1; s < n; ++s) gen[s] = gb.generator(s);
  std::vector<Elt> phi(g.size());
  for (Elt w = 0; w < g.size(); ++w) {
    Elt x = 0;
    for (int s : g.reduced_word(w)) x = gb.multiply(x, gen[s]);
    phi[w] = x;
  }
  Failures emb;
  std::set<Elt> image(phi.begin(), phi.end());
  if (static_cast<int>(image.size()) != g.size()) emb("not injective");
  for (Elt x = 0; x < gb.size(); ++x) {
    auto sp = cox::signed_permutation(gb, x, 'B');
    int neg = 0;
    for (int v : sp) neg += v < 0;
    if ((neg % 2 == 0) != static_cast<bool>(image.count(x))) emb("image is not the even sign changes");
  }
  Elt tb = gb.generator(0);
  for (Elt w = 0; w < g.size(); ++w) {
    for (int s = 0; s < n; ++s)
      if (phi[g.lmul(s, w)] != gb.multiply(gen[s], phi[w])) emb("not a homomorphism");
    if (cox::signed_permutation(g, w, 'D') != cox::signed_permutation(gb, phi[w], 'B')) emb("signed permutations differ");
    if (phi[theta(g, w)] != gb.multiply(gb.multiply(tb, phi[w]), tb)) emb("theta is not conjugation by t");
  }
  rep.add("classical.D.embedding", emb.ok(), emb.str());

  // restrictions of B_n characters
  auto tbl = chars::ordinary_character_table(gb);
  Failures res;
  std::set<int> extendable, reached;
  for (int chi = 0; chi < tbl.size(); ++chi) {
    ClassFunction f;
    for (auto& c : g.classes()) f.push_back(tbl.value(chi, phi[c.min_length_rep]));
    auto m = t.multiplicities(f);
    std::vector<int> parts;
    for (int k = 0; k < t.size(); ++k)
      for (long long r = 0; r < m[k]; ++r) parts.push_back(k);
    for (int k : parts) reached.insert(k);
    if (parts.size() == 1) {
      extendable.insert(parts[0]);
      if (theta_conjugate(t, t.values[parts[0]]) != t.values[parts[0]]) res("extendable but not theta-stable");
    } else if (parts.size() == 2) {
      if (parts[0] == parts[1] || theta_conjugate(t, t.values[parts[0]]) != t.values[parts[1]])
        res("restriction splits into a non-conjugate pair");
    } else {
      res("restriction has " + std::to_string(parts.size()) + " constituents");
    }
  }
  if (static_cast<int>(reached.size()) != t.size()) res("some character is not in any restriction");
  rep.add("classical.D.restriction", res.ok(), res.str());

  check_special_reduction(an, "classical.D.special_reduction", rep);

  // theta-stable involution classes only meet special extendable characters
  Failures stable;
  for (int c : kott::involution_classes(g)) {
    int c2 = g.class_of(theta(g, g.classes()[c].min_length_rep));
    if (c2 != c) continue;
    auto m = t.multiplicities(kott::rho_character(g, {c}));
    for (int chi = 0; chi < t.size(); ++chi)
      if (m[chi] && (!an.leading.special[chi] || !extendable.count(chi))) stable(t.labels[chi]);
  }
  rep.add("classical.D.stable_classes", stable.ok(), stable.str());

  if (n % 2) {
    for (auto name : {"classical.D.pm_characters", "classical.D.signD", "classical.D.branching"})
      rep.skip(name, "n odd");
    return;
  }
  std::vector<int> word;
  for (int i = 1; i < n; i += 2) word.push_back(i);
  Elt sigma = g.from_word(word);
  int c0 = g.class_of(sigma), c0t = g.class_of(theta(g, sigma));
  Failures pm, sd;
  std::vector<long long> plus_sum(t.size(), 0), minus_sum(t.size(), 0);
  std::set<int> pm_set;
  for (auto& alpha : partitions(n / 2)) {
    TypeDPair pr;
    try {
      pr = typeD_pm_characters(g, t, alpha);
    } catch (const std::exception& e) {
      pm(e.what());
      continue;
    }
    plus_sum[pr.plus] = 1;
    minus_sum[pr.minus] = 1;
    pm_set.insert(pr.plus);
    pm_set.insert(pr.minus);
    int len = g.length(pr.longest);
    for (int chi : {pr.plus, pr.minus}) {
      if (an.leading.f_char[chi] != AlgebraicNumber(1)) pm(alpha.str() + ": f != 1");
      if (an.leading.a_char[chi] != len || t.b_values[chi] != len) pm(alpha.str() + ": a or b");
    }
    if (g.class_of(pr.longest) != c0) pm(alpha.str() + ": longest element not in the class of s1 s3 ...");
    if (an.cells.two_sided_of[pr.longest] != an.families.family_of_char[pr.plus]) pm(alpha.str() + ": cell of +");
    if (an.cells.two_sided_of[theta(g, pr.longest)] != an.families.family_of_char[pr.minus])
      pm(alpha.str() + ": cell of -");
    cox::CoxeterGroup sub(g.system().restrict_to(pr.young));
    auto st = chars::ordinary_character_table(sub);
    auto m = chars::j_induction(t, pr.young, st, st.sign);
    for (int chi = 0; chi < t.size(); ++chi)
      if (m[chi] != (chi == pr.plus ? 1 : 0)) pm(alpha.str() + ": J-induction of the sign");
  }
  std::set<int> non_ext;
  for (int chi = 0; chi < t.size(); ++chi)
    if (!extendable.count(chi)) non_ext.insert(chi);
  if (pm_set != non_ext) pm("the +/- characters are not exactly the non-extendable ones");
  rep.add("classical.D.pm_characters", pm.ok(), pm.str());
  if (t.multiplicities(kott::rho_character(g, {c0})) != plus_sum) sd("rho of the class of s1 s3 ...");
  if (t.multiplicities(kott::rho_character(g, {c0t})) != minus_sum) sd("rho of its theta image");
  rep.add("classical.D.signD", sd.ok(), sd.str());

  // branching from W'_{n-2} x <s_{n-1}>
  Failures br;
  GenMask j = GenMask(1) << (n - 1);
  for (int s = 0; s < n - 2; ++s) j |= GenMask(1) << s;
  cox::CoxeterGroup sub(g.system().restrict_to(j));
  auto emb2 = chars::embed_parabolic(g, j, sub);
  std::unique_ptr<cox::CoxeterGroup> small;
  std::unique_ptr<CharacterTable> small_t;
  if (n - 2 >= 2) {
    small = std::make_unique<cox::CoxeterGroup>(cox::CoxeterSystem::from_label("D" + std::to_string(n - 2)));
    small_t = std::make_unique<CharacterTable>(chars::ordinary_character_table(*small));
  }
  for (auto& a1 : partitions((n - 2) / 2)) {
    int plus1 = small ? typeD_pm_characters(*small, *small_t, a1).plus : -1;
    std::vector<AlgebraicNumber> f;
    for (Elt x = 0; x < sub.size(); ++x) {
      std::vector<int> dw;
      int sign = 1;
      for (int s : sub.reduced_word(x))
        if (s == n - 2)
          sign = -sign;
        else
          dw.push_back(s);
      AlgebraicNumber v = small ? small_t->value(plus1, small->from_word(dw)) : AlgebraicNumber(1);
      f.push_back(v * AlgebraicNumber(sign));
    }
    auto m = t.multiplicities(chars::induce(t, emb2, f));
    for (auto& alpha : partitions(n / 2)) {
      auto pr = typeD_pm_characters(g, t, alpha);
      bool up = false;
      auto p1 = a1.parts;
      p1.push_back(0);
      for (size_t i = 0; i < p1.size(); ++i) {
        auto q = p1;
        ++q[i];
        up = up || Partition(q) == alpha;
      }
      if (m[pr.minus] != 0) br(a1.str() + " -> " + alpha.str() + ": minus occurs");
      if (m[pr.plus] != (up ? 1 : 0)) br(a1.str() + " -> " + alpha.str() + ": plus multiplicity");
    }
    for (int chi = 0; chi < t.size(); ++chi)
      if (m[chi] && !extendable.count(chi) && !plus_sum[chi]) br(a1.str() + ": further term not extendable");
  }
  rep.add("classical.D.branching", br.ok(), br.str());
}

void verify_smoothness_criterion_B(int n, const std::vector<int>& as, VerificationReport& rep) {
  Failures f;
  int runs = 0;
  for (int a : as)
    for (int b = 1; b <= 2 * n * a; ++b) {
      AnalysisOptions o;
      o.weights.assign(n, a);
      o.weights[0] = b;
      auto an = analyze("B" + std::to_string(n), o);
      ++runs;
      bool expect = true;
      for (int k = 1; k < n; ++k) expect = expect && b != k * a;
      bool all_f1 = true;
      for (auto& x : an->leading.f_char) all_f1 = all_f1 && x == AlgebraicNumber(1);
      bool all_smooth = true;
      for (auto& r : chars::smoothness(an->cells, an->families, an->leading, an->table, an->mult))
        all_smooth = all_smooth && r.smooth();
      std::string tag = "B" + std::to_string(n) + " b=" + std::to_string(b) + " a=" + std::to_string(a);
      if (all_f1 != expect) f(tag + ": f");
      if (all_smooth != expect) f(tag + ": smoothness");
      // involution classes met by the left cells of a two-sided cell
      for (size_t c = 0; c < an->cells.two_sided.size(); ++c) {
        auto lc = an->cells.left_cells_in(static_cast<int>(c));
        auto ref = kott::classes_met(*an->group, an->cells.left[lc[0]]);
        for (int l : lc)
          if (kott::classes_met(*an->group, an->cells.left[l]) != ref) f(tag + ": classes met");
      }
    }
  rep.add("classical.B" + std::to_string(n) + ".smoothness_criterion", f.ok(), f.str(std::to_string(runs) + " weights"));
}

void verify_classical(const Analysis& an, VerificationReport& rep) {
  const auto& label = an.group->system().type_label;
  if (label.size() < 2 || label.find('x') != std::string::npos) return;
  if (label[0] == 'A' && an.equal_parameters())
    verify_type_A(an, rep);
  else if (label[0] == 'B')
    verify_type_B(an, rep);
  else if (label[0] == 'D' && an.equal_parameters())
    verify_type_D(an, rep);
}

}  // namespace klc::classical
