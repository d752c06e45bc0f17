#include "klcells/kottwitz.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klc::kott {

using chars::AlgebraicNumber;

namespace {

bool is_int(const AlgebraicNumber& a, long long* out) {
  if (!a.is_rational()) return false;
  auto q = a.rational_value();
  if (q.get_den() != 1) return false;
  *out = q.get_num().get_si();
  return true;
}

long long inner_int(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g) {
  long long v;
  if (!is_int(t.inner(f, g), &v)) throw std::logic_error("non-integral inner product");
  return v;
}

std::string join_first(const std::vector<std::string>& v, size_t k = 3) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size() && i < k; ++i) os << (i ? "; " : "") << v[i];
  if (v.size() > k) os << "; ... (" << v.size() << " total)";
  return os.str();
}

struct Failures {
  std::vector<std::string> items;
  void operator()(std::string s) { items.push_back(std::move(s)); }
  bool ok() const { return items.empty(); }
  std::string str() const { return join_first(items); }
};

std::vector<int> left_cells_meeting(const CellPartition& p, int two_sided) { return p.left_cells_in(two_sided); }

char classical_type(const cox::CoxeterSystem& sys) {
  const auto& l = sys.type_label;
  if (l.size() < 2 || l.find('x') != std::string::npos) return 0;
  if (l[0] == 'A' || l[0] == 'B' || l[0] == 'D') return l[0];
  return 0;
}

}  // namespace

std::pair<int, int> InvolutionModule::apply(const CoxeterGroup& g, Elt w, int i) const {
  auto word = g.reduced_word(w);
  int sign = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto [j, s] = action[*it][i];
    i = j;
    sign *= s;
  }
  return {i, sign};
}

bool InvolutionModule::check_relations(const CoxeterGroup& g) const {
  const auto& m = g.system().matrix;
  for (int i = 0; i < dim(); ++i)
    for (int s = 0; s < g.rank(); ++s) {
      auto [j, a] = action[s][i];
      auto [k, b] = action[s][j];
      if (k != i || a * b != 1) return false;
      for (int t = s + 1; t < g.rank(); ++t) {
        int x = i, sx = 1, y = i, sy = 1;
        for (int r = 0; r < m[s][t]; ++r) {
          auto [x2, c] = action[r % 2 ? s : t][x];
          auto [y2, d] = action[r % 2 ? t : s][y];
          x = x2, sx *= c, y = y2, sy *= d;
        }
        if (x != y || sx != sy) return false;
      }
    }
  return true;
}

ClassFunction InvolutionModule::character(const CoxeterGroup& g) const {
  ClassFunction out;
  for (auto& cls : g.classes()) {
    long long tr = 0;
    for (int i = 0; i < dim(); ++i) {
      auto [j, s] = apply(g, cls.min_length_rep, i);
      if (j == i) tr += s;
    }
    out.push_back(AlgebraicNumber(tr));
  }
  return out;
}

InvolutionModule involution_module(const CoxeterGroup& g, const std::vector<int>& classes) {
  InvolutionModule m;
  for (int c : classes) {
    const auto& cls = g.classes()[c];
    if (!cls.is_involution_class) throw std::invalid_argument("not an involution class");
    m.basis.insert(m.basis.end(), cls.members.begin(), cls.members.end());
  }
  std::sort(m.basis.begin(), m.basis.end());
  m.basis.erase(std::unique(m.basis.begin(), m.basis.end()), m.basis.end());
  std::map<Elt, int> pos;
  for (int i = 0; i < m.dim(); ++i) pos[m.basis[i]] = i;
  m.action.assign(g.rank(), std::vector<std::pair<int, int>>(m.dim()));
  for (int s = 0; s < g.rank(); ++s)
    for (int i = 0; i < m.dim(); ++i) {
      Elt w = m.basis[i];
      Elt sw = g.lmul(s, w), ws = g.rmul(w, s);
      if (sw == ws && g.length(sw) < g.length(w))
        m.action[s][i] = {i, -1};
      else
        m.action[s][i] = {pos.at(g.rmul(sw, s)), 1};
    }
  return m;
}

ClassFunction rho_character(const CoxeterGroup& g, const std::vector<int>& classes) {
  return involution_module(g, classes).character(g);
}

std::vector<int> involution_classes(const CoxeterGroup& g) {
  std::vector<int> out;
  for (size_t c = 0; c < g.classes().size(); ++c)
    if (g.classes()[c].is_involution_class) out.push_back(static_cast<int>(c));
  return out;
}

ClassFunction rho_via_induction(const CharacterTable& t, int involution_class) {
  const auto& g = *t.group;
  const auto& cls = g.classes()[involution_class];
  if (!cls.is_involution_class) throw std::invalid_argument("not an involution class");
  std::vector<Elt> cand = cls.members;
  std::stable_sort(cand.begin(), cand.end(), [&](Elt a, Elt b) { return g.length(a) < g.length(b); });
  cand.insert(cand.begin(), cls.min_length_rep);
  for (Elt sigma : cand) {
    auto j = g.central_parabolic_of(sigma);
    if (!j) continue;
    auto cent = g.centralizer(sigma);
    std::vector<AlgebraicNumber> eps;
    for (Elt w : cent) eps.push_back(AlgebraicNumber(g.epsilon_sigma(sigma, *j, w)));
    return chars::induce(t, cent, eps);
  }
  throw std::logic_error("no representative is central and longest in a parabolic subgroup");
}

std::vector<int> classes_met(const CoxeterGroup& g, const std::vector<Elt>& x) {
  std::set<int> s;
  for (Elt w : x)
    if (g.is_involution(w)) s.insert(g.class_of(w));
  return {s.begin(), s.end()};
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& details) {
  checks.push_back({name, ok ? Check::Status::pass : Check::Status::fail, details});
}

void VerificationReport::skip(const std::string& name, const std::string& why) {
  checks.push_back({name, Check::Status::skipped, why});
}

const Check* VerificationReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::all_passed() const {
  for (auto& c : checks)
    if (c.status == Check::Status::fail) return false;
  return true;
}

void VerificationReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::string status_name(Check::Status s) {
  switch (s) {
    case Check::Status::pass: return "pass";
    case Check::Status::fail: return "fail";
    default: return "skipped";
  }
}

void verify_kottwitz(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  auto inv = involution_classes(g);
  Failures rel, agree, add, conj, marberg;
  std::vector<ClassFunction> rho;
  ClassFunction total(t.class_sizes.size());
  for (int c : inv) {
    auto m = involution_module(g, {c});
    if (!m.check_relations(g)) rel("class " + g.word_string(g.classes()[c].min_length_rep));
    rho.push_back(m.character(g));
    if (rho.back() != rho_via_induction(t, c)) agree("class " + g.word_string(g.classes()[c].min_length_rep));
    for (size_t k = 0; k < total.size(); ++k) total[k] += rho.back()[k];
  }
  auto all_m = involution_module(g, inv);
  if (!all_m.check_relations(g)) rel("union of all classes");
  if (all_m.character(g) != total) add("rho of the union differs from the sum");
  for (size_t c = 0; c < an.cells.left.size(); ++c) {
    const auto& cell = an.cells.left[c];
    long long all_count = 0;
    for (size_t k = 0; k < inv.size(); ++k) {
      long long count = 0;
      for (Elt w : cell)
        if (g.class_of(w) == inv[k]) ++count;
      all_count += count;
      long long ip = inner_int(t, rho[k], an.cell_chars[c]);
      if (ip != count)
        conj("cell " + std::to_string(c) + ", class " + g.word_string(g.classes()[inv[k]].min_length_rep) + ": " +
             std::to_string(ip) + " != " + std::to_string(count));
    }
    long long ip = inner_int(t, total, an.cell_chars[c]);
    if (ip != all_count) marberg("cell " + std::to_string(c));
  }
  rep.add("rho.relations", rel.ok(), rel.str());
  rep.add("rho.construction_agreement", agree.ok(), agree.str());
  rep.add("rho.additivity", add.ok(), add.str());
  if (an.equal_parameters()) {
    rep.add("kottwitz.per_class", conj.ok(), conj.str());
    rep.add("kottwitz.all_involutions", marberg.ok(), marberg.str());
  } else {
    auto info = [](const Failures& f) {
      return "equal parameters only; " + std::to_string(f.items.size()) + " mismatches here";
    };
    rep.skip("kottwitz.per_class", info(conj));
    rep.skip("kottwitz.all_involutions", info(marberg));
  }
}

void verify_main_theorem(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& p = an.cells;
  Failures sets, single, counts;
  auto inv = involution_classes(g);
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    auto lc = left_cells_meeting(p, static_cast<int>(f));
    auto ref = classes_met(g, p.left[lc[0]]);
    std::vector<long long> ref_counts(g.classes().size(), 0);
    for (Elt w : p.left[lc[0]])
      if (g.is_involution(w)) ++ref_counts[g.class_of(w)];
    for (size_t i = 1; i < lc.size(); ++i) {
      if (classes_met(g, p.left[lc[i]]) != ref) sets("two-sided cell " + std::to_string(f));
      std::vector<long long> cnt(g.classes().size(), 0);
      for (Elt w : p.left[lc[i]])
        if (g.is_involution(w)) ++cnt[g.class_of(w)];
      if (cnt != ref_counts) counts("two-sided cell " + std::to_string(f));
    }
    if (an.families.members[f].size() == 1 && classes_met(g, p.two_sided[f]).size() != 1)
      single("smooth cell " + std::to_string(f));
  }
  if (an.equal_parameters())
    rep.add("main.a", sets.ok(), sets.str());
  else
    rep.skip("main.a", "equal parameters only");
  rep.add("main.conjecture", sets.ok(), sets.str());
  rep.add("main.b", single.ok(), single.str());
  char type = classical_type(g.system());
  if (an.equal_parameters() && type)
    rep.add("main.c", counts.ok(), counts.str());
  else
    rep.skip("main.c", "classical types with equal parameters only");
}

void verify_identity_GCC(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& p = an.cells;
  const auto& t = an.table;
  const auto& ld = an.leading;
  if (!an.equal_parameters()) {
    rep.skip("identity.gcc", "equal parameters only");
    rep.skip("identity.smooth", "equal parameters only");
    rep.skip("identity.classical", "equal parameters only");
    return;
  }
  auto inv = involution_classes(g);
  std::map<int, int> slot;
  for (size_t k = 0; k < inv.size(); ++k) slot[inv[k]] = static_cast<int>(k);
  const int ncl = static_cast<int>(inv.size());
  Failures gcc, smooth, classical;
  std::vector<Elt> invols = g.involutions();
  for (int chi = 0; chi < t.size(); ++chi) {
    std::vector<std::vector<AlgebraicNumber>> by_two(p.two_sided.size(), std::vector<AlgebraicNumber>(ncl));
    std::vector<std::vector<AlgebraicNumber>> by_left(p.left.size(), std::vector<AlgebraicNumber>(ncl));
    for (Elt w : invols) {
      const auto& c = ld.c[chi][w];
      if (c.is_zero()) continue;
      int k = slot[g.class_of(w)];
      by_two[p.two_sided_of[w]][k] += c;
      by_left[p.left_of[w]][k] += c;
    }
    for (size_t f = 0; f < p.two_sided.size(); ++f)
      for (int c : p.left_cells_in(static_cast<int>(f)))
        for (int k = 0; k < ncl; ++k) {
          auto lhs = AlgebraicNumber(an.mult[c][chi]) * by_two[f][k];
          auto rhs = AlgebraicNumber(t.degrees[chi]) * by_left[c][k];
          if (lhs != rhs) gcc(t.labels[chi] + ", cell " + std::to_string(c) + ", class " + std::to_string(inv[k]));
        }
  }
  auto dist = chars::distinguished_per_left_cell(*an.kl, p);
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    if (an.families.members[f].size() != 1) continue;
    int chi = an.families.members[f][0];
    for (int c : p.left_cells_in(static_cast<int>(f))) {
      Elt d = dist[c];
      for (int k = 0; k < ncl; ++k) {
        AlgebraicNumber s;
        for (Elt w : p.two_sided[f])
          if (g.class_of(w) == inv[k]) s += ld.c[chi][w];
        AlgebraicNumber want = g.class_of(d) == inv[k] ? AlgebraicNumber(t.degrees[chi]) * ld.n[d] : AlgebraicNumber();
        if (s != want) smooth("cell " + std::to_string(f) + ", class " + std::to_string(inv[k]));
      }
    }
  }
  rep.add("identity.gcc", gcc.ok(), gcc.str());
  rep.add("identity.smooth", smooth.ok(), smooth.str());
  if (!classical_type(g.system())) {
    rep.skip("identity.classical", "classical types only");
    return;
  }
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    int chi0 = -1;
    for (int chi : an.families.members[f])
      if (ld.special[chi]) chi0 = chi;
    if (chi0 < 0) {
      classical("no special character in cell " + std::to_string(f));
      continue;
    }
    for (int k = 0; k < ncl; ++k) {
      long long in_two = 0;
      for (Elt w : p.two_sided[f]) in_two += g.class_of(w) == inv[k];
      for (int c : p.left_cells_in(static_cast<int>(f))) {
        long long in_left = 0;
        for (Elt w : p.left[c]) in_left += g.class_of(w) == inv[k];
        if (in_two != t.degrees[chi0] * in_left) classical("cell " + std::to_string(c) + ", class " + std::to_string(inv[k]));
      }
    }
  }
  rep.add("identity.classical", classical.ok(), classical.str());
}

void verify_w0_twist(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  Elt w0 = g.longest();
  bool central = true;
  for (int s = 0; s < g.rank(); ++s) central = central && g.lmul(s, w0) == g.rmul(w0, s);
  auto d = cells::w0_duality_check(g, an.cells, t, an.cell_chars, an.families);
  rep.add("cells.w0_duality", d.ok, join_first(d.failures));
  if (!central) {
    rep.skip("rho.w0_twist", "w0 not central");
    return;
  }
  Failures f;
  for (int c : involution_classes(g)) {
    int c2 = g.class_of(g.multiply(g.classes()[c].min_length_rep, w0));
    if (!g.classes()[c2].is_involution_class) {
      f("C w0 not an involution class");
      continue;
    }
    if (rho_character(g, {c2}) != t.tensor(rho_character(g, {c}), t.values[t.sign])) f("class " + std::to_string(c));
  }
  rep.add("rho.w0_twist", f.ok(), f.str());
}

void verify_restriction_inequalities(const Analysis& an, VerificationReport& rep) {
  const auto& g = *an.group;
  const auto& t = an.table;
  auto inv = involution_classes(g);
  std::vector<ClassFunction> rho;
  for (int c : inv) rho.push_back(rho_character(g, {c}));
  Failures res, ind;
  for (cox::GenMask j = 1; j < (cox::GenMask(1) << g.rank()); ++j) {
    cox::CoxeterGroup sub(g.system().restrict_to(j));
    auto st = chars::ordinary_character_table(sub);
    auto emb = chars::embed_parabolic(g, j, sub);
    auto sinv = involution_classes(sub);
    for (size_t k = 0; k < inv.size(); ++k) {
      // W'-classes inside C
      std::vector<int> inside;
      for (int sc : sinv)
        if (g.class_of(emb[sub.classes()[sc].min_length_rep]) == inv[k]) inside.push_back(sc);
      if (inside.empty()) continue;
      auto rsub = rho_character(sub, inside);
      for (int chi = 0; chi < st.size(); ++chi) {
        std::vector<AlgebraicNumber> f;
        for (Elt x = 0; x < sub.size(); ++x) f.push_back(st.value(chi, x));
        auto induced = chars::induce(t, emb, f);
        if (inner_int(st, rsub, st.values[chi]) > inner_int(t, rho[k], induced))
          res("J=" + std::to_string(j) + ", class " + std::to_string(inv[k]) + ", " + st.labels[chi]);
      }
      for (int sc : inside) {
        auto r1 = rho_character(sub, {sc});
        std::vector<AlgebraicNumber> f;
        for (Elt x = 0; x < sub.size(); ++x) f.push_back(r1[sub.class_of(x)]);
        auto induced = chars::induce(t, emb, f);
        auto m1 = t.multiplicities(rho[k]), m2 = t.multiplicities(induced);
        for (int chi = 0; chi < t.size(); ++chi)
          if (m1[chi] > m2[chi]) ind("J=" + std::to_string(j) + ", class " + std::to_string(inv[k]) + ", " + t.labels[chi]);
      }
    }
  }
  rep.add("rho.restriction_inequality", res.ok(), res.str());
  rep.add("rho.induction_inequality", ind.ok(), ind.str());
}

void verify_inductive_conditions(const Analysis& an, VerificationReport& rep) {
  if (!an.equal_parameters()) {
    for (auto n : {"inductive.K1", "inductive.K2", "inductive.K3"}) rep.skip(n, "equal parameters only");
    return;
  }
  const auto& g = *an.group;
  const auto& t = an.table;
  const auto& p = an.cells;
  auto inv = involution_classes(g);
  std::vector<ClassFunction> rho;
  for (int c : inv) rho.push_back(rho_character(g, {c}));
  struct Sub {
    cox::GenMask j;
    std::unique_ptr<Analysis> an;
    std::vector<Elt> emb;
  };
  std::vector<Sub> subs;
  const cox::GenMask full = (cox::GenMask(1) << g.rank()) - 1;
  for (cox::GenMask j = 1; j < full; ++j) {
    AnalysisOptions o;
    for (int s = 0; s < g.rank(); ++s)
      if (j >> s & 1) o.weights.push_back(an.kl->weights()[s]);
    Sub s{j, analyze(g.system().restrict_to(j), o), {}};
    s.emb = chars::embed_parabolic(g, j, *s.an->group);
    subs.push_back(std::move(s));
  }
  Failures k1, k2, k3;
  int witnessed = 0;
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    const auto& fam = an.families.members[f];
    const Sub* ws = nullptr;
    int wcell = -1;
    std::vector<int> image;
    for (const auto& s : subs) {
      const auto& sa = *s.an;
      for (size_t f2 = 0; f2 < sa.cells.two_sided.size() && !ws; ++f2) {
        const auto& fam2 = sa.families.members[f2];
        if (fam2.size() != fam.size()) continue;
        std::vector<int> img;
        bool ok = true;
        for (int chi : fam2) {
          auto m = chars::j_induction(t, s.j, sa.table, chi);
          long long tot = 0;
          int which = -1;
          for (int psi = 0; psi < t.size(); ++psi)
            if (m[psi]) tot += m[psi], which = psi;
          if (tot != 1 || an.families.family_of_char[which] != static_cast<int>(f)) {
            ok = false;
            break;
          }
          img.push_back(which);
        }
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (ok && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
          ws = &s;
          wcell = static_cast<int>(f2);
          image = img;
        }
      }
      if (ws) break;
    }
    if (!ws) continue;
    ++witnessed;
    const auto& sa = *ws->an;
    const auto& sg = *sa.group;
    auto lc = p.left_cells_in(static_cast<int>(f));
    // (K1)
    for (size_t a = 0; a < lc.size(); ++a)
      for (size_t b = a + 1; b < lc.size(); ++b) {
        if (an.mult[lc[a]] != an.mult[lc[b]]) continue;
        for (int c : inv) {
          long long na = 0, nb = 0;
          for (Elt w : p.left[lc[a]]) na += g.class_of(w) == c;
          for (Elt w : p.left[lc[b]]) nb += g.class_of(w) == c;
          if (na != nb) k1("cell " + std::to_string(f));
        }
      }
    // (K2)
    auto sinv = involution_classes(sg);
    for (int c2 : sa.cells.left_cells_in(wcell))
      for (int sc : sinv) {
        long long cnt = 0;
        for (Elt w : sa.cells.left[c2]) cnt += sg.class_of(w) == sc;
        if (inner_int(sa.table, rho_character(sg, {sc}), sa.cell_chars[c2]) != cnt) k2("cell " + std::to_string(f));
      }
    // (K3)
    for (size_t k = 0; k < inv.size(); ++k) {
      std::vector<int> inside;
      for (int sc : sinv)
        if (g.class_of(ws->emb[sg.classes()[sc].min_length_rep]) == inv[k]) inside.push_back(sc);
      if (inside.empty()) continue;
      auto rsub = rho_character(sg, inside);
      auto mult = t.multiplicities(rho[k]);
      const auto& fam2 = sa.families.members[wcell];
      for (size_t i = 0; i < fam2.size(); ++i)
        if (inner_int(sa.table, rsub, sa.table.values[fam2[i]]) > mult[image[i]])
          k3("cell " + std::to_string(f) + ", " + sa.table.labels[fam2[i]]);
    }
  }
  std::string info = std::to_string(witnessed) + " of " + std::to_string(p.two_sided.size()) + " cells strongly non-cuspidal";
  rep.add("inductive.K1", k1.ok(), k1.ok() ? info : k1.str());
  rep.add("inductive.K2", k2.ok(), k2.ok() ? info : k2.str());
  rep.add("inductive.K3", k3.ok(), k3.ok() ? info : k3.str());
}

VerificationReport verify_all(const Analysis& an) {
  auto start = std::chrono::steady_clock::now();
  const auto& g = *an.group;
  const auto& t = an.table;
  VerificationReport rep;
  rep.group = g.system().type_label;
  rep.phi = an.kl->weights().str();

  // cells
  {
    Failures pair, invc, reg;
    for (size_t a = 0; a < an.cells.left.size(); ++a) {
      for (size_t b = 0; b < an.cells.left.size(); ++b) {
        auto r = cells::cell_intersection_pairing(an.cells, t, an.cell_chars, a, b);
        if (r.inner_product != r.intersection) pair(std::to_string(a) + "," + std::to_string(b));
      }
      long long n = 0, m = 0;
      for (Elt w : an.cells.left[a]) n += g.is_involution(w);
      for (long long x : an.mult[a]) m += x;
      if (n != m) invc("cell " + std::to_string(a));
    }
    ClassFunction sum(t.class_sizes.size());
    for (auto& f : an.cell_chars)
      for (size_t k = 0; k < sum.size(); ++k) sum[k] += f[k];
    for (size_t k = 0; k < sum.size(); ++k)
      if (sum[k] != AlgebraicNumber(k == 0 ? g.size() : 0)) reg("class " + std::to_string(k));
    rep.add("cells.pairing", pair.ok(), pair.str());
    rep.add("cells.involution_count", invc.ok(), invc.str());
    rep.add("cells.regular_character", reg.ok(), reg.str());
    Failures sq;
    for (size_t f = 0; f < an.families.members.size(); ++f) {
      long long s = 0;
      for (int chi : an.families.members[f]) s += t.degrees[chi] * t.degrees[chi];
      if (s != static_cast<long long>(an.cells.two_sided[f].size())) sq("cell " + std::to_string(f));
    }
    rep.add("cells.family_sizes", sq.ok(), sq.str());
    if (an.equal_parameters()) {
      auto comp = cells::character_graph_components(an.mult, t.size());
      Failures gr;
      for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b)
          if ((comp[a] == comp[b]) != (an.families.family_of_char[a] == an.families.family_of_char[b]))
            gr(t.labels[a] + "," + t.labels[b]);
      rep.add("cells.graph_components", gr.ok(), gr.str());
    } else {
      rep.skip("cells.graph_components", "equal parameters only");
    }
    // P-spot-checks
    Failures pc;
    try {
      auto dist = chars::distinguished_per_left_cell(*an.kl, an.cells);
      for (Elt d : dist) {
        auto nd = an.kl->n_coeff(d);
        if (!(nd == num::Integer(1) || nd == num::Integer(-1))) pc("n_d at " + g.word_string(d));
        if (!g.is_involution(d)) pc("d^2 != e at " + g.word_string(d));
      }
    } catch (const std::exception& e) {
      pc(e.what());
    }
    rep.add("cells.distinguished", pc.ok(), pc.str());
  }
  // characters
  {
    auto hv = chars::verify_hecke_values(an.hecke_values, *an.kl, an.cells, t, an.mult, g.size() <= 400);
    rep.add("characters.hecke_values", hv.ok, join_first(hv.failures));
    auto ld = chars::verify_leading_data(an.leading, *an.kl, an.cells, t, an.families, an.mult);
    rep.add("characters.leading_data", ld.ok, join_first(ld.failures));
    auto ps = chars::check_parabolic_sign_families(*an.kl, an.cells, t, an.families, an.leading);
    rep.add("characters.parabolic_sign", ps.ok, join_first(ps.failures));
    if (an.equal_parameters()) {
      auto dm = chars::check_diamonds(an.leading, an.cells, t, an.families);
      rep.add("characters.diamonds", dm.ok, join_first(dm.failures));
      auto tw = chars::twisted_characters(an.hecke_values, t, *an.kl);
      auto td = chars::check_twist_duality(tw, an.leading, t, an.families);
      rep.add("characters.twist_duality", td.ok, join_first(td.failures));
    } else {
      rep.skip("characters.diamonds", "equal parameters only");
      rep.skip("characters.twist_duality", "equal parameters only");
    }
    auto sm = chars::smoothness(an.cells, an.families, an.leading, t, an.mult);
    Failures cons;
    int nsmooth = 0;
    for (auto& r : sm) {
      nsmooth += r.smooth();
      if (!r.consistent()) cons("cell " + std::to_string(r.cell));
    }
    rep.add("characters.smoothness_equivalence", cons.ok(),
            cons.ok() ? std::to_string(an.cells.two_sided.size()) + " cells, " + std::to_string(nsmooth) + " smooth"
                      : cons.str());
  }
  // centrality of class sums
  {
    auto inv = involution_classes(g);
    Failures cen;
    if (inv.size() <= 12) {
      for (unsigned mask = 1; mask < (1u << inv.size()); ++mask) {
        std::vector<int> cls;
        for (size_t k = 0; k < inv.size(); ++k)
          if (mask >> k & 1) cls.push_back(inv[k]);
        auto plain = hecke::central_involution_sum(g, cls, [](Elt) { return num::Integer(1); });
        auto sgn = hecke::central_involution_sum(g, cls, [&](Elt w) { return num::Integer(g.length(w) % 2 ? -1 : 1); });
        if (!an.kl->algebra().is_central(plain)) cen("plain sum, mask " + std::to_string(mask));
        if (!an.kl->algebra().is_central(sgn)) cen("signed sum, mask " + std::to_string(mask));
      }
      rep.add("hecke.centrality", cen.ok(), cen.str());
    } else {
      for (int c : inv) {
        auto plain = hecke::central_involution_sum(g, {c}, [](Elt) { return num::Integer(1); });
        auto sgn = hecke::central_involution_sum(g, {c}, [&](Elt w) { return num::Integer(g.length(w) % 2 ? -1 : 1); });
        if (!an.kl->algebra().is_central(plain)) cen("plain sum, class " + std::to_string(c));
        if (!an.kl->algebra().is_central(sgn)) cen("signed sum, class " + std::to_string(c));
      }
      rep.add("hecke.centrality", cen.ok(), cen.ok() ? "single classes (sums follow by linearity)" : cen.str());
    }
  }
  verify_kottwitz(an, rep);
  verify_main_theorem(an, rep);
  verify_identity_GCC(an, rep);
  verify_w0_twist(an, rep);
  verify_restriction_inequalities(an, rep);
  verify_inductive_conditions(an, rep);
  rep.finalize();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace klc::kott
