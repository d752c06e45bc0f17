#include "klcells/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace klc::chars {

using hecke::Terms;
using num::LaurentPoly;
using num::Rational;

namespace {

AlgebraicNumber at_one(const LaurentPoly& p) { return AlgebraicNumber(num::to_rational(p.eval_at_one())); }

FLaurent scaled(const LaurentPoly& p, const AlgebraicNumber& a) {
  FLaurent out;
  for (auto& [e, c] : p.terms()) out += FLaurent::monomial(AlgebraicNumber(num::to_rational(c)) * a, e);
  return out;
}

int sign_of_length(const CoxeterGroup& g, Elt w) { return g.length(w) % 2 ? -1 : 1; }

std::string name(const CharacterTable& t, int chi) { return t.labels[chi]; }

}  // namespace

std::vector<Elt> distinguished_per_left_cell(const KLTable& kl, const CellPartition& p) {
  const auto& a = kl.a_values();
  if (a.empty()) throw std::logic_error("a-function not set");
  std::vector<Elt> d(p.left.size(), -1);
  for (size_t c = 0; c < p.left.size(); ++c)
    for (Elt z : p.left[c])
      if (a[z] == kl.delta(z)) {
        if (d[c] >= 0) throw std::logic_error("left cell " + std::to_string(c) + " has two distinguished elements");
        d[c] = z;
      }
  for (size_t c = 0; c < d.size(); ++c)
    if (d[c] < 0) throw std::logic_error("left cell " + std::to_string(c) + " has no distinguished element");
  return d;
}

HeckeCharacterValues hecke_character_values(const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                                            const FamilyAssignment& fam) {
  const auto& g = kl.group();
  const int n = g.size(), nch = t.size(), ncells = static_cast<int>(p.left.size());
  auto dist = distinguished_per_left_cell(kl, p);

  // traces of t_z vanish off C cap C^-1
  std::vector<char> on_diag(n);
  for (Elt z = 0; z < n; ++z) on_diag[z] = p.left_of[z] == p.left_of[g.inverse(z)];

  // rows[c][w]: h_{w,d,z} for z in the left cell of d = dist[c]
  std::vector<std::vector<Terms>> rows(ncells);
  for (int c = 0; c < ncells; ++c) {
    std::vector<char> keep(n, 0);
    for (Elt z : p.left[c]) keep[z] = 1;
    rows[c] = kl.products_with_truncated(dist[c], keep);
    for (auto& r : rows[c])
      r.erase(std::remove_if(r.begin(), r.end(), [&](auto& e) { return !on_diag[e.first]; }), r.end());
  }

  // chi_phi(c_w) = psi_phi(c_w^dagger) with psi = chi x sign
  std::vector<int> twin(nch);
  for (int chi = 0; chi < nch; ++chi) {
    twin[chi] = t.index_of(t.tensor(t.values[chi], t.values[t.sign]));
    if (twin[chi] < 0) throw std::logic_error("chi x sign not irreducible");
  }

  std::vector<std::vector<AlgebraicNumber>> x(nch, std::vector<AlgebraicNumber>(n));  // J-side trace of t_z
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    std::vector<int> chars;
    for (int chi = 0; chi < nch; ++chi)
      if (fam.family_of_char[twin[chi]] == static_cast<int>(f)) chars.push_back(chi);
    if (chars.empty()) continue;
    std::vector<Elt> zs;
    std::vector<int> col(n, -1);
    for (Elt z : p.two_sided[f])
      if (on_diag[z]) {
        col[z] = static_cast<int>(zs.size());
        zs.push_back(z);
      }
    const int nz = static_cast<int>(zs.size()), nr = static_cast<int>(p.two_sided[f].size());
    num::Matrix<AlgebraicNumber> a(nr, std::vector<AlgebraicNumber>(nz + chars.size()));
    for (int i = 0; i < nr; ++i) {
      Elt w = p.two_sided[f][i];
      for (int c : p.left_cells_in(static_cast<int>(f)))
        for (auto& [z, h] : rows[c][w]) a[i][col[z]] += at_one(h);
      for (size_t k = 0; k < chars.size(); ++k) {
        AlgebraicNumber y;
        for (auto& [u, pu] : kl.c(w)) y += at_one(pu) * t.value(chars[k], u);
        a[i][nz + k] = y;
      }
    }
    auto piv = num::row_reduce(a, nz);
    if (static_cast<int>(piv.size()) != nz) throw std::logic_error("transfer matrix not of full rank");
    for (int i = nz; i < nr; ++i)
      for (size_t k = 0; k < chars.size(); ++k)
        if (!a[i][nz + k].is_zero()) throw std::logic_error("transfer system inconsistent for " + name(t, chars[k]));
    for (size_t k = 0; k < chars.size(); ++k)
      for (int i = 0; i < nz; ++i) x[chars[k]][zs[piv[i]]] = a[i][nz + k];
  }

  auto value_on_c = [&](int chi, Elt w) {
    FLaurent out;
    int f = fam.family_of_char[twin[chi]];
    for (int c : p.left_cells_in(f))
      for (auto& [z, h] : rows[c][w])
        if (!x[chi][z].is_zero()) out += scaled(h, x[chi][z]);
    return out;
  };

  HeckeCharacterValues hv;
  hv.values.assign(nch, std::vector<FLaurent>(n));
  for (int chi = 0; chi < nch; ++chi) hv.values[chi][0] = FLaurent(AlgebraicNumber(t.degrees[chi]));
  const auto& phi = kl.weights();

  std::vector<int> parent(n);
  std::function<int(int)> find = [&](int u) { return parent[u] == u ? u : parent[u] = find(parent[u]); };
  Elt start = 1;
  while (start < n) {
    int len = g.length(start);
    Elt end = start;
    while (end < n && g.length(end) == len) ++end;
    std::vector<int> reduce_by(end - start, -1);
    for (Elt w = start; w < end; ++w) parent[w] = w;
    for (Elt w = start; w < end; ++w)
      for (int s = 0; s < g.rank(); ++s) {
        Elt u = g.lmul(s, g.rmul(w, s));
        if (g.length(u) == len - 2 && reduce_by[w - start] < 0) reduce_by[w - start] = s;
        if (g.length(u) == len) parent[find(u)] = find(w);
      }
    std::vector<std::vector<Elt>> comps(end - start);
    for (Elt w = start; w < end; ++w) comps[find(w) - start].push_back(w);
    for (auto& comp : comps) {
      if (comp.empty()) continue;
      Elt r = -1;
      for (Elt w : comp)
        if (reduce_by[w - start] >= 0) {
          r = w;
          break;
        }
      for (int chi = 0; chi < nch; ++chi) {
        auto& vals = hv.values[chi];
        FLaurent val;
        if (r >= 0) {
          int s = reduce_by[r - start];
          Elt sw = g.lmul(s, r), sws = g.rmul(sw, s);
          val = vals[sws] + num::to_field(num::v_minus_vinv(phi[s])) * vals[sw];
        } else {
          // minimal length in its class: T_w = c_w - sum_{y<w} p_{y,w} T_y
          r = comp[0];
          val = value_on_c(chi, r);
          for (auto& [y, py] : kl.c(r))
            if (y != r) val -= num::to_field(py) * vals[y];
          r = -1;
        }
        for (Elt w : comp) vals[w] = val;
      }
    }
    start = end;
  }
  return hv;
}

Report verify_hecke_values(const HeckeCharacterValues& hv, const KLTable& kl, const CellPartition& p,
                           const CharacterTable& t, const std::vector<std::vector<long long>>& mult,
                           bool all_elements) {
  Report rep;
  const auto& g = kl.group();
  std::vector<Elt> check;
  if (all_elements) {
    for (Elt w = 0; w < g.size(); ++w) check.push_back(w);
  } else {
    for (auto& cls : g.classes()) check.push_back(cls.min_length_rep);
  }
  for (size_t c = 0; c < p.left.size(); ++c) {
    auto m = cells::cell_module(kl, p.left[c]);
    for (Elt w : check) {
      FLaurent expect;
      for (int chi = 0; chi < t.size(); ++chi)
        if (mult[c][chi]) expect += hv.at(chi, w) * AlgebraicNumber(mult[c][chi]);
      if (num::to_field(m.trace_t(g, w)) != expect)
        rep.fail("cell " + std::to_string(c) + " trace mismatch at " + g.word_string(w));
    }
  }
  for (int chi = 0; chi < t.size(); ++chi)
    for (Elt w = 0; w < g.size(); ++w) {
      if (hv.at(chi, w) != hv.at(chi, g.inverse(w))) rep.fail(name(t, chi) + " not inverse-invariant at " + g.word_string(w));
      if (hv.at(chi, w).eval_at_one() != t.value(chi, w)) rep.fail(name(t, chi) + " wrong specialization at " + g.word_string(w));
    }
  return rep;
}

LeadingData leading_data(const HeckeCharacterValues& hv, const CharacterTable& t) {
  const auto& g = *t.group;
  const int n = g.size(), nch = t.size();
  LeadingData ld;
  ld.a_char.assign(nch, 0);
  ld.c.assign(nch, std::vector<AlgebraicNumber>(n));
  ld.f_char.assign(nch, AlgebraicNumber());
  ld.b_char = t.b_values;
  ld.n.assign(n, AlgebraicNumber());
  for (int chi = 0; chi < nch; ++chi) {
    int a = 0;
    for (Elt w = 0; w < n; ++w)
      if (!hv.at(chi, w).is_zero()) a = std::max(a, -hv.at(chi, w).valuation());
    ld.a_char[chi] = a;
    AlgebraicNumber sq;
    for (Elt w = 0; w < n; ++w) {
      auto c = hv.at(chi, w).coeff(-a);
      ld.c[chi][w] = sign_of_length(g, w) > 0 ? c : -c;
      sq += c * c;
    }
    ld.f_char[chi] = sq / AlgebraicNumber(t.degrees[chi]);
    if (ld.f_char[chi].sign() <= 0) throw std::logic_error("f_chi not positive for " + name(t, chi));
  }
  std::vector<AlgebraicNumber> finv(nch);
  for (int chi = 0; chi < nch; ++chi) finv[chi] = ld.f_char[chi].inv();
  for (Elt w = 0; w < n; ++w) {
    for (int chi = 0; chi < nch; ++chi)
      if (!ld.c[chi][w].is_zero()) ld.n[w] += finv[chi] * ld.c[chi][w];
    if (!ld.n[w].is_zero()) ld.distinguished.push_back(w);
  }
  classify_special_exceptional(ld, t);
  return ld;
}

void classify_special_exceptional(LeadingData& ld, const CharacterTable& t) {
  const auto& g = *t.group;
  const int nch = t.size();
  ld.special.assign(nch, 0);
  ld.exceptional.assign(nch, 0);
  for (int chi = 0; chi < nch; ++chi) {
    ld.special[chi] = ld.a_char[chi] == ld.b_char[chi];
    for (Elt w = 0; w < g.size(); ++w)
      if (!ld.c[chi][w].is_zero() && (ld.a_char[chi] - g.length(w)) % 2 != 0) {
        ld.exceptional[chi] = 1;
        break;
      }
  }
}

Report verify_leading_data(const LeadingData& ld, const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                           const FamilyAssignment& fam, const std::vector<std::vector<long long>>& mult) {
  Report rep;
  const auto& g = kl.group();
  const int n = g.size(), nch = t.size();
  for (int chi = 0; chi < nch; ++chi) {
    bool any = false;
    for (Elt w = 0; w < n; ++w) {
      if (ld.c[chi][w] != ld.c[chi][g.inverse(w)]) rep.fail("c not symmetric for " + name(t, chi));
      if (!ld.c[chi][w].is_zero()) {
        any = true;
        if (mult[p.left_of[w]][chi] == 0) rep.fail("c nonzero outside cell support for " + name(t, chi));
      }
    }
    if (!any) rep.fail("all c vanish for " + name(t, chi));
  }
  for (int a = 0; a < nch; ++a)
    for (int b = a; b < nch; ++b) {
      AlgebraicNumber total;
      std::vector<AlgebraicNumber> per(p.left.size());
      for (Elt w = 0; w < n; ++w) {
        if (ld.c[a][w].is_zero() || ld.c[b][w].is_zero()) continue;
        auto pr = ld.c[a][w] * ld.c[b][w];
        total += pr;
        per[p.left_of[w]] += pr;
      }
      AlgebraicNumber want = a == b ? ld.f_char[a] * AlgebraicNumber(t.degrees[a]) : AlgebraicNumber();
      if (total != want) rep.fail("orthogonality fails for " + name(t, a) + ", " + name(t, b));
      for (size_t c = 0; c < p.left.size(); ++c) {
        AlgebraicNumber w2 = a == b ? ld.f_char[a] * AlgebraicNumber(mult[c][a]) : AlgebraicNumber();
        if (per[c] != w2) rep.fail("cell orthogonality fails in cell " + std::to_string(c));
      }
    }
  if (!kl.a_values().empty()) {
    auto dist = distinguished_per_left_cell(kl, p);
    std::vector<Elt> sorted = dist;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != ld.distinguished) rep.fail("distinguished set differs from a = Delta");
    for (size_t c = 0; c < dist.size(); ++c) {
      Elt d = dist[c];
      AlgebraicNumber nd(num::to_rational(kl.n_coeff(d)));
      if (ld.n[d] != nd) rep.fail("n_d mismatch at " + g.word_string(d));
      AlgebraicNumber s;
      for (int chi = 0; chi < nch; ++chi) {
        if (ld.c[chi][d] != nd * AlgebraicNumber(mult[c][chi])) rep.fail("c_d != n_d <[C],chi> at " + g.word_string(d));
        if (mult[c][chi]) s += AlgebraicNumber(mult[c][chi]) / ld.f_char[chi];
      }
      if (s != AlgebraicNumber(1)) rep.fail("sum f^-1 <[C],chi> != 1 in cell " + std::to_string(c));
    }
    for (int chi = 0; chi < nch; ++chi) {
      Elt z = p.two_sided[fam.family_of_char[chi]][0];
      if (kl.a_values()[z] != ld.a_char[chi]) rep.fail("a_chi differs from a on the cell for " + name(t, chi));
    }
  }
  return rep;
}

Report check_diamonds(const LeadingData& ld, const CellPartition& p, const CharacterTable& t,
                      const FamilyAssignment& fam) {
  Report rep;
  const auto& g = *t.group;
  for (size_t f = 0; f < fam.members.size(); ++f) {
    std::vector<int> sp;
    for (int chi : fam.members[f])
      if (ld.special[chi]) sp.push_back(chi);
    if (sp.size() != 1) {
      rep.fail("two-sided cell " + std::to_string(f) + " has " + std::to_string(sp.size()) + " special characters");
      continue;
    }
    int chi = sp[0];
    for (int c : p.left_cells_in(static_cast<int>(f)))
      for (Elt w : p.left[c]) {
        if (p.left_of[g.inverse(w)] != c) continue;
        auto v = ld.c[chi][w];
        if ((ld.a_char[chi] + g.length(w)) % 2) v = -v;
        if (v.sign() <= 0) rep.fail("sign condition fails at " + g.word_string(w) + " for " + name(t, chi));
      }
  }
  return rep;
}

std::vector<int> twisted_characters(const HeckeCharacterValues& hv, const CharacterTable& t, const KLTable& kl) {
  const auto& g = kl.group();
  std::vector<int> out(t.size(), -1);
  for (int s = 0; s < g.rank(); ++s)
    if (kl.weights()[s] % 2 == 0) return out;
  for (int chi = 0; chi < t.size(); ++chi) {
    ClassFunction f;
    for (auto& cls : g.classes()) {
      Elt w = cls.min_length_rep;
      AlgebraicNumber v;
      for (auto& [e, c] : hv.at(chi, w).terms()) v += (e % 2 ? -c : c);
      f.push_back(sign_of_length(g, w) > 0 ? v : -v);
    }
    out[chi] = t.index_of(f);
  }
  return out;
}

Report check_twist_duality(const std::vector<int>& twist, const LeadingData& ld, const CharacterTable& t,
                           const FamilyAssignment& fam) {
  Report rep;
  const auto& g = *t.group;
  for (int chi = 0; chi < t.size(); ++chi) {
    int tw = twist[chi];
    if (tw < 0) {
      rep.fail("no twisted character for " + name(t, chi));
      continue;
    }
    if (ld.a_char[tw] != ld.a_char[chi]) rep.fail("twist changes a for " + name(t, chi));
    if (fam.family_of_char[tw] != fam.family_of_char[chi]) rep.fail("twist leaves the family of " + name(t, chi));
    for (Elt w = 0; w < g.size(); ++w) {
      auto c = ld.c[chi][w];
      if ((ld.a_char[chi] + g.length(w)) % 2) c = -c;
      if (ld.c[tw][w] != c) rep.fail("twisted leading coefficient mismatch for " + name(t, chi));
    }
    if (static_cast<bool>(ld.exceptional[chi]) != (tw != chi)) rep.fail("exceptional flag disagrees with twist for " + name(t, chi));
  }
  return rep;
}

std::vector<SmoothnessRow> smoothness(const CellPartition& p, const FamilyAssignment& fam, const LeadingData& ld,
                                      const CharacterTable& t, const std::vector<std::vector<long long>>& mult) {
  const auto& g = *t.group;
  std::vector<SmoothnessRow> out;
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    SmoothnessRow r;
    r.cell = static_cast<int>(f);
    r.cond[0] = fam.members[f].size() == 1;
    bool some = false, all = true;
    for (int c : p.left_cells_in(r.cell)) {
      long long tot = std::accumulate(mult[c].begin(), mult[c].end(), 0LL);
      bool irr = tot == 1;
      some = some || irr;
      all = all && irr;
    }
    r.cond[1] = some;
    r.cond[3] = all;
    for (int chi : fam.members[f])
      if (ld.f_char[chi] == AlgebraicNumber(1)) r.cond[2] = true;
    long long inv = 0;
    bool in_d = true;
    for (Elt w : p.two_sided[f])
      if (g.is_involution(w)) {
        ++inv;
        if (!std::binary_search(ld.distinguished.begin(), ld.distinguished.end(), w)) in_d = false;
      }
    r.cond[4] = static_cast<long long>(p.two_sided[f].size()) == inv * inv;
    r.cond[5] = in_d;
    out.push_back(r);
  }
  return out;
}

std::vector<Elt> embed_parabolic(const CoxeterGroup& parent, cox::GenMask j, const CoxeterGroup& sub) {
  std::vector<int> gens;
  for (int s = 0; s < parent.rank(); ++s)
    if (j >> s & 1) gens.push_back(s);
  if (static_cast<int>(gens.size()) != sub.rank()) throw std::invalid_argument("parabolic rank mismatch");
  std::vector<Elt> out;
  for (Elt x = 0; x < sub.size(); ++x) {
    auto word = sub.reduced_word(x);
    for (auto& s : word) s = gens[s];
    out.push_back(parent.from_word(word));
  }
  return out;
}

std::vector<long long> j_induction(const CharacterTable& parent, const cox::GenMask j, const CharacterTable& sub,
                                   int sub_char) {
  const auto& sg = *sub.group;
  auto elems = embed_parabolic(*parent.group, j, sg);
  std::vector<AlgebraicNumber> f;
  for (Elt x = 0; x < sg.size(); ++x) f.push_back(sub.value(sub_char, x));
  auto m = parent.multiplicities(induce(parent, elems, f));
  for (int psi = 0; psi < parent.size(); ++psi)
    if (parent.b_values[psi] != sub.b_values[sub_char]) m[psi] = 0;
  return m;
}

Report check_parabolic_sign_families(const KLTable& kl, const CellPartition& p, const CharacterTable& t,
                                     const FamilyAssignment& fam, const LeadingData& ld) {
  Report rep;
  const auto& g = kl.group();
  for (cox::GenMask j = 0; j < (cox::GenMask(1) << g.rank()); ++j) {
    auto par = g.parabolic(j);
    std::vector<AlgebraicNumber> sgn;
    for (Elt x : par.elements) sgn.push_back(AlgebraicNumber(sign_of_length(g, x)));
    auto m = t.multiplicities(induce(t, par.elements, sgn));
    int aw = kl.weights().of(g, par.longest);
    for (int chi = 0; chi < t.size(); ++chi) {
      if (ld.a_char[chi] != aw || m[chi] == 0) continue;
      if (fam.family_of_char[chi] != p.two_sided_of[par.longest])
        rep.fail(name(t, chi) + " not in the family of the longest element of J=" + std::to_string(j));
      auto c = ld.c[chi][par.longest];
      if (c != AlgebraicNumber(m[chi]) && c != AlgebraicNumber(-m[chi]))
        rep.fail("c_{w0',chi} != +-multiplicity for " + name(t, chi));
    }
  }
  return rep;
}

}  // namespace klc::chars
