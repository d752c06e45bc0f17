#include "klcells/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace klc::cells {

namespace {

using Graph = std::vector<std::vector<Elt>>;  // out[y] = elements z with z <= y (one step)

struct Condensed {
  std::vector<std::vector<Elt>> cells;
  std::vector<int> cell_of;
  std::vector<std::vector<char>> below;
};

// Tarjan, iterative; components come out successors-first.
Condensed condense(const Graph& out) {
  const int n = static_cast<int>(out.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<Elt>> comps;
  int counter = 0;
  std::vector<std::pair<int, size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < out[v].size()) {
        int w = out[v][i++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      int vv = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[vv]);
      if (low[vv] == index[vv]) {
        std::vector<Elt> c;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = static_cast<int>(comps.size());
          c.push_back(w);
        } while (w != vv);
        std::sort(c.begin(), c.end());
        comps.push_back(std::move(c));
      }
    }
  }
  const int k = static_cast<int>(comps.size());
  // reachability, successors-first order
  std::vector<std::vector<char>> reach(k, std::vector<char>(k, 0));
  for (int c = 0; c < k; ++c) {
    reach[c][c] = 1;
    for (Elt y : comps[c])
      for (Elt z : out[y]) {
        int d = comp[z];
        if (reach[c][d]) continue;
        for (int j = 0; j < k; ++j)
          if (reach[d][j]) reach[c][j] = 1;
      }
  }
  // renumber by minimal element
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return comps[a][0] < comps[b][0]; });
  std::vector<int> rank(k);
  for (int i = 0; i < k; ++i) rank[order[i]] = i;
  Condensed r;
  r.cells.resize(k);
  r.cell_of.assign(n, -1);
  r.below.assign(k, std::vector<char>(k, 0));
  for (int c = 0; c < k; ++c) {
    r.cells[rank[c]] = comps[c];
    for (int j = 0; j < k; ++j)
      if (reach[c][j]) r.below[rank[c]][rank[j]] = 1;
  }
  for (int v = 0; v < n; ++v) r.cell_of[v] = rank[comp[v]];
  return r;
}

void dedup(Graph& g) {
  for (auto& e : g) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
}

}  // namespace

std::vector<int> CellPartition::left_cells_in(int two_sided_cell) const {
  std::vector<int> out;
  for (size_t c = 0; c < left.size(); ++c)
    if (two_sided_of[left[c][0]] == two_sided_cell) out.push_back(static_cast<int>(c));
  return out;
}

CellPartition compute_cells(const KLTable& kl, bool full_sweep) {
  const auto& g = kl.group();
  const int n = g.size();
  Graph left(n), right(n);
  if (full_sweep) {
    for (Elt y = 0; y < n; ++y) {
      auto col = kl.products_with(y);
      for (const auto& terms : *col)
        for (const auto& [z, h] : terms) left[y].push_back(z);
    }
  } else {
    for (Elt y = 0; y < n; ++y)
      for (int s = 0; s < g.rank(); ++s)
        for (const auto& [z, h] : kl.gen_product(s, y)) left[y].push_back(z);
  }
  dedup(left);
  // c_y h corresponds to h^flat c_{y^-1} under c_w -> c_{w^-1}
  for (Elt y = 0; y < n; ++y)
    for (Elt z : left[g.inverse(y)]) right[y].push_back(g.inverse(z));
  dedup(right);
  Graph both(n);
  for (Elt y = 0; y < n; ++y) {
    both[y] = left[y];
    both[y].insert(both[y].end(), right[y].begin(), right[y].end());
  }
  dedup(both);

  CellPartition p;
  auto l = condense(left), r = condense(right), t = condense(both);
  p.left = std::move(l.cells);
  p.left_of = std::move(l.cell_of);
  p.left_below = std::move(l.below);
  p.right = std::move(r.cells);
  p.right_of = std::move(r.cell_of);
  p.right_below = std::move(r.below);
  p.two_sided = std::move(t.cells);
  p.two_sided_of = std::move(t.cell_of);
  p.two_sided_below = std::move(t.below);
  return p;
}

std::vector<LaurentPoly> CellModule::apply_t(int s, const std::vector<LaurentPoly>& x) const {
  std::vector<LaurentPoly> y(x.size());
  LaurentPoly vl = LaurentPoly::monomial(Integer(1), weights[s]);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    y[i].add_product(vl, x[i]);
    for (const auto& [z, h] : dagger_action[s][i].entries) y[z].add_product(-h, x[i]);
  }
  return y;
}

LaurentPoly CellModule::trace_t(const cox::CoxeterGroup& g, Elt w) const {
  auto word = g.reduced_word(w);
  LaurentPoly tr;
  for (int i = 0; i < dim(); ++i) {
    std::vector<LaurentPoly> x(dim());
    x[i] = LaurentPoly(Integer(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply_t(*it, x);
    tr += x[i];
  }
  return tr;
}

bool CellModule::check_relations(const cox::CoxeterGroup& g, std::string* why) const {
  const auto& m = g.system().matrix;
  for (int i = 0; i < dim(); ++i) {
    std::vector<LaurentPoly> e(dim());
    e[i] = LaurentPoly(Integer(1));
    for (int s = 0; s < g.rank(); ++s) {
      // T_s^2 = 1 + (v^L - v^-L) T_s
      auto ts = apply_t(s, e);
      auto lhs = apply_t(s, ts);
      auto q = num::v_minus_vinv(weights[s]);
      for (int k = 0; k < dim(); ++k) {
        LaurentPoly rhs = e[k];
        rhs.add_product(q, ts[k]);
        if (lhs[k] != rhs) {
          if (why) *why = "quadratic relation fails for generator " + std::to_string(s);
          return false;
        }
      }
      for (int t = s + 1; t < g.rank(); ++t) {
        auto a = e, b = e;
        for (int k = 0; k < m[s][t]; ++k) {
          a = apply_t(k % 2 ? s : t, a);
          b = apply_t(k % 2 ? t : s, b);
        }
        if (a != b) {
          if (why) *why = "braid relation fails for " + std::to_string(s) + "," + std::to_string(t);
          return false;
        }
      }
    }
  }
  return true;
}

ClassFunction CellModule::specialized_character(const cox::CoxeterGroup& g) const {
  // at v = 1, T_s -> 1 - M_s(1)
  std::vector<std::vector<std::vector<std::pair<int, Integer>>>> m1(g.rank());
  for (int s = 0; s < g.rank(); ++s) {
    m1[s].resize(dim());
    for (int y = 0; y < dim(); ++y)
      for (const auto& [z, h] : dagger_action[s][y].entries) m1[s][y].push_back({z, h.eval_at_one()});
  }
  ClassFunction out;
  for (const auto& cls : g.classes()) {
    auto word = g.reduced_word(cls.min_length_rep);
    Integer tr(0);
    for (int i = 0; i < dim(); ++i) {
      std::vector<Integer> x(dim(), Integer(0));
      x[i] = Integer(1);
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::vector<Integer> y = x;
        for (int k = 0; k < dim(); ++k) {
          if (x[k].is_zero()) continue;
          for (const auto& [z, h] : m1[*it][k]) y[z] = y[z] - h * x[k];
        }
        x = std::move(y);
      }
      tr += x[i];
    }
    out.push_back(AlgebraicNumber(num::to_rational(tr)));
  }
  return out;
}

CellModule cell_module(const KLTable& kl, const std::vector<Elt>& cell) {
  const auto& g = kl.group();
  CellModule m;
  m.cell = cell;
  std::sort(m.cell.begin(), m.cell.end());
  m.weights = kl.weights().values();
  std::map<Elt, int> pos;
  for (int i = 0; i < m.dim(); ++i) pos[m.cell[i]] = i;
  m.dagger_action.assign(g.rank(), std::vector<SparseColumn>(m.dim()));
  for (int s = 0; s < g.rank(); ++s)
    for (int i = 0; i < m.dim(); ++i)
      for (const auto& [z, h] : kl.gen_product(s, m.cell[i])) {
        auto it = pos.find(z);
        if (it != pos.end()) m.dagger_action[s][i].entries.push_back({it->second, h});
      }
  return m;
}

ClassFunction specialized_cell_character(const CellModule& m, const CharacterTable& t) {
  return m.specialized_character(*t.group);
}

std::vector<ClassFunction> left_cell_characters(const KLTable& kl, const CellPartition& p, const CharacterTable& t) {
  std::vector<ClassFunction> out;
  for (const auto& c : p.left) {
    auto m = cell_module(kl, c);
    std::string why;
    if (!m.check_relations(kl.group(), &why)) throw std::logic_error("cell module: " + why);
    out.push_back(specialized_cell_character(m, t));
  }
  return out;
}

std::vector<std::vector<long long>> left_cell_multiplicities(const CharacterTable& t, const std::vector<ClassFunction>& cell_chars) {
  std::vector<std::vector<long long>> out;
  for (const auto& f : cell_chars) out.push_back(t.multiplicities(f));
  return out;
}

FamilyAssignment assign_families(const CellPartition& p, const CharacterTable& t,
                                 const std::vector<std::vector<long long>>& left_cell_mults) {
  FamilyAssignment f;
  f.family_of_char.assign(t.size(), -1);
  f.members.resize(p.two_sided.size());
  for (size_t c = 0; c < p.left.size(); ++c) {
    int fam = p.two_sided_of[p.left[c][0]];
    for (int chi = 0; chi < t.size(); ++chi) {
      if (left_cell_mults[c][chi] == 0) continue;
      if (f.family_of_char[chi] >= 0 && f.family_of_char[chi] != fam)
        throw std::logic_error("character " + t.labels[chi] + " occurs in two two-sided cells");
      f.family_of_char[chi] = fam;
    }
  }
  for (int chi = 0; chi < t.size(); ++chi) {
    if (f.family_of_char[chi] < 0) throw std::logic_error("character " + t.labels[chi] + " occurs in no cell");
    f.members[f.family_of_char[chi]].push_back(chi);
  }
  return f;
}

std::vector<int> character_graph_components(const std::vector<std::vector<long long>>& left_cell_mults, int nchars) {
  std::vector<int> parent(nchars);
  for (int i = 0; i < nchars; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& m : left_cell_mults) {
    int first = -1;
    for (int chi = 0; chi < nchars; ++chi) {
      if (m[chi] == 0) continue;
      if (first < 0) first = chi;
      else parent[find(chi)] = find(first);
    }
  }
  std::vector<int> comp(nchars), label(nchars, -1);
  int next = 0;
  for (int i = 0; i < nchars; ++i) {
    int r = find(i);
    if (label[r] < 0) label[r] = next++;
    comp[i] = label[r];
  }
  return comp;
}

PairingResult cell_intersection_pairing(const CellPartition& p, const CharacterTable& t,
                                        const std::vector<ClassFunction>& cell_chars, int c, int c2) {
  PairingResult r;
  auto ip = t.inner(cell_chars[c], cell_chars[c2]);
  if (!ip.is_rational() || ip.rational_value().get_den() != 1) throw std::logic_error("non-integral inner product");
  r.inner_product = ip.rational_value().get_num().get_si();
  const auto& g = *t.group;
  for (Elt x : p.left[c])
    if (std::binary_search(p.left[c2].begin(), p.left[c2].end(), g.inverse(x))) ++r.intersection;
  return r;
}

DualityReport w0_duality_check(const cox::CoxeterGroup& g, const CellPartition& p, const CharacterTable& t,
                               const std::vector<ClassFunction>& cell_chars, const FamilyAssignment& fam) {
  DualityReport rep;
  auto fail = [&](std::string s) {
    rep.ok = false;
    rep.failures.push_back(std::move(s));
  };
  const auto& sign = t.values[t.sign];
  for (size_t c = 0; c < p.left.size(); ++c) {
    std::vector<Elt> shifted;
    for (Elt x : p.left[c]) shifted.push_back(g.multiply(x, g.longest()));
    std::sort(shifted.begin(), shifted.end());
    int d = p.left_of[shifted[0]];
    if (p.left[d] != shifted) {
      fail("C w0 is not a left cell for left cell " + std::to_string(c));
      continue;
    }
    if (cell_chars[d] != t.tensor(cell_chars[c], sign)) fail("[C w0] != [C] x sign for left cell " + std::to_string(c));
  }
  for (size_t f = 0; f < p.two_sided.size(); ++f) {
    int dual = p.two_sided_of[g.multiply(p.two_sided[f][0], g.longest())];
    std::vector<int> expect;
    for (int chi : fam.members[f]) expect.push_back(t.index_of(t.tensor(t.values[chi], sign)));
    std::sort(expect.begin(), expect.end());
    auto got = fam.members[dual];
    std::sort(got.begin(), got.end());
    if (expect != got) fail("family of two-sided cell " + std::to_string(f) + " not dual under sign");
  }
  return rep;
}

}  // namespace klc::cells
