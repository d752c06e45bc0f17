#include "klcells/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <random>
#include <stdexcept>

#include "klcells/linalg.hpp"

namespace klc::chars {

using num::Rational;

namespace {

using u64 = uint64_t;

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> fac;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : fac)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using ModMat = std::vector<std::vector<u64>>;

// characteristic polynomial (low degree first) via Hessenberg reduction
std::vector<u64> charpoly_mod(ModMat h, u64 p) {
  int n = static_cast<int>(h.size());
  for (int m = 1; m + 1 < n; ++m) {
    int i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i > m) {
      std::swap(h[i], h[m]);
      for (int r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    u64 tinv = invmod(h[m][m - 1], p);
    for (int j = m + 1; j < n; ++j) {
      u64 u = h[j][m - 1] * tinv % p;
      if (!u) continue;
      for (int c = 0; c < n; ++c) h[j][c] = (h[j][c] + p - u * h[m][c] % p) % p;
      for (int r = 0; r < n; ++r) h[r][m] = (h[r][m] + u * h[r][j]) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} (h_{i+1,i} ... h_{m,m-1}) p_{i-1}   (1-based)
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> q(m + 1, 0);
    for (int k = 0; k < m; ++k) {
      q[k + 1] = (q[k + 1] + P[m - 1][k]) % p;
      q[k] = (q[k] + p - h[m - 1][m - 1] * P[m - 1][k] % p) % p;
    }
    u64 t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % p;
      u64 c = h[i - 1][m - 1] * t % p;
      if (!c) continue;
      for (size_t k = 0; k < P[i - 1].size(); ++k) q[k] = (q[k] + p - c * P[i - 1][k] % p) % p;
    }
    P[m] = q;
  }
  return P[n];
}

// kernel of a (square) matrix mod p
std::vector<std::vector<u64>> kernel_mod(ModMat a, u64 p) {
  int n = static_cast<int>(a.size());
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int k = r;
    while (k < n && a[k][c] == 0) ++k;
    if (k == n) continue;
    std::swap(a[k], a[r]);
    u64 iv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = x * iv % p;
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> out;
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(n, 0);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - a[i][f]) % p;
    out.push_back(v);
  }
  return out;
}

}  // namespace

AlgebraicNumber CharacterTable::inner(const ClassFunction& f, const ClassFunction& g) const {
  AlgebraicNumber s;
  for (size_t j = 0; j < class_sizes.size(); ++j)
    if (!f[j].is_zero() && !g[j].is_zero()) s += f[j] * g[j] * AlgebraicNumber(static_cast<long long>(class_sizes[j]));
  return s * AlgebraicNumber(Rational(1, group->size()));
}

std::vector<AlgebraicNumber> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<AlgebraicNumber> out;
  for (auto& chi : values) out.push_back(inner(f, chi));
  return out;
}

std::vector<long long> CharacterTable::multiplicities(const ClassFunction& f) const {
  std::vector<long long> out;
  for (auto& m : decompose(f)) {
    if (!m.is_rational()) throw std::domain_error("irrational multiplicity " + m.str());
    Rational q = m.rational_value();
    if (q.get_den() != 1 || sgn(q) < 0) throw std::domain_error("multiplicity is not a nonnegative integer: " + q.get_str());
    out.push_back(q.get_num().get_si());
  }
  return out;
}

ClassFunction CharacterTable::tensor(const ClassFunction& f, const ClassFunction& g) const {
  ClassFunction h(f.size());
  for (size_t j = 0; j < f.size(); ++j) h[j] = f[j] * g[j];
  return h;
}

int CharacterTable::index_of(const ClassFunction& f) const {
  for (int i = 0; i < size(); ++i)
    if (values[i] == f) return i;
  return -1;
}

ClassFunction CharacterTable::combine(const std::vector<long long>& m) const {
  ClassFunction h(class_sizes.size());
  for (int i = 0; i < size(); ++i)
    if (m[i])
      for (size_t j = 0; j < h.size(); ++j) h[j] += values[i][j] * AlgebraicNumber(m[i]);
  return h;
}

std::vector<AlgebraicNumber> CharacterTable::on_elements(const ClassFunction& f) const {
  std::vector<AlgebraicNumber> out(group->size());
  for (Elt w = 0; w < group->size(); ++w) out[w] = f[group->class_of(w)];
  return out;
}

CharacterTable ordinary_character_table(const CoxeterGroup& g) {
  CharacterTable t;
  t.group = &g;
  const auto& cls = g.classes();
  int r = static_cast<int>(cls.size());
  long long order = g.size();
  std::vector<Elt> reps;
  for (auto& c : cls) {
    reps.push_back(c.min_length_rep);
    t.class_sizes.push_back(static_cast<long long>(c.members.size()));
  }
  // element orders and power maps
  std::vector<std::vector<int>> powcls(r);
  u64 e = 1;
  for (int j = 0; j < r; ++j) {
    Elt x = 0;
    do {
      powcls[j].push_back(g.class_of(x));
      x = g.multiply(x, reps[j]);
    } while (x != 0);
    t.element_orders.push_back(static_cast<int>(powcls[j].size()));
    e = std::lcm(e, static_cast<u64>(powcls[j].size()));
  }
  u64 bound = std::max<u64>(1000, static_cast<u64>(4 * std::sqrt(static_cast<double>(order))) + 1);
  u64 p = (bound / e + 1) * e + 1;
  while (!is_prime(p)) p += e;
  t.prime = static_cast<int>(p);

  // class multiplication coefficients a[j][i][k] = #{y in C_j : y^-1 z_k in C_i}
  std::vector<ModMat> A(r, ModMat(r, std::vector<u64>(r, 0)));
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < r; ++j)
      for (Elt y : cls[j].members) A[j][g.class_of(g.multiply(g.inverse(y), reps[k]))][k] += 1;

  std::mt19937_64 rng(20240607);
  std::vector<std::vector<u64>> eig;
  for (int attempt = 0; attempt < 40 && static_cast<int>(eig.size()) != r; ++attempt) {
    ModMat m(r, std::vector<u64>(r, 0));
    for (int j = 0; j < r; ++j) {
      u64 c = rng() % p;
      for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) m[i][k] = (m[i][k] + c * A[j][i][k]) % p;
    }
    auto cp = charpoly_mod(m, p);
    std::vector<u64> roots;
    for (u64 lam = 0; lam < p; ++lam) {
      u64 v = 0;
      for (int k = static_cast<int>(cp.size()) - 1; k >= 0; --k) v = (v * lam + cp[k]) % p;
      if (v == 0) roots.push_back(lam);
    }
    if (static_cast<int>(roots.size()) != r) continue;
    eig.clear();
    for (u64 lam : roots) {
      ModMat shifted = m;
      for (int i = 0; i < r; ++i) shifted[i][i] = (shifted[i][i] + p - lam) % p;
      auto ker = kernel_mod(shifted, p);
      if (ker.size() != 1) break;
      auto v = ker[0];
      if (v[0] == 0) break;
      u64 iv = invmod(v[0], p);
      for (auto& x : v) x = x * iv % p;
      eig.push_back(v);
    }
  }
  if (static_cast<int>(eig.size()) != r) throw std::runtime_error("character table: eigenvector splitting failed");

  u64 zeta_e = powmod(primitive_root(p), (p - 1) / e, p);
  auto fe = num::field_for(static_cast<int>(e));
  auto k0 = g.system().base_field;
  for (auto& omega : eig) {
    // chi(1)^2 = |W| / sum_j omega_j omega_j' / |C_j|
    u64 s = 0;
    for (int j = 0; j < r; ++j) {
      int jinv = g.class_of(g.inverse(reps[j]));
      s = (s + omega[j] * omega[jinv] % p * invmod(t.class_sizes[j] % p, p)) % p;
    }
    u64 d2 = static_cast<u64>(order) % p * invmod(s, p) % p;
    long long d = 0;
    for (long long c = 1; c * c <= order; ++c)
      if (static_cast<u64>(c * c) % p == d2) d = c;
    if (!d) throw std::runtime_error("character table: degree not found");
    std::vector<u64> modval(r);
    for (int j = 0; j < r; ++j) modval[j] = static_cast<u64>(d) % p * omega[j] % p * invmod(t.class_sizes[j] % p, p) % p;
    ClassFunction row(r);
    for (int j = 0; j < r; ++j) {
      int o = t.element_orders[j];
      u64 zo = powmod(zeta_e, e / o, p), zoinv = invmod(zo, p), oinv = invmod(o, p);
      AlgebraicNumber val;
      for (int k = 0; k < o; ++k) {
        u64 acc = 0, step = powmod(zoinv, k, p), cur = 1;
        for (int l = 0; l < o; ++l) {
          acc = (acc + modval[powcls[j][l]] * cur) % p;
          cur = cur * step % p;
        }
        long long mk = static_cast<long long>(acc * oinv % p);
        if (mk > d) throw std::runtime_error("character table: eigenvalue multiplicity out of range");
        if (mk) val += AlgebraicNumber(Rational(static_cast<long>(mk), 2L)) * AlgebraicNumber::two_cos(static_cast<int>(2 * k * (e / o)), fe);
      }
      row[j] = num::to_subfield(val, k0);
    }
    t.values.push_back(row);
    t.degrees.push_back(d);
  }

  // exact orthogonality in characteristic zero
  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      AlgebraicNumber ip = t.inner(t.values[a], t.values[b]);
      if (!(ip == AlgebraicNumber(a == b ? 1 : 0))) throw std::runtime_error("character table: orthogonality failed");
    }

  // b-values, then deterministic order by (degree, b, values)
  t.b_values.assign(r, -1);
  auto mol = molien_coefficients(t, g.num_positive_roots());
  for (int i = 0; i < r; ++i)
    for (size_t q = 0; q < mol[i].size(); ++q)
      if (mol[i][q]) {
        t.b_values[i] = static_cast<int>(q);
        break;
      }
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
    if (t.b_values[a] != t.b_values[b]) return t.b_values[a] < t.b_values[b];
    for (int j = 0; j < r; ++j)
      if (t.values[a][j] != t.values[b][j]) return t.values[b][j] < t.values[a][j];
    return false;
  });
  CharacterTable sorted = t;
  for (int i = 0; i < r; ++i) {
    sorted.values[i] = t.values[idx[i]];
    sorted.degrees[i] = t.degrees[idx[i]];
    sorted.b_values[i] = t.b_values[idx[i]];
  }
  t = std::move(sorted);
  std::map<std::pair<long long, int>, int> seen;
  for (int i = 0; i < r; ++i) {
    int k = seen[{t.degrees[i], t.b_values[i]}]++;
    t.labels.push_back("phi_{" + std::to_string(t.degrees[i]) + "," + std::to_string(t.b_values[i]) + "}" +
                       std::string(k, '\''));
    bool triv = true, sgn = true;
    for (int j = 0; j < r; ++j) {
      triv = triv && t.values[i][j] == AlgebraicNumber(1);
      sgn = sgn && t.values[i][j] == AlgebraicNumber(g.length(reps[j]) % 2 ? -1 : 1);
    }
    if (triv) t.trivial = i;
    if (sgn) t.sign = i;
  }
  // reflection character: trace of the reflection representation
  ClassFunction refl(r);
  for (int j = 0; j < r; ++j) {
    auto m = g.reflection_matrix(reps[j]);
    for (int i = 0; i < g.rank(); ++i) refl[j] += m[i][i];
  }
  t.reflection = t.index_of(refl);
  return t;
}

std::vector<std::vector<long long>> molien_coefficients(const CharacterTable& t, int order) {
  const auto& g = *t.group;
  int r = static_cast<int>(t.class_sizes.size());
  std::vector<std::vector<AlgebraicNumber>> inv(r);
  for (int j = 0; j < r; ++j) {
    auto m = g.reflection_matrix(g.classes()[j].min_length_rep);
    inv[j] = num::truncated_series_inverse(num::det_one_minus_qm(m), order);
  }
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < t.size(); ++i) {
    std::vector<long long> row;
    for (int q = 0; q <= order; ++q) {
      AlgebraicNumber s;
      for (int j = 0; j < r; ++j)
        if (!inv[j][q].is_zero()) s += inv[j][q] * t.values[i][j] * AlgebraicNumber(t.class_sizes[j]);
      s = s * AlgebraicNumber(Rational(1, g.size()));
      Rational v = s.rational_value();
      if (v.get_den() != 1 || sgn(v) < 0) throw std::logic_error("Molien coefficient is not a nonnegative integer");
      row.push_back(v.get_num().get_si());
    }
    out.push_back(row);
  }
  return out;
}

ClassFunction induce(const CharacterTable& t, const std::vector<Elt>& subgroup, const std::vector<AlgebraicNumber>& f) {
  const auto& g = *t.group;
  int r = static_cast<int>(t.class_sizes.size());
  ClassFunction sum(r);
  for (size_t i = 0; i < subgroup.size(); ++i) sum[g.class_of(subgroup[i])] += f[i];
  // Ind(x) = |W| / (|H| |C_x|) * sum_{h in H cap C_x} f(h)
  for (int j = 0; j < r; ++j)
    sum[j] = sum[j] * AlgebraicNumber(Rational(static_cast<long>(g.size()), static_cast<long>(subgroup.size() * t.class_sizes[j])));
  return sum;
}

}  // namespace klc::chars
