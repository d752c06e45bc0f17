#pragma once

#include <optional>
#include <vector>

#include "klcells/field.hpp"

namespace klc::num {

template <class K>
using Matrix = std::vector<std::vector<K>>;

// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<int> row_reduce(Matrix<K>& a, int ncols) {
  std::vector<int> piv;
  int nr = static_cast<int>(a.size()), r = 0;
  for (int c = 0; c < ncols && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (!is_zero(a[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    K iv = field_inv(a[r][c]);
    for (auto& x : a[r]) x = x * iv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      K f = a[i][c];
      for (size_t j = c; j < a[i].size(); ++j)
        if (!is_zero(a[r][j])) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class K>
int rank(Matrix<K> a) {
  if (a.empty()) return 0;
  return static_cast<int>(row_reduce(a, static_cast<int>(a[0].size())).size());
}

// Some solution of A x = b (free variables set to 0), or nullopt if inconsistent.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b, int ncols) {
  Matrix<K> aug = a;
  for (size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(ncols);
    aug[i].push_back(b[i]);
  }
  auto piv = row_reduce(aug, ncols);
  for (size_t i = piv.size(); i < aug.size(); ++i)
    if (!is_zero(aug[i][ncols])) return std::nullopt;
  std::vector<K> x(ncols);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][ncols];
  return x;
}

template <class K>
K determinant(Matrix<K> a) {
  int n = static_cast<int>(a.size());
  K det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(a[i][c])) {
        p = i;
        break;
      }
    if (p < 0) return K();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det = det * a[c][c];
    K iv = field_inv(a[c][c]);
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      K f = a[i][c] * iv;
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

// Coefficients of det(1 - q M), low degree first (Faddeev-LeVerrier).
template <class K>
std::vector<K> det_one_minus_qm(const Matrix<K>& m) {
  int n = static_cast<int>(m.size());
  // char poly x^n + c1 x^{n-1} + ... + cn; det(1 - qM) = 1 + c1 q + ... + cn q^n
  std::vector<K> c(n + 1);
  c[0] = K(1);
  Matrix<K> mk(n, std::vector<K>(n));  // M_k
  Matrix<K> prev(n, std::vector<K>(n));
  for (int i = 0; i < n; ++i) prev[i][i] = K(1);  // M_0 = I
  for (int k = 1; k <= n; ++k) {
    // M_k = M * M_{k-1}; c_k = -tr(M_k)/k; then M_k += c_k I
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        K s = K();
        for (int l = 0; l < n; ++l)
          if (!is_zero(m[i][l]) && !is_zero(prev[l][j])) s += m[i][l] * prev[l][j];
        mk[i][j] = s;
      }
    K tr = K();
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    c[k] = -(tr * field_inv(K(k)));
    for (int i = 0; i < n; ++i) mk[i][i] += c[k];
    prev = mk;
  }
  return c;
}

}  // namespace klc::num
