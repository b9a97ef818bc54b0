#pragma once

#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace toss {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row major, square in all uses here

inline IMat imat_identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IVec imat_vec(const IMat& a, const IVec& v) {
  const int n = (int)a.size();
  if ((int)v.size() != n) throw dimension_mismatch_error("matrix/vector size mismatch");
  IVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < n; ++j) acc += (__int128)a[i][j] * v[j];
    if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("integer matrix overflow");
    out[i] = (long long)acc;
  }
  return out;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
  const int n = (int)a.size();
  IMat out(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < n; ++k) acc += (__int128)a[i][k] * b[k][j];
      if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("integer matrix overflow");
      out[i][j] = (long long)acc;
    }
  return out;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IVec ivec_neg(const IVec& a) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline IVec ivec_scale(long long c, const IVec& a) {
  IVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

// Exact inverse over Q by Gauss-Jordan elimination.
inline std::vector<std::vector<Rat>> qmat_inverse(const IMat& m) {
  const int n = (int)m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw singular_matrix_error("singular matrix");
    std::swap(a[c], a[piv]);
    Rat pv = a[c][c];
    for (int j = 0; j < 2 * n; ++j) a[c][j] = a[c][j] / pv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rat f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] = a[r][j] - f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

// Inverse of a unimodular integer matrix; throws if the inverse is not integral.
inline IMat imat_inverse_unimodular(const IMat& m) {
  auto inv = qmat_inverse(m);
  const int n = (int)m.size();
  IMat out(n, IVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!inv[i][j].is_integer())
        throw singular_matrix_error("matrix is not unimodular");
      out[i][j] = inv[i][j].num();
    }
  return out;
}

}  // namespace toss
