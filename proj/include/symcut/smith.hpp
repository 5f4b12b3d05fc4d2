#pragma once

// Smith normal form of integer matrices with unimodular transforms tracked:
// U * M * V = D, diag(D) = (d_1, ..., d_k, 0, ...) with d_i > 0 and
// d_i | d_{i+1}.  Deterministic pivoting: smallest nonzero absolute value,
// ties broken by lowest (row, col).

#include "symcut/rational.hpp"

namespace symcut {

using IntMat = std::vector<IntVec>;  // row-major, rectangular

inline std::size_t int_rows(const IntMat& m) { return m.size(); }
inline std::size_t int_cols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

inline IntMat int_identity(std::size_t n) {
  IntMat m(n, IntVec(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  const std::size_t r = int_rows(a), k = int_cols(a), c = int_cols(b);
  if (k != int_rows(b)) throw std::invalid_argument("int_mul: size mismatch");
  IntMat p(r, IntVec(c, Int(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) p[i][j] += a[i][t] * b[t][j];
    }
  return p;
}

inline IntVec int_apply(const IntMat& m, const IntVec& x) {
  if (x.size() != int_cols(m)) throw std::invalid_argument("int_apply: size mismatch");
  IntVec y(int_rows(m), Int(0));
  for (std::size_t i = 0; i < int_rows(m); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

struct SmithNormalForm {
  IntMat U, D, V;  // U M V = D
  std::size_t rank = 0;
  std::vector<Int> divisors() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < rank; ++i) d.push_back(D[i][i]);
    return d;
  }
};

inline SmithNormalForm smith_normal_form(IntMat M) {
  const std::size_t r = int_rows(M), n = int_cols(M);
  SmithNormalForm s;
  s.U = int_identity(r);
  s.V = int_identity(n);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(M[a], M[b]);
    std::swap(s.U[a], s.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(M[i][a], M[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(s.V[i][a], s.V[i][b]);
  };
  auto row_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    // row dst -= f * row src
    for (std::size_t j = 0; j < n; ++j) M[dst][j] -= f * M[src][j];
    for (std::size_t j = 0; j < r; ++j) s.U[dst][j] -= f * s.U[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < r; ++i) M[i][dst] -= f * M[i][src];
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] -= f * s.V[i][src];
  };

  const std::size_t steps = std::min(r, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    for (;;) {
      // deterministic pivot: smallest |entry| among the trailing block
      std::size_t pi = r, pj = n;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (M[i][j] == 0) continue;
          if (pi == r || abs_int(M[i][j]) < abs_int(M[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      if (pi == r) break;  // trailing block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (M[i][t] == 0) continue;
        row_op(i, t, M[i][t] / M[t][t]);
        if (M[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (M[t][j] == 0) continue;
        col_op(j, t, M[t][j] / M[t][t]);
        if (M[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // remainders left; re-pick a smaller pivot
      // enforce divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j)
          if (M[i][j] % M[t][t] != 0) {
            row_op(t, i, Int(-1));  // pull the offending row up, then redo
            divides = false;
          }
      if (divides) break;
    }
    if (M[t][t] == 0) break;
    if (M[t][t] < 0) {
      for (std::size_t j = 0; j < n; ++j) M[t][j] = -M[t][j];
      for (std::size_t j = 0; j < r; ++j) s.U[t][j] = -s.U[t][j];
    }
  }
  s.D = std::move(M);
  s.rank = 0;
  for (std::size_t i = 0; i < steps; ++i)
    if (s.D[i][i] != 0) ++s.rank;
  return s;
}

// Basis of the integer kernel of M (columns of V past the rank), each
// sign-normalized so its first nonzero coordinate is positive.
inline std::vector<IntVec> integer_kernel_basis(const SmithNormalForm& s) {
  const std::size_t n = int_cols(s.V);
  std::vector<IntVec> basis;
  for (std::size_t j = s.rank; j < n; ++j) {
    IntVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = s.V[i][j];
    for (const auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symcut
