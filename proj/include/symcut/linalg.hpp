#pragma once

// Small dense exact linear algebra over the rationals: reduced row echelon
// form and the usual derived quantities (rank, solve, inverse, nullspace).
// Deterministic: pivots are chosen as the first nonzero entry in column order,
// so bases returned by nullspace() are canonical for a given input.

#include <optional>

#include "symcut/rational.hpp"

namespace symcut {

class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  RatMat(std::initializer_list<std::initializer_list<int>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
      for (int v : row) data_.emplace_back(v);
    }
  }
  RatMat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
      for (const Rat& v : row) data_.push_back(v);
    }
  }

  static RatMat identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMat from_rows(const std::vector<RatVec>& rows) {
    RatMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatVec row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  RatVec col(std::size_t j) const {
    RatVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  RatMat transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatVec apply(const RatVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    RatVec y(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: size mismatch");
    RatMat p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o(k, j) != 0) p(i, j) += a * o(k, j);
      }
    return p;
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

struct Rref {
  RatMat mat;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

inline Rref rref(RatMat m) {
  Rref out{RatMat(), {}};
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

inline std::size_t rank(const RatMat& m) { return rref(m).rank(); }

inline std::size_t rank_of_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  return rank(RatMat::from_rows(rows));
}

inline bool linearly_independent(const std::vector<RatVec>& rows) {
  return rank_of_rows(rows) == rows.size();
}

// Canonical basis of { x : Mx = 0 }, one vector per free column, with the free
// coordinate set to 1.
inline std::vector<RatVec> nullspace(const RatMat& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
      v[rr.pivot_cols[i]] = -rr.mat(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves Mx = b; returns nullopt when inconsistent.  When the solution set is
// a positive-dimensional affine space, returns the representative with all
// free coordinates zero.
inline std::optional<RatVec> solve(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  for (auto c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    x[rr.pivot_cols[i]] = rr.mat(i, m.cols());
  return x;
}

inline RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr = rref(aug);
  if (rr.rank() < n || rr.pivot_cols[n - 1] != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.mat(i, n + j);
  return inv;
}

inline Rat determinant(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// True when v lies in the row span of `rows`.
inline bool in_span(const std::vector<RatVec>& rows, const RatVec& v) {
  if (is_zero(v)) return true;
  auto with = rows;
  with.push_back(v);
  return rank_of_rows(with) == rank_of_rows(rows);
}

}  // namespace symcut
