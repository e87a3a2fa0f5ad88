#pragma once

// Dense exact linear algebra over a Field: row reduction, inverses, kernels.

#include <cassert>
#include <optional>

#include "hopfcat/scalars.hpp"

namespace hopfcat {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const FieldPtr& F, int n) { return Vec(n, F->zero()); }

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = c * x;
  return r;
}

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr F, int rows, int cols)
      : F_(std::move(F)), rows_(rows), cols_(cols), a_(rows * cols, F_->zero()) {}

  static Mat identity(const FieldPtr& F, int n) {
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F->one();
    return m;
  }
  static Mat from_rows(const FieldPtr& F, const std::vector<Vec>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(F, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return F_; }

  Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

  Vec row(int i) const {
    Vec r;
    r.reserve(cols_);
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }
  void set_row(int i, const Vec& v) {
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  Mat transpose() const {
    Mat t(F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    Mat r(F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != o.a_[i]) return false;
    return true;
  }

 private:
  FieldPtr F_;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// row-vector times matrix
inline Vec vec_mat(const Vec& v, const Mat& m) {
  Vec r = zero_vec(m.field(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] = r[j] + v[i] * m.at(i, j);
  }
  return r;
}

struct Rref {
  Mat reduced;
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

inline Rref rref(Mat m) {
  int r = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Scalar inv = m.at(r, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return Rref{std::move(m), std::move(pivots), r};
}

inline int rank(const Mat& m) { return rref(m).rank; }

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = m.field()->one();
  }
  Rref rr = rref(std::move(aug));
  if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

// Solve x * m = v for a row vector x (v given over the column space); nullopt
// if inconsistent.
inline std::optional<Vec> solve_row(const Mat& m, const Vec& v) {
  // transpose to solve m^T x^T = v^T via augmented elimination
  Mat aug(m.field(), m.cols(), m.rows() + 1);
  for (int i = 0; i < m.cols(); ++i) {
    for (int j = 0; j < m.rows(); ++j) aug.at(i, j) = m.at(j, i);
    aug.at(i, m.rows()) = v[i];
  }
  Rref rr = rref(std::move(aug));
  Vec x = zero_vec(m.field(), m.rows());
  for (int i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == m.rows()) return std::nullopt;  // pivot in the rhs column
    x[rr.pivots[i]] = rr.reduced.at(i, m.rows());
  }
  // check: x * m == v (guards against underdetermined consistent systems)
  Vec check = vec_mat(x, m);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (check[i] != v[i]) return std::nullopt;
  return x;
}

// Basis of {x : x * m = 0} as rows.
inline Mat left_kernel(const Mat& m) {
  Mat t = m.transpose();
  Rref rr = rref(t);
  std::vector<bool> is_pivot(m.rows(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int freecol = 0; freecol < m.rows(); ++freecol) {
    if (is_pivot[freecol]) continue;
    Vec x = zero_vec(m.field(), m.rows());
    x[freecol] = m.field()->one();
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = -rr.reduced.at(i, freecol);
    rows.push_back(std::move(x));
  }
  if (rows.empty()) return Mat(m.field(), 0, m.rows());
  return Mat::from_rows(m.field(), rows);
}

}  // namespace hopfcat
