#include "cybra/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace cybra {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("mat_add: shape mismatch");
  Mat z = x;
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) z(i, j) += y(i, j);
  return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  return mat_add(x, mat_scale(Rat(-1), y));
}

Mat mat_scale(const Rat& c, const Mat& x) {
  Mat z = x;
  for (auto& row : z.a)
    for (auto& e : row) e *= c;
  return z;
}

Mat mat_transpose(const Mat& x) {
  Mat z(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
  return z;
}

Rat mat_trace(const Mat& x) {
  Rat t = 0;
  for (std::size_t i = 0; i < x.rows && i < x.cols; ++i) t += x(i, i);
  return t;
}

bool mat_is_zero(const Mat& x) {
  for (const auto& row : x.a)
    for (const auto& e : row)
      if (e != 0) return false;
  return true;
}

namespace {

// Clear denominators in a row so Bareiss works over integers (entries stay Rat
// but with denominator 1); scaling rows does not change rank, and determinant
// scale factors are tracked by the caller when needed.
Rat row_lcm_denominator(const Vec& row) {
  Int l = 1;
  for (const auto& e : row) {
    Int d = denominator(e);
    l = lcm(l, d);
  }
  return Rat(l);
}

}  // namespace

std::size_t rank_bareiss(Mat m) {
  // Fraction-free elimination (Bareiss): after scaling each row to integer
  // entries, all pivots divide exactly and intermediate entries stay integral.
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rat l = row_lcm_denominator(m.a[i]);
    if (l != 1)
      for (auto& e : m.a[i]) e *= l;
  }
  std::size_t rank = 0;
  Rat prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[row]);
    const Rat p = m(row, col);
    for (std::size_t i = row + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j)
        m(i, j) = (p * m(i, j) - m(i, col) * m(row, j)) / prev;
      m(i, col) = 0;
    }
    prev = p;
    ++row;
    ++rank;
  }
  return rank;
}

Rat det_bareiss(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  if (m.rows == 0) return 1;
  Rat scale(1);  // product of row scalings to divide out at the end
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rat l = row_lcm_denominator(m.a[i]);
    if (l != 1) {
      for (auto& e : m.a[i]) e *= l;
      scale *= l;
    }
  }
  Rat prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m.rows; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < m.rows && m(piv, k) == 0) ++piv;
      if (piv == m.rows) return 0;
      std::swap(m.a[piv], m.a[k]);
      sign = -sign;
    }
    const Rat p = m(k, k);
    for (std::size_t i = k + 1; i < m.rows; ++i) {
      for (std::size_t j = k + 1; j < m.cols; ++j)
        m(i, j) = (p * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = p;
  }
  return Rat(sign) * m(m.rows - 1, m.rows - 1) / scale;
}

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (b.size() != A.rows) throw std::invalid_argument("solve: shape mismatch");
  Mat m(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
    m(i, A.cols) = b[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[row]);
    const Rat p = m(row, col);
    for (std::size_t j = col; j <= A.cols; ++j) m(row, j) /= p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j <= A.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivcol.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m.rows; ++i)
    if (m(i, A.cols) != 0) return std::nullopt;
  Vec x(A.cols, Rat(0));
  for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = m(i, A.cols);
  return x;
}

std::vector<Vec> nullspace(const Mat& A) {
  Mat m = A;
  std::vector<std::size_t> pivcol;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(m.a[piv], m.a[row]);
    const Rat p = m(row, col);
    for (std::size_t j = col; j < A.cols; ++j) m(row, j) /= p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < A.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(A.cols, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < A.cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(A.cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> mat_inverse(const Mat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
  const std::size_t n = A.rows;
  Mat m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = A(i, j);
    m(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m.a[piv], m.a[col]);
    const Rat p = m(col, col);
    for (std::size_t j = col; j < 2 * n; ++j) m(col, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < 2 * n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

Vec RowSpace::reduce(Vec v) const {
  assert(v.size() == width_);
  for (const auto& [col, ri] : pivot_) {
    if (v[col] == 0) continue;
    const Rat f = v[col];
    const Vec& r = rows_[ri];
    for (std::size_t j = col; j < width_; ++j)
      if (r[j] != 0) v[j] -= f * r[j];
  }
  return v;
}

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t col = 0;
  while (col < width_ && v[col] == 0) ++col;
  if (col == width_) return false;
  const Rat p = v[col];
  for (std::size_t j = col; j < width_; ++j) v[j] /= p;
  // Back-substitute into existing rows to keep reduced echelon form.
  for (auto& [c, ri] : pivot_) {
    Vec& r = rows_[ri];
    if (r[col] == 0) continue;
    const Rat f = r[col];
    for (std::size_t j = col; j < width_; ++j)
      if (v[j] != 0) r[j] -= f * v[j];
  }
  pivot_[col] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

bool RowSpace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& e : r)
    if (e != 0) return false;
  return true;
}

}  // namespace cybra
