#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cybra/rational.hpp"

namespace cybra {

using Vec = std::vector<Rat>;

// Dense exact-rational matrix, row major.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Vec> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, Vec(c, Rat(0))) {}

  Rat& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  static Mat identity(std::size_t n);
  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Rat& c, const Mat& x);
Mat mat_transpose(const Mat& x);
Rat mat_trace(const Mat& x);
bool mat_is_zero(const Mat& x);

// Rank by fraction-free (Bareiss) elimination. Exact.
std::size_t rank_bareiss(Mat m);

// Determinant of a square matrix by fraction-free (Bareiss) elimination. Exact.
Rat det_bareiss(Mat m);

// Solve x * A = b ... not provided; we use A x = b. Returns nullopt if inconsistent.
// If underdetermined, returns one solution (free variables set to 0).
std::optional<Vec> solve(const Mat& A, const Vec& b);

// Basis of the right nullspace {x : A x = 0}.
std::vector<Vec> nullspace(const Mat& A);

// Inverse of a square matrix; nullopt if singular.
std::optional<Mat> mat_inverse(const Mat& A);

// Incrementally maintained row space in reduced echelon form.
// Supports: insert a vector (returns true if it enlarged the span) and
// reduce a vector modulo the span (residual after eliminating pivots).
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  // Residual of v after subtracting the projection onto the current span.
  Vec reduce(Vec v) const;
  // Insert v; returns true iff v was not already in the span.
  bool insert(Vec v);
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }
  bool contains(const Vec& v) const;

 private:
  std::size_t width_;
  std::vector<Vec> rows_;             // echelon rows, pivot entry = 1
  std::map<std::size_t, std::size_t> pivot_;  // pivot column -> row index
};

}  // namespace cybra
