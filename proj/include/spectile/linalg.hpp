#pragma once

#include "spectile/core.hpp"

namespace spectile {

// Dense rational matrix, row-major. Sized for the d <= 3 kernels here, not
// for large systems.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}
  static Mat identity(int n);

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Mat& A, const Mat& B);
Point mat_vec(const Mat& A, const Point& x);
Mat transpose(const Mat& A);

Rational det(const Mat& A);
int rank(const Mat& A);

// Unique solution of a square nonsingular system; nullopt when singular.
std::optional<Point> solve(const Mat& A, const Point& b);
std::optional<Mat> inverse(const Mat& A);

// Basis of the right null space (columns of A are variables).
std::vector<Point> nullspace(const Mat& A);

}  // namespace spectile
