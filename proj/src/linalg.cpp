#include "spectile/linalg.hpp"

namespace spectile {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

Point mat_vec(const Mat& A, const Point& x) {
  Point y(A.rows, Rational(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
  return y;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

namespace {

// Row-reduce in place; returns (rank, det of the leading square part).
// Column-pivoted Gaussian elimination, exact. Pivots are only taken from the
// first `pivot_cols` columns, so augmented systems cannot pivot on the RHS.
std::pair<int, Rational> eliminate(Mat& m, int pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = m.cols;
  Rational determinant(1);
  int r = 0;
  for (int c = 0; c < pivot_cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      determinant = 0;
      continue;
    }
    if (pivot != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      determinant = -determinant;
    }
    determinant *= m.at(r, c);
    const Rational inv_p = Rational(1) / m.at(r, c);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c) * inv_p;
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return {r, determinant};
}

}  // namespace

Rational det(const Mat& A) {
  if (A.rows != A.cols) throw DimensionMismatch("det of non-square matrix");
  if (A.rows == 1) return A.at(0, 0);
  if (A.rows == 2) return A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
  if (A.rows == 3) {
    return A.at(0, 0) * (A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1)) -
           A.at(0, 1) * (A.at(1, 0) * A.at(2, 2) - A.at(1, 2) * A.at(2, 0)) +
           A.at(0, 2) * (A.at(1, 0) * A.at(2, 1) - A.at(1, 1) * A.at(2, 0));
  }
  Mat m = A;
  auto [r, d] = eliminate(m);
  return r == A.rows ? d : Rational(0);
}

int rank(const Mat& A) {
  Mat m = A;
  return eliminate(m).first;
}

std::optional<Point> solve(const Mat& A, const Point& b) {
  if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
    throw DimensionMismatch("solve dimensions");
  Mat m(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, A.cols) = b[i];
  }
  auto [r, d] = eliminate(m, A.cols);
  (void)d;
  if (r < A.rows) return std::nullopt;
  Point x(A.cols);
  for (int i = 0; i < A.rows; ++i) {
    // After full (Gauss-Jordan style) elimination each row has one pivot.
    int pc = -1;
    for (int j = 0; j < A.cols; ++j) {
      if (m.at(i, j) != 0) {
        pc = j;
        break;
      }
    }
    x[pc] = m.at(i, A.cols) / m.at(i, pc);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows != A.cols) throw DimensionMismatch("inverse of non-square matrix");
  const int n = A.rows;
  Mat m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, n + i) = 1;
  }
  auto [r, d] = eliminate(m, n);
  (void)d;
  if (r < n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i) {
    int pc = -1;
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j) != 0) {
        pc = j;
        break;
      }
    }
    const Rational p = m.at(i, pc);
    for (int j = 0; j < n; ++j) inv.at(pc, j) = m.at(i, n + j) / p;
  }
  return inv;
}

std::vector<Point> nullspace(const Mat& A) {
  Mat m = A;
  auto [r, d] = eliminate(m);
  (void)d;
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(A.cols, false);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < A.cols; ++j) {
      if (m.at(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<Point> basis;
  for (int f = 0; f < A.cols; ++f) {
    if (is_pivot[f]) continue;
    Point v(A.cols, Rational(0));
    v[f] = 1;
    for (int i = 0; i < r; ++i) {
      const int pc = pivot_col[i];
      v[pc] = -m.at(i, f) / m.at(i, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace spectile
