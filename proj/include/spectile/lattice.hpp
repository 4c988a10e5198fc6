#pragma once

#include "spectile/core.hpp"
#include "spectile/linalg.hpp"

namespace spectile::lattice {

// Finite window of a discrete point set, exact coordinates.
struct PointSet {
  int dim = 0;
  std::vector<Point> points;
  Box window;
};

// Full-rank lattice A * Z^d with a rational basis matrix (columns are the
// generators).
class Lattice {
 public:
  explicit Lattice(Mat basis);

  int dim() const { return basis_.rows; }
  const Mat& basis() const { return basis_; }
  const Mat& basis_inverse() const { return inv_; }
  const Rational& det_abs() const { return det_abs_; }

  Lattice dual() const;
  Rational density() const;  // 1 / |det A|

  // Exact membership: A^{-1} p integral.
  bool contains(const Point& p) const;

  // All lattice points inside the box; throws WindowTooLarge past the cap.
  PointSet enumerate_window(const Box& box, size_t cap = 10'000'000) const;

  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }

 private:
  Mat basis_;
  Mat inv_;
  Rational det_abs_;
};

// All pairwise differences p - q, p != q, deduplicated. Window is the
// symmetric span of the input window.
PointSet difference_set(const PointSet& s);

}  // namespace spectile::lattice
