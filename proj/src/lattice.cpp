#include "spectile/lattice.hpp"

#include <algorithm>

namespace spectile::lattice {

Lattice::Lattice(Mat basis) : basis_(std::move(basis)) {
  if (basis_.rows != basis_.cols || basis_.rows < 1)
    throw DimensionMismatch("lattice basis must be square");
  const Rational d = det(basis_);
  if (d == 0) throw DegenerateBody("singular lattice basis");
  det_abs_ = d < 0 ? -d : d;
  inv_ = *inverse(basis_);
}

Lattice Lattice::dual() const { return Lattice(transpose(inv_)); }

Rational Lattice::density() const { return Rational(1) / det_abs_; }

bool Lattice::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim()) throw DimensionMismatch("point arity");
  const Point z = mat_vec(inv_, p);
  for (const Rational& c : z)
    if (denominator(c) != 1) return false;
  return true;
}

PointSet Lattice::enumerate_window(const Box& box, size_t cap) const {
  const int d = dim();
  if (box.dim() != d) throw DimensionMismatch("window dimension");
  if (box.empty_interior() && box.lo != box.hi)
    throw Error("window box has lo > hi");

  // Integer coordinates range over the preimage of the box corners.
  std::vector<Int> zlo(d), zhi(d);
  for (int i = 0; i < d; ++i) {
    Rational mn, mx;
    bool first = true;
    for (int mask = 0; mask < (1 << d); ++mask) {
      Rational acc(0);
      for (int j = 0; j < d; ++j)
        acc += inv_.at(i, j) * (((mask >> j) & 1) ? box.hi[j] : box.lo[j]);
      if (first || acc < mn) mn = acc;
      if (first || acc > mx) mx = acc;
      first = false;
    }
    zlo[i] = ceil_rational(mn);
    zhi[i] = floor_rational(mx);
  }

  PointSet out;
  out.dim = d;
  out.window = box;

  std::vector<Int> z(d);
  for (int i = 0; i < d; ++i) {
    if (zlo[i] > zhi[i]) return out;
    z[i] = zlo[i];
  }

  for (;;) {
    Point p(d, Rational(0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) p[i] += basis_.at(i, j) * Rational(z[j]);
    if (box.contains(p)) {
      out.points.push_back(std::move(p));
      if (out.points.size() > cap)
        throw WindowTooLarge("lattice window exceeds the point cap");
    }
    int axis = d - 1;
    while (axis >= 0) {
      if (++z[axis] <= zhi[axis]) break;
      z[axis] = zlo[axis];
      --axis;
    }
    if (axis < 0) break;
  }
  std::sort(out.points.begin(), out.points.end(), lex_less);
  return out;
}

PointSet difference_set(const PointSet& s) {
  PointSet out;
  out.dim = s.dim;
  const size_t n = s.points.size();
  out.points.reserve(n * (n - 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.points.push_back(sub(s.points[i], s.points[j]));
    }
  std::sort(out.points.begin(), out.points.end(), lex_less);
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  Point lo(s.dim), hi(s.dim);
  for (int i = 0; i < s.dim; ++i) {
    lo[i] = s.window.lo[i] - s.window.hi[i];
    hi[i] = s.window.hi[i] - s.window.lo[i];
  }
  out.window = Box{std::move(lo), std::move(hi)};
  return out;
}

}  // namespace spectile::lattice
