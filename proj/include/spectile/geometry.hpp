#pragma once

#include "spectile/core.hpp"

namespace spectile::geometry {

// Closed halfspace <n, x> <= c with a primitive integer normal. Orientation
// is outward for polytope facets.
struct Halfspace {
  Point normal;
  Rational offset;

  bool operator==(const Halfspace& o) const = default;
};

struct SymmetryReport {
  bool is_symmetric = false;
  std::optional<Point> center;  // present iff symmetric
};

// Convex body given by its extreme points, exact rational coordinates.
// The stored vertex list is canonical: reduced to extreme points and sorted
// lexicographically. Full hull/intersection machinery covers d in {1,2,3};
// axis boxes and simplices work in any dimension through fast paths.
class Polytope {
 public:
  enum class Kind { General, AxisBox, Simplex };

  static Polytope hull(int dim, std::vector<Point> points);
  static Polytope box(Point lo, Point hi);
  static Polytope simplex(std::vector<Point> vertices);
  // Unit cube (-1/2, 1/2)^d.
  static Polytope unit_cube(int dim);

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  // Fan triangulation (index tuples of size dim+1 into vertices()).
  const std::vector<std::vector<int>>& simplices() const;
  // CCW vertex cycle, d == 2 only, starting at vertex index 0.
  const std::vector<int>& ring() const;

  const Rational& volume() const { return volume_; }
  const Point& centroid() const { return centroid_; }
  Box bounding_box() const;
  bool contains(const Point& p, bool strictly = false) const;

  bool operator==(const Polytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_;
  }

 private:
  Polytope() = default;
  static Polytope build_reduced(int dim, std::vector<Point> extreme_points);
  friend Polytope translate(const Polytope& p, const Point& t);

  int dim_ = 0;
  Kind kind_ = Kind::General;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> simplices_;
  std::vector<int> ring_;
  Rational volume_;
  Point centroid_;
};

// Spec'd operations. convex_hull is Polytope::hull; the rest are free
// functions so call sites read like the math.
Rational volume(const Polytope& p);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const Polytope& p, const Point& translate_by);  // P + {t}
Polytope translate(const Polytope& p, const Point& t);
Polytope reflect(const Polytope& p, const Point& center);
Polytope scale(const Polytope& p, const Rational& rho, const Point& center);
SymmetryReport symmetry_report(const Polytope& p);

// Full-dimensional intersection; empty marker (nullopt) when the interiors
// are disjoint (zero-volume contact counts as empty).
std::optional<Polytope> intersection(const Polytope& p, const Polytope& q);

// vol(P cap Q) without building the reduced hull. Zero when lower-dimensional.
Rational intersection_volume(const Polytope& p, const Polytope& q);

// vol(H cap (H + x)); the autocorrelation kernel, kept allocation-light.
Rational overlap_volume_translated(const Polytope& h, const Point& x);

// One Sutherland-Hodgman step: clip a CCW ring by a halfspace.
std::vector<Point> clip_ring(const std::vector<Point>& ring, const Halfspace& h);

// Difference body helper K = P - P (symmetric about 0).
Polytope difference_body(const Polytope& p);

}  // namespace spectile::geometry
