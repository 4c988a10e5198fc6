#pragma once

// Fixture zoo: hand-labeled symmetric and non-symmetric bodies in d = 2, 3.
// Labels are by construction, independent of the library's symmetry test.

#include "spectile/geometry.hpp"

namespace fixtures {

using spectile::Point;
using spectile::Rational;
using spectile::geometry::Polytope;

inline Point pt(std::initializer_list<Rational> cs) { return Point(cs); }

inline Polytope triangle_half() {  // area 1/2
  return Polytope::hull(2, {{Rational(0), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(0), Rational(1)}});
}

inline Polytope triangle_unit_area() {  // (0,0),(2,0),(0,1)
  return Polytope::hull(2, {{Rational(0), Rational(0)},
                            {Rational(2), Rational(0)},
                            {Rational(0), Rational(1)}});
}

inline Polytope unit_square_origin() {  // (0,1)^2
  return Polytope::box({Rational(0), Rational(0)}, {Rational(1), Rational(1)});
}

inline Polytope hexagon_t_minus_t() {  // (T - T) for the half-area triangle
  return Polytope::hull(2, {{Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(-1), Rational(0)},
                            {Rational(0), Rational(-1)},
                            {Rational(1), Rational(-1)},
                            {Rational(-1), Rational(1)}});
}

inline Polytope tetrahedron_unit() {
  return Polytope::hull(3, {{Rational(0), Rational(0), Rational(0)},
                            {Rational(1), Rational(0), Rational(0)},
                            {Rational(0), Rational(1), Rational(0)},
                            {Rational(0), Rational(0), Rational(1)}});
}

inline Polytope octahedron() {
  return Polytope::hull(3, {{Rational(1), Rational(0), Rational(0)},
                            {Rational(-1), Rational(0), Rational(0)},
                            {Rational(0), Rational(1), Rational(0)},
                            {Rational(0), Rational(-1), Rational(0)},
                            {Rational(0), Rational(0), Rational(1)},
                            {Rational(0), Rational(0), Rational(-1)}});
}

inline std::vector<Polytope> symmetric_zoo() {
  std::vector<Polytope> zoo;
  zoo.push_back(Polytope::unit_cube(2));
  zoo.push_back(unit_square_origin());
  zoo.push_back(Polytope::box({Rational(0), Rational(0)},
                              {Rational(2), Rational(1, 2)}));
  // Parallelogram.
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(3), Rational(1)},
                                   {Rational(1), Rational(1)}}));
  zoo.push_back(hexagon_t_minus_t());
  // Octagon.
  zoo.push_back(Polytope::hull(2, {{Rational(1), Rational(1, 2)},
                                   {Rational(1), Rational(-1, 2)},
                                   {Rational(-1), Rational(1, 2)},
                                   {Rational(-1), Rational(-1, 2)},
                                   {Rational(1, 2), Rational(1)},
                                   {Rational(-1, 2), Rational(1)},
                                   {Rational(1, 2), Rational(-1)},
                                   {Rational(-1, 2), Rational(-1)}}));
  // Rhombus.
  zoo.push_back(Polytope::hull(2, {{Rational(2), Rational(0)},
                                   {Rational(-2), Rational(0)},
                                   {Rational(0), Rational(1)},
                                   {Rational(0), Rational(-1)}}));
  // Centrally symmetric hexagon, off-center.
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(3), Rational(1)},
                                   {Rational(3), Rational(2)},
                                   {Rational(1), Rational(2)},
                                   {Rational(0), Rational(1)}}));
  zoo.push_back(Polytope::unit_cube(3));
  zoo.push_back(Polytope::box({Rational(0), Rational(0), Rational(0)},
                              {Rational(1), Rational(2), Rational(3)}));
  zoo.push_back(octahedron());
  // Hexagonal prism.
  {
    const Polytope hex = hexagon_t_minus_t();
    std::vector<Point> pts;
    for (const auto& v : hex.vertices()) {
      pts.push_back({v[0], v[1], Rational(-1)});
      pts.push_back({v[0], v[1], Rational(1)});
    }
    zoo.push_back(Polytope::hull(3, std::move(pts)));
  }
  return zoo;
}

inline std::vector<Polytope> nonsymmetric_zoo() {
  std::vector<Polytope> zoo;
  zoo.push_back(triangle_half());
  zoo.push_back(triangle_unit_area());
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(3), Rational(0)},
                                   {Rational(1), Rational(2)}}));
  // Trapezoid.
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(3), Rational(0)},
                                   {Rational(2), Rational(1)},
                                   {Rational(0), Rational(1)}}));
  // Pentagon.
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(3), Rational(1)},
                                   {Rational(1), Rational(2)},
                                   {Rational(0), Rational(1)}}));
  // House.
  zoo.push_back(Polytope::hull(2, {{Rational(0), Rational(0)},
                                   {Rational(2), Rational(0)},
                                   {Rational(2), Rational(1)},
                                   {Rational(1), Rational(2)},
                                   {Rational(0), Rational(1)}}));
  zoo.push_back(tetrahedron_unit());
  zoo.push_back(Polytope::hull(3, {{Rational(0), Rational(0), Rational(0)},
                                   {Rational(4), Rational(0), Rational(0)},
                                   {Rational(0), Rational(4), Rational(0)},
                                   {Rational(0), Rational(0), Rational(3)}}));
  // Square pyramid.
  zoo.push_back(Polytope::hull(3, {{Rational(-1), Rational(-1), Rational(0)},
                                   {Rational(1), Rational(-1), Rational(0)},
                                   {Rational(1), Rational(1), Rational(0)},
                                   {Rational(-1), Rational(1), Rational(0)},
                                   {Rational(0), Rational(0), Rational(2)}}));
  // Triangular prism.
  {
    const Polytope tri = triangle_half();
    std::vector<Point> pts;
    for (const auto& v : tri.vertices()) {
      pts.push_back({v[0], v[1], Rational(0)});
      pts.push_back({v[0], v[1], Rational(1)});
    }
    zoo.push_back(Polytope::hull(3, std::move(pts)));
  }
  // Frustum: side-2 bottom square, side-1 top square.
  zoo.push_back(Polytope::hull(3, {{Rational(0), Rational(0), Rational(0)},
                                   {Rational(2), Rational(0), Rational(0)},
                                   {Rational(0), Rational(2), Rational(0)},
                                   {Rational(2), Rational(2), Rational(0)},
                                   {Rational(1, 2), Rational(1, 2), Rational(1)},
                                   {Rational(3, 2), Rational(1, 2), Rational(1)},
                                   {Rational(1, 2), Rational(3, 2), Rational(1)},
                                   {Rational(3, 2), Rational(3, 2), Rational(1)}}));
  return zoo;
}

}  // namespace fixtures
