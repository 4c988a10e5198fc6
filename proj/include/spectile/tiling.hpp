#pragma once

#include "spectile/fourier.hpp"
#include "spectile/lattice.hpp"

#include <functional>

namespace spectile::tiling {

using fourier::GridFunction;
using geometry::Polytope;
using lattice::Lattice;
using lattice::PointSet;

struct TilingReport {
  double level_estimate = 0;
  double max_deviation = 0;
  Box core_window;
  size_t translate_count = 0;
  double margin = 0;  // window slack beyond the core, min over sides
  size_t grid_points = 0;
  size_t excluded_points = 0;  // indicator path: cells near translate boundaries
};

// Sums f(x - lambda) over the translates on a grid of the core box with
// spacing h. For indicator f the membership decisions are exact; grid points
// within h of any translate boundary are excluded from the statistics (the
// sum is only required to be constant almost everywhere).
TilingReport verify_tiling(const Polytope& body, const PointSet& s, const Box& core,
                           const Rational& h);
TilingReport verify_tiling(const GridFunction& f, const PointSet& s, const Box& core,
                           const Rational& h);

double tiling_level(double f_integral, const Lattice& l);
Rational tiling_level_exact(const Rational& f_integral, const Lattice& l);

// Checks that every nonzero dual-lattice point within the radius lies in the
// zero set of the body's transform. A tiling by the lattice forces this.
struct NecessityReport {
  bool holds = true;
  std::optional<Point> witness;
  double witness_value = 0;  // |ft| at the witness
  double radius = 0;
  double tau = 0;
  size_t points_checked = 0;
};
NecessityReport support_condition_necessary(const Polytope& body, const Lattice& l,
                                            double tau,
                                            std::optional<double> radius = {});

// Checks the sufficiency hypothesis in lattice form: every nonzero dual point
// within the radius carries a delta-ball on which the given transform
// vanishes (probed at the center, 2d axis points, and 2^d diagonal points).
// When it holds, the implied tiling level is fhat(0) * dens(L).
struct SufficiencyReport {
  bool holds = false;
  double level = 0;
  std::optional<Point> witness_dual;
  std::optional<Point> witness_probe;
  double radius = 0;
  Rational delta;
  size_t points_checked = 0;
};
SufficiencyReport support_condition_sufficient(
    const std::function<bool(const Point&)>& fhat_is_zero, double fhat_at_zero,
    const Lattice& l, const Rational& delta, double radius);

// Translate window that covers every lattice point whose copy of the support
// box can reach the core.
Box required_translate_window(const Box& support_bbox, const Box& core);

}  // namespace spectile::tiling
