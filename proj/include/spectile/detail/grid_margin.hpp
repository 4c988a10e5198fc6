#pragma once

#include "spectile/geometry.hpp"

#include <array>
#include <cstdint>

namespace spectile::detail {

// Exact halfspace margins over the points base + k .* h: the sign of
// margin(k) = offset - <normal, base + k*h> is evaluated in int64 after
// scaling by the common positive denominator. `ok` is false when the scaled
// magnitudes could overflow; callers then fall back to rational evaluation.
struct IntMargin {
  int64_t r0 = 0;
  std::array<int64_t, 3> s{};
  double denom = 1.0;        // the scale factor applied to the margins
  double normal_len = 1.0;   // euclidean length of the facet normal
  bool ok = false;

  int64_t at(int64_t k0, int64_t k1 = 0, int64_t k2 = 0) const {
    return r0 - k0 * s[0] - k1 * s[1] - k2 * s[2];
  }
};

IntMargin make_grid_margin(const geometry::Halfspace& f, const Point& base,
                           const Rational& h, int dim,
                           const std::array<size_t, 3>& extent);

}  // namespace spectile::detail
