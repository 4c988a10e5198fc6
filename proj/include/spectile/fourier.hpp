#pragma once

#include "spectile/geometry.hpp"

namespace spectile::fourier {

using geometry::Polytope;

// Regular sample grid: point(k) = origin + k .* spacing, k in [0, extent).
struct GridSpec {
  Point origin;
  std::vector<Rational> spacing;
  std::vector<size_t> extent;

  int dim() const { return static_cast<int>(origin.size()); }
  size_t count() const;
  Point point_at(const std::vector<size_t>& idx) const;
  std::vector<size_t> unflatten(size_t flat) const;
  Box bounds() const;
};

struct GridFunction {
  GridSpec grid;
  std::vector<Complex> values;
  bool is_real = true;

  // Exact lookup when x lands on a sample, multilinear inside the grid hull,
  // zero outside.
  Complex sample(const Point& x) const;
};

// Forward transform of the indicator, kernel exp(-2*pi*i*<xi, x>):
// integral of the kernel over P; ft_indicator(P, 0) == vol(P).
Complex ft_indicator(const Polytope& p, std::span<const double> xi);

// vol(H cap (H + x)): exact, zero outside H - H.
Rational autocorrelation(const Polytope& h, const Point& x);

// |ft_indicator(H, xi)|^2, the transform of the autocorrelation.
double ft_autocorrelation(const Polytope& h, std::span<const double> xi);

enum class DftMode {
  Midpoint,  // count cells by center; O(h) worst case, O(h^2) on convex bodies
  Clipped,   // exact cell/polytope overlap weights, d == 2 only
};

// Independent Riemann-sum oracle for ft_indicator over a rasterized body.
Complex dft_oracle(const Polytope& p, std::span<const double> xi, const Rational& h,
                   DftMode mode = DftMode::Midpoint);

// |ft_indicator(P, xi)| <= tau * vol(P)?
bool zero_test(const Polytope& p, std::span<const double> xi, double tau);

// Samples a real exact-valued function of rational points onto a grid.
GridFunction sample_autocorrelation(const Polytope& h, const Rational& h_spacing);

}  // namespace spectile::fourier
