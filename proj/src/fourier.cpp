#include "spectile/fourier.hpp"

#include "spectile/detail/grid_margin.hpp"
#include "spectile/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace spectile::fourier {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct DDTables {
  std::array<double, 48> inv_fact{};
  std::array<Complex, 48> pow_m2pii{};  // (-2*pi*i)^k
  DDTables() {
    double f = 1.0;
    Complex p{1.0, 0.0};
    for (int k = 0; k < 48; ++k) {
      inv_fact[k] = 1.0 / f;
      pow_m2pii[k] = p;
      f *= static_cast<double>(k + 1);
      p *= Complex{0.0, -kTwoPi};
    }
  }
};

const DDTables& tables() {
  static const DDTables t;
  return t;
}

// Divided difference of exp(-2*pi*i*t) over a tight node cluster, via the
// centered series in complete homogeneous symmetric sums. Accurate whenever
// the node range is <= 1.
Complex dd_series(const double* t, int count) {
  const auto& tb = tables();
  double c = 0;
  for (int i = 0; i < count; ++i) c += t[i];
  c /= count;

  constexpr int kQ = 32;
  double H[kQ + 1] = {1.0};
  for (int i = 0; i < count; ++i) {
    const double w = t[i] - c;
    for (int q = 1; q <= kQ; ++q) H[q] += w * H[q - 1];
  }
  const int k = count - 1;
  Complex acc{0.0, 0.0};
  for (int q = kQ; q >= 0; --q)
    acc += tb.pow_m2pii[k + q] * (H[q] * tb.inv_fact[k + q]);
  return std::polar(1.0, -kTwoPi * c) * acc;
}

// Divided difference of exp(-2*pi*i*t) over sorted nodes. Neville recursion
// over well-separated blocks (denominators > 1, no error amplification),
// centered series inside clusters. The naive recursion alone loses all
// precision exactly at near-coincident phases, which is where the zero sets
// of interest live.
Complex exp_divided_difference(const double* t, int n) {
  if (t[n - 1] - t[0] <= 1.0) return dd_series(t, n);
  Complex D[16];
  for (int j = 0; j < n; ++j) D[j] = std::polar(1.0, -kTwoPi * t[j]);
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j + k < n; ++j) {
      const double gap = t[j + k] - t[j];
      if (gap <= 1.0)
        D[j] = dd_series(t + j, k + 1);
      else
        D[j] = (D[j + 1] - D[j]) / gap;
    }
  }
  return D[0];
}

Complex interval_ft(double xi, double a, double b) {
  const double len = b - a;
  const double z = kTwoPi * 0.5 * xi * len;  // pi * xi * len
  double s;
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    s = 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  } else {
    s = std::sin(z) / z;
  }
  return std::polar(len * s, -kTwoPi * xi * 0.5 * (a + b));
}

double det_double(const std::vector<std::array<double, 3>>& v, int d) {
  // det of rows v[1..d] - v[0]
  if (d == 1) return v[1][0] - v[0][0];
  if (d == 2) {
    const double a = v[1][0] - v[0][0], b = v[1][1] - v[0][1];
    const double c = v[2][0] - v[0][0], e = v[2][1] - v[0][1];
    return a * e - b * c;
  }
  double m[3][3];
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = v[r + 1][c] - v[0][c];
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

size_t GridSpec::count() const {
  size_t n = 1;
  for (size_t e : extent) n *= e;
  return n;
}

Point GridSpec::point_at(const std::vector<size_t>& idx) const {
  Point p(origin.size());
  for (size_t i = 0; i < origin.size(); ++i)
    p[i] = origin[i] + Rational(static_cast<long long>(idx[i])) * spacing[i];
  return p;
}

std::vector<size_t> GridSpec::unflatten(size_t flat) const {
  std::vector<size_t> idx(extent.size());
  for (size_t i = extent.size(); i-- > 0;) {
    idx[i] = flat % extent[i];
    flat /= extent[i];
  }
  return idx;
}

Box GridSpec::bounds() const {
  Point lo = origin, hi = origin;
  for (size_t i = 0; i < origin.size(); ++i)
    hi[i] += Rational(static_cast<long long>(extent[i]) - 1) * spacing[i];
  return Box{std::move(lo), std::move(hi)};
}

Complex GridFunction::sample(const Point& x) const {
  const int d = grid.dim();
  std::vector<size_t> base(d);
  std::vector<double> frac(d, 0.0);
  bool exact = true;
  for (int i = 0; i < d; ++i) {
    const Rational t = (x[i] - grid.origin[i]) / grid.spacing[i];
    if (t < 0 || t > Rational(static_cast<long long>(grid.extent[i]) - 1))
      return Complex{0.0, 0.0};
    const Int fl = floor_rational(t);
    base[i] = fl.convert_to<size_t>();
    const Rational rem = t - Rational(fl);
    if (rem != 0) {
      exact = false;
      frac[i] = to_double(rem);
    }
  }
  auto flat_of = [&](const std::vector<size_t>& idx) {
    size_t f = 0;
    for (int i = 0; i < d; ++i) f = f * grid.extent[i] + idx[i];
    return f;
  };
  if (exact) return values[flat_of(base)];
  Complex acc{0.0, 0.0};
  for (int mask = 0; mask < (1 << d); ++mask) {
    double w = 1.0;
    std::vector<size_t> idx = base;
    for (int i = 0; i < d; ++i) {
      if ((mask >> i) & 1) {
        idx[i] += 1;
        w *= frac[i];
      } else {
        w *= 1.0 - frac[i];
      }
    }
    if (w != 0.0) acc += w * values[flat_of(idx)];
  }
  return acc;
}

Complex ft_indicator(const Polytope& p, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != p.dim())
    throw DimensionMismatch("frequency arity");
  const int d = p.dim();

  if (p.kind() == Polytope::Kind::AxisBox) {
    const Box b = p.bounding_box();
    Complex acc{1.0, 0.0};
    for (int i = 0; i < d; ++i)
      acc *= interval_ft(xi[i], to_double(b.lo[i]), to_double(b.hi[i]));
    return acc;
  }

  if (p.kind() == Polytope::Kind::Simplex && d > 3) {
    double theta[16];
    const auto& idx = p.simplices()[0];
    for (int j = 0; j <= d; ++j) {
      double acc = 0;
      const Point& v = p.vertices()[idx[j]];
      for (int i = 0; i < d; ++i) acc += xi[i] * to_double(v[i]);
      theta[j] = acc;
    }
    std::sort(theta, theta + d + 1);
    double fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    const double absdet = to_double(p.volume()) * fact;
    return absdet * exp_divided_difference(theta, d + 1) / tables().pow_m2pii[d];
  }

  Complex acc{0.0, 0.0};
  std::vector<std::array<double, 3>> v(static_cast<size_t>(d) + 1);
  double theta[8];
  for (const auto& s : p.simplices()) {
    for (int j = 0; j <= d; ++j) {
      const Point& pt = p.vertices()[s[j]];
      double th = 0;
      for (int i = 0; i < d; ++i) {
        v[j][i] = to_double(pt[i]);
        th += xi[i] * v[j][i];
      }
      theta[j] = th;
    }
    const double absdet = std::abs(det_double(v, d));
    if (absdet == 0.0) continue;
    std::sort(theta, theta + d + 1);
    acc += absdet * exp_divided_difference(theta, d + 1);
  }
  return acc / tables().pow_m2pii[d];
}

Rational autocorrelation(const Polytope& h, const Point& x) {
  if (static_cast<int>(x.size()) != h.dim()) throw DimensionMismatch("point arity");
  const Box b = h.bounding_box();
  for (int i = 0; i < h.dim(); ++i) {
    // Empty overlap when the shifted box misses the box.
    if (b.lo[i] + x[i] >= b.hi[i] || b.hi[i] + x[i] <= b.lo[i]) return Rational(0);
  }
  return geometry::overlap_volume_translated(h, x);
}

double ft_autocorrelation(const Polytope& h, std::span<const double> xi) {
  return std::norm(ft_indicator(h, xi));
}

bool zero_test(const Polytope& p, std::span<const double> xi, double tau) {
  if (tau <= 0) throw Error("zero_test tolerance must be positive");
  return std::abs(ft_indicator(p, xi)) <= tau * to_double(p.volume());
}

namespace {

using detail::IntMargin;

std::pair<Rational, Point> ring_area_centroid(const std::vector<Point>& ring) {
  Rational area(0);
  Point cen(2, Rational(0));
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Rational cr = a[0] * b[1] - b[0] * a[1];
    area += cr;
    cen[0] += (a[0] + b[0]) * cr;
    cen[1] += (a[1] + b[1]) * cr;
  }
  area /= 2;
  if (area != 0) {
    cen[0] /= 6 * area;
    cen[1] /= 6 * area;
  }
  return {area, cen};
}

}  // namespace

Complex dft_oracle(const Polytope& p, std::span<const double> xi, const Rational& h,
                   DftMode mode) {
  if (static_cast<int>(xi.size()) != p.dim())
    throw DimensionMismatch("frequency arity");
  if (h <= 0) throw GridTooCoarse("spacing must be positive");
  const int d = p.dim();
  if (d > 3) throw UnsupportedDimension("dft_oracle supports d <= 3");
  if (mode == DftMode::Clipped && d != 2)
    throw UnsupportedDimension("clipped rasterization is d == 2 only");

  const Box bb = p.bounding_box();
  std::array<size_t, 3> n{1, 1, 1};
  for (int i = 0; i < d; ++i) {
    const Rational span = bb.hi[i] - bb.lo[i];
    const Int cells = ceil_rational(span / h);
    if (cells < 2) throw GridTooCoarse("need at least 2 cells per axis");
    n[static_cast<size_t>(i)] = cells.convert_to<size_t>();
  }

  const double hd = to_double(h);
  std::array<double, 3> lo_d{};
  for (int i = 0; i < d; ++i) lo_d[static_cast<size_t>(i)] = to_double(bb.lo[i]);

  // Cell-center margins (midpoint) resp. node margins (clipped weights).
  Point center_base = bb.lo;
  for (int i = 0; i < d; ++i) center_base[i] += h / 2;
  std::vector<IntMargin> center_margins, node_margins;
  bool all_ok = true;
  for (const auto& f : p.facets()) {
    center_margins.push_back(detail::make_grid_margin(f, center_base, h, d, n));
    node_margins.push_back(detail::make_grid_margin(f, bb.lo, h, d, n));
    all_ok = all_ok && center_margins.back().ok && node_margins.back().ok;
  }

  const size_t rows = (d == 1) ? 1 : (d == 2 ? n[1] : n[1] * n[2]);
  std::vector<Complex> row_sums(rows, Complex{0.0, 0.0});
  const Complex rot0 = std::polar(1.0, -kTwoPi * xi[0] * hd);

  auto run_row = [&](size_t row) {
    const size_t k1 = (d >= 2) ? row % n[1] : 0;
    const size_t k2 = (d == 3) ? row / n[1] : 0;
    Complex acc{0.0, 0.0};

    if (mode == DftMode::Midpoint) {
      // Phase walks incrementally along the row; restarted per row so the
      // multiplicative drift stays below ~n*eps.
      double phase = xi[0] * (lo_d[0] + 0.5 * hd);
      if (d >= 2) phase += xi[1] * (lo_d[1] + (0.5 + static_cast<double>(k1)) * hd);
      if (d == 3) phase += xi[2] * (lo_d[2] + (0.5 + static_cast<double>(k2)) * hd);
      Complex e = std::polar(1.0, -kTwoPi * phase);
      for (size_t k0 = 0; k0 < n[0]; ++k0, e *= rot0) {
        bool inside = true;
        if (all_ok) {
          for (const auto& m : center_margins) {
            const int64_t v = m.r0 - static_cast<int64_t>(k0) * m.s[0] -
                              static_cast<int64_t>(k1) * m.s[1] -
                              static_cast<int64_t>(k2) * m.s[2];
            if (v <= 0) {
              inside = false;
              break;
            }
          }
        } else {
          Point x = center_base;
          x[0] += Rational(static_cast<long long>(k0)) * h;
          if (d >= 2) x[1] += Rational(static_cast<long long>(k1)) * h;
          if (d == 3) x[2] += Rational(static_cast<long long>(k2)) * h;
          inside = p.contains(x, true);
        }
        if (inside) acc += e;
      }
      row_sums[row] = acc;
      return;
    }

    // Clipped mode, d == 2: exact overlap weight and overlap centroid.
    const size_t fcount = p.facets().size();
    for (size_t k0 = 0; k0 < n[0]; ++k0) {
      int state = 2;  // 2 = full, 1 = partial, 0 = empty
      for (size_t fi = 0; fi < fcount && state > 0; ++fi) {
        const auto& m = node_margins[fi];
        const int64_t m00 = m.r0 - static_cast<int64_t>(k0) * m.s[0] -
                            static_cast<int64_t>(k1) * m.s[1];
        const int64_t m10 = m00 - m.s[0];
        const int64_t m01 = m00 - m.s[1];
        const int64_t m11 = m10 - m.s[1];
        if (m00 > 0 && m10 > 0 && m01 > 0 && m11 > 0) continue;  // facet passes
        if (m00 < 0 && m10 < 0 && m01 < 0 && m11 < 0) {
          state = 0;  // cell fully outside this halfplane
        } else {
          state = 1;
        }
      }
      if (state == 0) continue;
      if (state == 2) {
        const double cx = lo_d[0] + (0.5 + static_cast<double>(k0)) * hd;
        const double cy = lo_d[1] + (0.5 + static_cast<double>(k1)) * hd;
        acc += (hd * hd) * std::polar(1.0, -kTwoPi * (xi[0] * cx + xi[1] * cy));
        continue;
      }
      const Rational x0 = bb.lo[0] + Rational(static_cast<long long>(k0)) * h;
      const Rational y0 = bb.lo[1] + Rational(static_cast<long long>(k1)) * h;
      std::vector<Point> cell = {
          {x0, y0}, {x0 + h, y0}, {x0 + h, y0 + h}, {x0, y0 + h}};
      for (const auto& f : p.facets()) {
        cell = geometry::clip_ring(cell, f);
        if (cell.size() < 3) break;
      }
      if (cell.size() < 3) continue;
      auto [area, cen] = ring_area_centroid(cell);
      if (area <= 0) continue;
      const double w = to_double(area);
      const double cx = to_double(cen[0]);
      const double cy = to_double(cen[1]);
      acc += w * std::polar(1.0, -kTwoPi * (xi[0] * cx + xi[1] * cy));
    }
    row_sums[row] = acc;
  };

  parallel_chunks(rows, 16, [&](size_t b, size_t e) {
    for (size_t r = b; r < e; ++r) run_row(r);
  });

  Complex total{0.0, 0.0};
  for (const Complex& c : row_sums) total += c;
  if (mode == DftMode::Midpoint) {
    double cell = 1.0;
    for (int i = 0; i < d; ++i) cell *= hd;
    total *= cell;
  }
  return total;
}

GridFunction sample_autocorrelation(const Polytope& h, const Rational& h_spacing) {
  if (h_spacing <= 0) throw GridTooCoarse("spacing must be positive");
  const Polytope k = geometry::difference_body(h);
  const Box bb = k.bounding_box();
  const int d = h.dim();

  GridSpec spec;
  spec.origin = bb.lo;
  spec.spacing.assign(d, h_spacing);
  for (int i = 0; i < d; ++i) {
    const Int steps = ceil_rational((bb.hi[i] - bb.lo[i]) / h_spacing);
    spec.extent.push_back(steps.convert_to<size_t>() + 1);
  }

  GridFunction gf;
  gf.grid = spec;
  gf.is_real = true;
  gf.values.assign(spec.count(), Complex{0.0, 0.0});
  parallel_chunks(gf.values.size(), 256, [&](size_t b, size_t e) {
    for (size_t f = b; f < e; ++f) {
      const Point x = spec.point_at(spec.unflatten(f));
      gf.values[f] = Complex{to_double(autocorrelation(h, x)), 0.0};
    }
  });
  return gf;
}

}  // namespace spectile::fourier
