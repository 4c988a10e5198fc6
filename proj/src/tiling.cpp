#include "spectile/tiling.hpp"

#include "spectile/detail/grid_margin.hpp"
#include "spectile/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace spectile::tiling {

namespace {

struct CoreGrid {
  Point lo;
  Rational h;
  std::array<size_t, 3> n{1, 1, 1};
  int d = 1;

  size_t count() const { return n[0] * n[1] * n[2]; }
};

CoreGrid make_core_grid(const Box& core, const Rational& h, int d) {
  if (h <= 0) throw GridTooCoarse("spacing must be positive");
  if (core.dim() != d) throw DimensionMismatch("core dimension");
  if (core.empty_interior()) throw Error("core box has empty interior");
  CoreGrid g;
  g.lo = core.lo;
  g.h = h;
  g.d = d;
  for (int i = 0; i < d; ++i) {
    const Int steps = floor_rational((core.hi[i] - core.lo[i]) / h);
    g.n[static_cast<size_t>(i)] = steps.convert_to<size_t>() + 1;
  }
  return g;
}

// Window must contain every translate whose support copy can reach the core.
void check_window(const Box& support, const Box& core, const Box& window) {
  for (int i = 0; i < core.dim(); ++i) {
    const Rational need_lo = core.lo[i] - support.hi[i];
    const Rational need_hi = core.hi[i] - support.lo[i];
    if (window.lo[i] > need_lo || window.hi[i] < need_hi)
      throw InsufficientWindow(
          "translate window does not cover the support-reach of the core");
  }
}

double window_margin(const Box& core, const Box& window) {
  double m = std::numeric_limits<double>::infinity();
  for (int i = 0; i < core.dim(); ++i) {
    m = std::min(m, to_double(core.lo[i] - window.lo[i]));
    m = std::min(m, to_double(window.hi[i] - core.hi[i]));
  }
  return m;
}

TilingReport finish_report(std::vector<double>& sums, std::vector<uint8_t>& excluded,
                           const Box& core, size_t translates, double margin) {
  size_t used = 0, excl = 0;
  double mean = 0;
  for (size_t k = 0; k < sums.size(); ++k) {
    if (excluded[k]) {
      ++excl;
      continue;
    }
    mean += sums[k];
    ++used;
  }
  if (used == 0) throw Error("every core grid point was excluded");
  mean /= static_cast<double>(used);
  double dev = 0;
  for (size_t k = 0; k < sums.size(); ++k) {
    if (excluded[k]) continue;
    dev = std::max(dev, std::abs(sums[k] - mean));
  }
  TilingReport r;
  r.level_estimate = mean;
  r.max_deviation = dev;
  r.core_window = core;
  r.translate_count = translates;
  r.margin = margin;
  r.grid_points = sums.size();
  r.excluded_points = excl;
  return r;
}

}  // namespace

Box required_translate_window(const Box& support_bbox, const Box& core) {
  const int d = core.dim();
  Point lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = core.lo[i] - support_bbox.hi[i];
    hi[i] = core.hi[i] - support_bbox.lo[i];
  }
  return Box{std::move(lo), std::move(hi)};
}

TilingReport verify_tiling(const Polytope& body, const PointSet& s, const Box& core,
                           const Rational& h) {
  const int d = body.dim();
  if (d > 3) throw UnsupportedDimension("tiling grids support d <= 3");
  if (s.dim != d) throw DimensionMismatch("translate dimension");
  const CoreGrid g = make_core_grid(core, h, d);
  const Box support = body.bounding_box();
  check_window(support, core, s.window);

  std::vector<double> sums(g.count(), 0.0);
  std::vector<uint8_t> excluded(g.count(), 0);
  const double hd = to_double(h);

  // Exclusion band: |signed distance to a facet plane| < h.
  for (const auto& lam : s.points) {
    // Index range of grid points that can interact with body + lam,
    // padded by one cell for the exclusion band.
    std::array<int64_t, 3> klo{0, 0, 0}, khi{0, 0, 0};
    bool any = true;
    for (int i = 0; i < d; ++i) {
      const Rational lo_i = support.lo[i] + lam[i] - g.lo[i];
      const Rational hi_i = support.hi[i] + lam[i] - g.lo[i];
      int64_t a = ceil_rational(lo_i / h).convert_to<int64_t>() - 1;
      int64_t b = floor_rational(hi_i / h).convert_to<int64_t>() + 1;
      a = std::max<int64_t>(a, 0);
      b = std::min<int64_t>(b, static_cast<int64_t>(g.n[static_cast<size_t>(i)]) - 1);
      if (a > b) any = false;
      klo[static_cast<size_t>(i)] = a;
      khi[static_cast<size_t>(i)] = b;
    }
    if (!any) continue;

    Point base = g.lo;
    for (int i = 0; i < d; ++i) base[i] -= lam[i];
    std::vector<detail::IntMargin> margins;
    std::vector<double> near_threshold;
    bool ok = true;
    for (const auto& f : body.facets()) {
      margins.push_back(detail::make_grid_margin(f, base, h, d, g.n));
      ok = ok && margins.back().ok;
      // |int margin| < h * denom * |normal|  <=>  distance < h
      near_threshold.push_back(hd * margins.back().denom * margins.back().normal_len);
    }

    for (int64_t k2 = klo[2]; k2 <= khi[2]; ++k2)
      for (int64_t k1 = klo[1]; k1 <= khi[1]; ++k1)
        for (int64_t k0 = klo[0]; k0 <= khi[0]; ++k0) {
          const size_t flat =
              (static_cast<size_t>(k2) * g.n[1] + static_cast<size_t>(k1)) * g.n[0] +
              static_cast<size_t>(k0);
          bool inside = true;
          bool near = false;
          if (ok) {
            for (size_t fi = 0; fi < margins.size(); ++fi) {
              const int64_t m = margins[fi].at(k0, k1, k2);
              if (m <= 0) inside = false;
              if (std::abs(static_cast<double>(m)) < near_threshold[fi]) near = true;
              if (!inside && !near && static_cast<double>(-m) >= near_threshold[fi])
                break;
            }
          } else {
            Point x = base;
            x[0] += Rational(static_cast<long long>(k0)) * h;
            if (d >= 2) x[1] += Rational(static_cast<long long>(k1)) * h;
            if (d == 3) x[2] += Rational(static_cast<long long>(k2)) * h;
            inside = body.contains(x, true);
            near = false;
            for (const auto& f : body.facets()) {
              const double dist = to_double(f.offset - dot(f.normal, x));
              double len = 0;
              for (int i = 0; i < d; ++i) {
                const double c = to_double(f.normal[i]);
                len += c * c;
              }
              if (std::abs(dist) / std::sqrt(len) < hd) near = true;
            }
          }
          if (near) excluded[flat] = 1;
          if (inside) sums[flat] += 1.0;
        }
  }

  return finish_report(sums, excluded, core, s.points.size(),
                       window_margin(core, s.window));
}

TilingReport verify_tiling(const GridFunction& f, const PointSet& s, const Box& core,
                           const Rational& h) {
  const int d = f.grid.dim();
  if (s.dim != d) throw DimensionMismatch("translate dimension");
  const CoreGrid g = make_core_grid(core, h, d);
  check_window(f.grid.bounds(), core, s.window);

  std::vector<double> sums(g.count(), 0.0);
  std::vector<uint8_t> excluded(g.count(), 0);

  parallel_chunks(g.count(), 256, [&](size_t b, size_t e) {
    for (size_t flat = b; flat < e; ++flat) {
      std::array<int64_t, 3> k{0, 0, 0};
      size_t rest = flat;
      k[0] = static_cast<int64_t>(rest % g.n[0]);
      rest /= g.n[0];
      k[1] = static_cast<int64_t>(rest % g.n[1]);
      k[2] = static_cast<int64_t>(rest / g.n[1]);
      Point x = g.lo;
      for (int i = 0; i < d; ++i)
        x[i] += Rational(static_cast<long long>(k[static_cast<size_t>(i)])) * h;
      double acc = 0;
      for (const auto& lam : s.points) acc += f.sample(sub(x, lam)).real();
      sums[flat] = acc;
    }
  });

  return finish_report(sums, excluded, core, s.points.size(),
                       window_margin(core, s.window));
}

double tiling_level(double f_integral, const Lattice& l) {
  return f_integral * to_double(l.density());
}

Rational tiling_level_exact(const Rational& f_integral, const Lattice& l) {
  return f_integral * l.density();
}

namespace {

double longest_basis_column(const Lattice& l) {
  double best = 0;
  for (int j = 0; j < l.dim(); ++j) {
    double acc = 0;
    for (int i = 0; i < l.dim(); ++i) {
      const double c = to_double(l.basis().at(i, j));
      acc += c * c;
    }
    best = std::max(best, std::sqrt(acc));
  }
  return best;
}

PointSet dual_points_in_ball(const Lattice& dual, double radius, int d) {
  Point lo(d), hi(d);
  const Rational r = rational_from_double(radius);
  for (int i = 0; i < d; ++i) {
    lo[i] = -r;
    hi[i] = r;
  }
  PointSet pts = dual.enumerate_window(Box{std::move(lo), std::move(hi)});
  PointSet out;
  out.dim = d;
  out.window = pts.window;
  const double r2 = radius * radius;
  for (auto& p : pts.points) {
    double acc = 0;
    for (int i = 0; i < d; ++i) {
      const double c = to_double(p[i]);
      acc += c * c;
    }
    bool zero = true;
    for (int i = 0; i < d; ++i)
      if (p[i] != 0) zero = false;
    if (!zero && acc <= r2) out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace

NecessityReport support_condition_necessary(const Polytope& body, const Lattice& l,
                                            double tau,
                                            std::optional<double> radius) {
  if (body.dim() != l.dim()) throw DimensionMismatch("body/lattice dimension");
  const Lattice dual = l.dual();
  NecessityReport r;
  r.tau = tau;
  r.radius = radius.value_or(8.0 * longest_basis_column(dual));
  const PointSet duals = dual_points_in_ball(dual, r.radius, body.dim());
  for (const auto& xi : duals.points) {
    ++r.points_checked;
    const auto xd = to_doubles(xi);
    if (!fourier::zero_test(body, xd, tau)) {
      r.holds = false;
      r.witness = xi;
      r.witness_value = std::abs(fourier::ft_indicator(body, xd));
      return r;
    }
  }
  return r;
}

SufficiencyReport support_condition_sufficient(
    const std::function<bool(const Point&)>& fhat_is_zero, double fhat_at_zero,
    const Lattice& l, const Rational& delta, double radius) {
  if (delta <= 0) throw Error("delta must be positive");
  const int d = l.dim();
  SufficiencyReport r;
  r.radius = radius;
  r.delta = delta;
  const PointSet duals = dual_points_in_ball(l.dual(), radius, d);

  std::vector<Point> offsets;
  offsets.push_back(Point(d, Rational(0)));
  for (int i = 0; i < d; ++i) {
    Point e(d, Rational(0));
    e[i] = delta / 2;
    offsets.push_back(e);
    e[i] = -delta / 2;
    offsets.push_back(e);
  }
  const Rational diag_step = delta / (2 * d);
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point diag(d);
    for (int i = 0; i < d; ++i)
      diag[i] = ((mask >> i) & 1) ? diag_step : Rational(-diag_step);
    offsets.push_back(std::move(diag));
  }

  for (const auto& xi : duals.points) {
    ++r.points_checked;
    for (const auto& off : offsets) {
      const Point probe = add(xi, off);
      if (!fhat_is_zero(probe)) {
        r.holds = false;
        r.witness_dual = xi;
        r.witness_probe = probe;
        return r;
      }
    }
  }
  r.holds = true;
  r.level = fhat_at_zero * to_double(l.density());
  return r;
}

}  // namespace spectile::tiling
