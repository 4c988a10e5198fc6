#include "spectile/certify.hpp"

#include "spectile/fourier.hpp"

#include <cmath>

namespace spectile::certify {

bool can_normalize_exactly(const Polytope& p) {
  return exact_nth_root(Rational(1) / p.volume(), static_cast<unsigned>(p.dim()))
      .has_value();
}

Polytope normalize_volume(const Polytope& p) {
  const auto root =
      exact_nth_root(Rational(1) / p.volume(), static_cast<unsigned>(p.dim()));
  if (!root) return p;
  if (*root == 1) return p;
  return geometry::scale(p, *root, p.centroid());
}

std::pair<Rational, Rational> brunn_minkowski_gap(const Polytope& p) {
  const Polytope k = geometry::difference_body(p);
  const Point origin(p.dim(), Rational(0));
  const Polytope h = geometry::scale(k, Rational(1, 2), origin);
  return {h.volume(), h.volume() - p.volume()};
}

NonSpectralityCertificate certify_nonspectral(const Polytope& p) {
  const SymmetryReport sym = geometry::symmetry_report(p);
  if (sym.is_symmetric)
    throw SymmetricBody(
        "body is centrally symmetric; the volume-gap certificate does not "
        "apply");

  NonSpectralityCertificate c(normalize_volume(p));
  c.dim = p.dim();
  c.vol_body = c.body.volume();
  c.normalized_exactly = c.vol_body == 1;
  c.symmetry = sym;

  const auto [vol_h_raw, gap_raw] = brunn_minkowski_gap(c.body);
  (void)gap_raw;
  // Scale-invariant ratio; equals the normalized vol_H even when the exact
  // d-th root does not exist.
  c.vol_H = vol_h_raw / c.vol_body;
  if (c.vol_H <= 1)
    throw Error("volume gap vanished for a non-symmetric body");  // unreachable
  c.bm_gap = c.vol_H - 1;
  c.rho_pow_d = (1 + c.vol_H) / (2 * c.vol_H);
  c.level_from_tiling = c.vol_H;
  c.level_from_value_at_zero = c.rho_pow_d * c.vol_H * c.vol_H;
  c.contradiction_margin = c.level_from_value_at_zero - c.level_from_tiling;
  return c;
}

ConsistencyResult certificate_consistency_check(const NonSpectralityCertificate& c) {
  auto fail = [](const std::string& field) {
    return ConsistencyResult{false, field};
  };

  if (c.dim != c.body.dim()) return fail("dim");
  if (c.vol_body != c.body.volume()) return fail("vol_body");
  if (c.normalized_exactly && c.vol_body != 1) return fail("normalized_exactly");
  if (!(c.vol_H > 1)) return fail("vol_H");
  if (c.bm_gap != c.vol_H - 1) return fail("bm_gap");
  if (!(c.rho_pow_d > Rational(1) / c.vol_H && c.rho_pow_d < 1))
    return fail("rho_pow_d");

  if (geometry::symmetry_report(c.body).is_symmetric) return fail("symmetry");
  if (c.symmetry.is_symmetric) return fail("symmetry");

  const Point origin(c.dim, Rational(0));
  const Polytope k = geometry::difference_body(c.body);
  const Polytope h = geometry::scale(k, Rational(1, 2), origin);
  if (h.volume() != c.vol_H * c.vol_body) return fail("vol_H");

  // Tiling-route level: the autocorrelation of H at zero is vol(H).
  const Rational g_zero = fourier::autocorrelation(h, origin);
  if (g_zero != h.volume()) return fail("autocorrelation_at_zero");
  if (c.level_from_tiling != c.vol_H) return fail("level_from_tiling");

  // Value-at-zero route: the integral of the shrunk autocorrelation.
  if (c.level_from_value_at_zero != c.rho_pow_d * c.vol_H * c.vol_H)
    return fail("level_from_value_at_zero");
  if (c.contradiction_margin !=
      c.level_from_value_at_zero - c.level_from_tiling)
    return fail("contradiction_margin");
  if (!(c.contradiction_margin > 0)) return fail("contradiction_margin");

  // Transform route, floating: |ft(H, 0)|^2 must match vol(H)^2.
  const std::vector<double> zero_freq(static_cast<size_t>(c.dim), 0.0);
  const double ft0 = fourier::ft_autocorrelation(h, zero_freq);
  const double vol_h_sq = to_double(h.volume() * h.volume());
  if (std::abs(ft0 - vol_h_sq) > 1e-9 * std::max(1.0, vol_h_sq))
    return fail("transform_at_zero");

  // Support containment: rho * K strictly inside K. For a vertex v and facet
  // <n, x> <= cc with <n, v> > 0 this is rho^d * <n,v>^d < cc^d, all rational.
  const unsigned d = static_cast<unsigned>(c.dim);
  for (const auto& v : k.vertices()) {
    for (const auto& f : k.facets()) {
      const Rational nv = dot(f.normal, v);
      if (nv <= 0) continue;
      if (c.rho_pow_d * pow_rational(nv, d) >= pow_rational(f.offset, d))
        return fail("support_containment");
    }
  }
  return ConsistencyResult{};
}

}  // namespace spectile::certify
