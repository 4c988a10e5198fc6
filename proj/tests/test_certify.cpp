#include "spectile/certify.hpp"

#include "spectile/fourier.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace spectile;
using certify::NonSpectralityCertificate;
using geometry::Polytope;

TEST_CASE("volume normalization") {
  const Polytope big = Polytope::box({Rational(0), Rational(0)},
                                     {Rational(2), Rational(2)});
  const Polytope n = certify::normalize_volume(big);
  CHECK(n.volume() == 1);
  CHECK(n.bounding_box().hi[0] - n.bounding_box().lo[0] == 1);

  const Polytope t = fixtures::triangle_unit_area();
  CHECK(certify::normalize_volume(t) == t);
  CHECK(certify::can_normalize_exactly(t));

  // Area 1/2 in d = 2 needs sqrt(2): not exactly normalizable.
  CHECK_FALSE(certify::can_normalize_exactly(fixtures::triangle_half()));
  CHECK(certify::normalize_volume(fixtures::triangle_half()) ==
        fixtures::triangle_half());
}

TEST_CASE("volume gap values") {
  const auto [vol_h_sq, gap_sq] = certify::brunn_minkowski_gap(Polytope::unit_cube(2));
  CHECK(vol_h_sq == 1);
  CHECK(gap_sq == 0);

  const Polytope t = fixtures::triangle_unit_area();
  const auto [vol_h, gap] = certify::brunn_minkowski_gap(t);
  CHECK(vol_h == Rational(3, 2));
  CHECK(gap == Rational(1, 2));

  // Shoelace oracle on the difference hull: vol(T - T) = 4 * vol(H).
  const Polytope k = geometry::difference_body(t);
  CHECK(oracles::shoelace_of(k) == 4 * vol_h);
}

TEST_CASE("gap is zero exactly on the symmetric zoo") {
  for (const auto& p : fixtures::symmetric_zoo()) {
    const auto [vol_h, gap] = certify::brunn_minkowski_gap(p);
    CHECK(gap == 0);
    CHECK(vol_h == p.volume());
  }
  for (const auto& p : fixtures::nonsymmetric_zoo()) {
    const auto [vol_h, gap] = certify::brunn_minkowski_gap(p);
    CHECK(gap > 0);
  }
}

TEST_CASE("triangle certificate has the exact frozen values") {
  const auto c = certify::certify_nonspectral(fixtures::triangle_unit_area());
  CHECK(c.normalized_exactly);
  CHECK(c.vol_body == 1);
  CHECK(c.vol_H == Rational(3, 2));
  CHECK(c.bm_gap == Rational(1, 2));
  CHECK(c.rho_pow_d == Rational(5, 6));
  CHECK(c.level_from_tiling == Rational(3, 2));
  CHECK(c.level_from_value_at_zero == Rational(15, 8));
  CHECK(c.contradiction_margin == Rational(3, 8));
  CHECK_FALSE(c.symmetry.is_symmetric);
  CHECK(certify::certificate_consistency_check(c).ok);
}

TEST_CASE("symmetric bodies are refused") {
  CHECK_THROWS_AS(certify::certify_nonspectral(Polytope::unit_cube(2)),
                  SymmetricBody);
  CHECK_THROWS_AS(certify::certify_nonspectral(fixtures::hexagon_t_minus_t()),
                  SymmetricBody);
}

TEST_CASE("simplex certificates in three dimensions") {
  // Unit tetrahedron: irrational normalization, so the scale-invariant form.
  const auto c = certify::certify_nonspectral(fixtures::tetrahedron_unit());
  CHECK_FALSE(c.normalized_exactly);
  CHECK(c.vol_body == Rational(1, 6));
  CHECK(c.vol_H == Rational(5, 2));
  CHECK(c.rho_pow_d == Rational(7, 10));
  CHECK(c.contradiction_margin == Rational(15, 8));
  CHECK(certify::certificate_consistency_check(c).ok);

  // Volume 8 tetrahedron: the cube root is rational (1/2).
  const Polytope t8 = Polytope::hull(3, {{Rational(0), Rational(0), Rational(0)},
                                         {Rational(4), Rational(0), Rational(0)},
                                         {Rational(0), Rational(4), Rational(0)},
                                         {Rational(0), Rational(0), Rational(3)}});
  CHECK(t8.volume() == 8);
  const auto c8 = certify::certify_nonspectral(t8);
  CHECK(c8.normalized_exactly);
  CHECK(c8.vol_body == 1);
  CHECK(c8.vol_H == Rational(5, 2));  // simplices share the ratio
  CHECK(certify::certificate_consistency_check(c8).ok);
}

TEST_CASE("margins are strictly positive across the non-symmetric zoo") {
  for (const auto& p : fixtures::nonsymmetric_zoo()) {
    const auto c = certify::certify_nonspectral(p);
    CHECK(c.vol_H > 1);
    CHECK(c.contradiction_margin > 0);
    CHECK(c.contradiction_margin == c.vol_H * (c.rho_pow_d * c.vol_H - 1));
    CHECK(certify::certificate_consistency_check(c).ok);
  }
}

TEST_CASE("tampered certificates fail the consistency check") {
  auto c = certify::certify_nonspectral(fixtures::triangle_unit_area());

  SUBCASE("rho pushed to the boundary breaks the support containment") {
    c.rho_pow_d = 1;
    c.level_from_value_at_zero = c.rho_pow_d * c.vol_H * c.vol_H;
    c.contradiction_margin = c.level_from_value_at_zero - c.level_from_tiling;
    const auto r = certify::certificate_consistency_check(c);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_field == "rho_pow_d");
  }

  SUBCASE("vol_H below one violates the gap invariant") {
    c.vol_H = Rational(9, 10);
    const auto r = certify::certificate_consistency_check(c);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_field == "vol_H");
  }

  SUBCASE("mismatched levels are caught") {
    c.level_from_value_at_zero += 1;
    const auto r = certify::certificate_consistency_check(c);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_field == "level_from_value_at_zero");
  }
}

TEST_CASE("verdict and vol_H are invariant under unimodular maps") {
  std::mt19937 rng(7401);
  for (int round = 0; round < 4; ++round) {
    const Mat u = oracles::random_unimodular(rng, 2);
    const Polytope t = fixtures::triangle_unit_area();
    const Polytope mapped = oracles::apply_linear(u, t);
    CHECK(mapped.volume() == t.volume());
    const auto c = certify::certify_nonspectral(mapped);
    CHECK(c.vol_H == Rational(3, 2));
    CHECK(c.contradiction_margin == Rational(3, 8));

    const Polytope sq = fixtures::unit_square_origin();
    const auto [vol_h, gap] = certify::brunn_minkowski_gap(oracles::apply_linear(u, sq));
    CHECK(gap == 0);
  }
}

TEST_CASE("certificate levels agree with the transform routes") {
  std::vector<Polytope> bodies = {fixtures::triangle_unit_area(),
                                  fixtures::triangle_half(),
                                  fixtures::tetrahedron_unit()};
  for (const auto& body : bodies) {
    const Point origin(body.dim(), Rational(0));
    const Polytope h =
        geometry::scale(geometry::difference_body(body), Rational(1, 2), origin);
    const Rational g0 = fourier::autocorrelation(h, origin);
    CHECK(g0 == h.volume());
    const std::vector<double> zero(static_cast<size_t>(body.dim()), 0.0);
    const double ft0 = fourier::ft_autocorrelation(h, zero);
    const double expect = to_double(h.volume() * h.volume());
    CHECK(std::abs(ft0 - expect) <= 1e-12 * std::max(1.0, expect));
  }
}
