#include "spectile/fourier.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace spectile;
using fourier::DftMode;
using geometry::Polytope;

namespace {

Complex richardson_clipped(const Polytope& p, const std::vector<double>& xi,
                           const Rational& h) {
  const Complex a = fourier::dft_oracle(p, xi, h, DftMode::Clipped);
  const Complex b = fourier::dft_oracle(p, xi, h / 2, DftMode::Clipped);
  return (4.0 * b - a) / 3.0;
}

}  // namespace

TEST_CASE("transform at zero is the volume") {
  const std::vector<double> zero2 = {0.0, 0.0};
  CHECK(fourier::ft_indicator(Polytope::unit_cube(2), zero2).real() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fourier::ft_indicator(fixtures::triangle_half(), zero2).real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  const std::vector<double> zero3 = {0.0, 0.0, 0.0};
  CHECK(fourier::ft_indicator(Polytope::unit_cube(3), zero3).real() ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("interval transform vanishes at nonzero integers") {
  const Polytope q1 = Polytope::unit_cube(1);
  for (double k : {1.0, 2.0, 3.0, -5.0}) {
    const std::vector<double> xi = {k};
    CHECK(std::abs(fourier::ft_indicator(q1, xi)) < 1e-14);
  }
}

TEST_CASE("triangle transform matches the refined rasterization oracle") {
  const Polytope t = fixtures::triangle_half();
  const std::vector<double> xi = {3.7, -1.2};
  const Complex closed = fourier::ft_indicator(t, xi);
  const Complex oracle = richardson_clipped(t, xi, Rational(1, 1024));
  CHECK(std::abs(closed - oracle) <= 1e-6 * std::abs(closed));
}

TEST_CASE("near-singular frequencies stay accurate") {
  // Frequencies orthogonal to an edge direction put two vertex phases within
  // the series-fallback window.
  const Polytope t = fixtures::triangle_half();
  for (double eps : {0.0, 1e-12, 1e-9, 1e-7}) {
    const std::vector<double> xi = {2.5 + eps, 2.5};  // edge (1,0)-(0,1)
    const Complex closed = fourier::ft_indicator(t, xi);
    const Complex oracle = richardson_clipped(t, xi, Rational(1, 1024));
    CHECK(std::abs(closed - oracle) <= 1e-8 + 1e-6 * std::abs(closed));
  }
}

TEST_CASE("autocorrelation values") {
  const Polytope q = Polytope::unit_cube(2);
  CHECK(fourier::autocorrelation(q, {Rational(0), Rational(0)}) == 1);
  CHECK(fourier::autocorrelation(q, {Rational(2), Rational(0)}) == 0);
  const Polytope sq = fixtures::unit_square_origin();
  CHECK(fourier::autocorrelation(sq, {Rational(1, 2), Rational(1, 2)}) ==
        Rational(1, 4));
}

TEST_CASE("autocorrelation support is the difference body") {
  const Polytope t = fixtures::triangle_half();
  const Polytope k = geometry::difference_body(t);
  for (const auto& v : k.vertices()) {
    const Point inside = scale_point(v, Rational(9, 10));
    const Point outside = scale_point(v, Rational(11, 10));
    CHECK(fourier::autocorrelation(t, inside) > 0);
    CHECK(fourier::autocorrelation(t, outside) == 0);
  }
}

TEST_CASE("autocorrelation is even") {
  std::mt19937 rng(7101);
  for (int round = 0; round < 5; ++round) {
    const Polytope h = oracles::random_polytope(rng, 2);
    const Point x = oracles::random_point(rng, 2, -2, 2, 8);
    CHECK(fourier::autocorrelation(h, x) == fourier::autocorrelation(h, negate(x)));
  }
}

TEST_CASE("squared transform identity") {
  const Polytope q = Polytope::unit_cube(2);
  const std::vector<double> zero = {0.0, 0.0};
  CHECK(fourier::ft_autocorrelation(q, zero) == doctest::Approx(1.0).epsilon(1e-14));
  const std::vector<double> e1 = {1.0, 0.0};
  CHECK(fourier::ft_autocorrelation(q, e1) < 1e-28);

  std::mt19937 rng(7102);
  std::uniform_real_distribution<double> freq(-6.0, 6.0);
  for (int round = 0; round < 5; ++round) {
    const Polytope p = oracles::random_polytope(rng, 2);
    const std::vector<double> xi = {freq(rng), freq(rng)};
    CHECK(fourier::ft_autocorrelation(p, xi) ==
          std::norm(fourier::ft_indicator(p, xi)));
  }
}

TEST_CASE("rasterization oracle basics") {
  const Polytope q = Polytope::unit_cube(2);
  const std::vector<double> zero = {0.0, 0.0};
  const Complex v = fourier::dft_oracle(q, zero, Rational(1, 256));
  CHECK(std::abs(v - Complex{1.0, 0.0}) <= 2.0 / 256);

  const Polytope t = fixtures::triangle_half();
  double prev_err = 1.0;
  for (int k = 5; k <= 8; ++k) {
    const Complex a = fourier::dft_oracle(t, zero, Rational(1, 1 << k));
    const double err = std::abs(a - Complex{0.5, 0.0});
    CHECK(err < prev_err + 1e-12);
    prev_err = err;
  }
  CHECK(prev_err < 5e-3);

  // Self-consistency under refinement at a nonzero frequency.
  const std::vector<double> xi = {1.0, 1.0};
  const Complex closed = fourier::ft_indicator(t, xi);
  const double e1 = std::abs(fourier::dft_oracle(t, xi, Rational(1, 128)) - closed);
  const double e2 = std::abs(fourier::dft_oracle(t, xi, Rational(1, 512)) - closed);
  CHECK(e2 < e1);
  CHECK(e2 < 1e-3);

  CHECK_THROWS_AS(fourier::dft_oracle(t, xi, Rational(2)), GridTooCoarse);
}

TEST_CASE("zero test") {
  const Polytope q3 = Polytope::unit_cube(3);
  CHECK(fourier::zero_test(q3, std::vector<double>{1.0, 0.0, 0.0}, 1e-9));
  CHECK_FALSE(fourier::zero_test(q3, std::vector<double>{0.5, 0.0, 0.0}, 1e-9));
  // At half-integer frequency the first-axis factor is 2/pi.
  CHECK(std::abs(fourier::ft_indicator(q3, std::vector<double>{0.5, 0.0, 0.0})) ==
        doctest::Approx(2.0 / M_PI).epsilon(1e-13));
  CHECK_FALSE(fourier::zero_test(q3, std::vector<double>{0.0, 0.0, 0.0}, 1e-9));
}

TEST_CASE("conjugate symmetry") {
  std::mt19937 rng(7103);
  std::uniform_real_distribution<double> freq(-8.0, 8.0);
  for (int round = 0; round < 8; ++round) {
    const Polytope p = oracles::random_polytope(rng, round % 2 ? 3 : 2);
    std::vector<double> xi(p.dim()), neg(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      xi[i] = freq(rng);
      neg[i] = -xi[i];
    }
    const Complex a = fourier::ft_indicator(p, xi);
    const Complex b = fourier::ft_indicator(p, neg);
    CHECK(std::abs(b - std::conj(a)) <= 1e-13 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("translation covariance") {
  std::mt19937 rng(7104);
  std::uniform_real_distribution<double> freq(-5.0, 5.0);
  for (int round = 0; round < 6; ++round) {
    const Polytope p = oracles::random_polytope(rng, 2);
    const Point t = oracles::random_point(rng, 2);
    const std::vector<double> xi = {freq(rng), freq(rng)};
    const Complex moved = fourier::ft_indicator(geometry::translate(p, t), xi);
    const double phase = xi[0] * to_double(t[0]) + xi[1] * to_double(t[1]);
    const Complex expected =
        std::polar(1.0, -2.0 * M_PI * phase) * fourier::ft_indicator(p, xi);
    CHECK(std::abs(moved - expected) <= 1e-12 * (1.0 + std::abs(expected)));
  }
}

TEST_CASE("scaling identity") {
  std::mt19937 rng(7105);
  std::uniform_real_distribution<double> freq(-4.0, 4.0);
  const Point origin(2, Rational(0));
  for (int round = 0; round < 6; ++round) {
    const Polytope p = oracles::random_polytope(rng, 2);
    const Rational rho = oracles::random_rational(rng, 1, 2, 2);
    const std::vector<double> xi = {freq(rng), freq(rng)};
    const std::vector<double> rho_xi = {to_double(rho) * xi[0],
                                        to_double(rho) * xi[1]};
    const Complex lhs = fourier::ft_indicator(geometry::scale(p, rho, origin), xi);
    const Complex rhs = to_double(rho * rho) * fourier::ft_indicator(p, rho_xi);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("grid sampling") {
  const auto g = fourier::sample_autocorrelation(fixtures::unit_square_origin(),
                                                 Rational(1, 4));
  // Tent function on [-1,1]^2.
  CHECK(g.grid.extent == std::vector<size_t>{9, 9});
  CHECK(g.sample({Rational(0), Rational(0)}).real() == 1.0);
  CHECK(g.sample({Rational(1, 2), Rational(0)}).real() == 0.5);
  CHECK(g.sample({Rational(1, 2), Rational(1, 2)}).real() == 0.25);
  CHECK(g.sample({Rational(2), Rational(0)}).real() == 0.0);  // outside
  // Multilinear interpolation between exact tent samples is the tent itself.
  CHECK(g.sample({Rational(3, 8), Rational(0)}).real() ==
        doctest::Approx(0.625).epsilon(1e-14));
}
