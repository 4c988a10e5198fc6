#include "spectile/detail/grid_margin.hpp"

#include <cmath>

namespace spectile::detail {

IntMargin make_grid_margin(const geometry::Halfspace& f, const Point& base,
                           const Rational& h, int dim,
                           const std::array<size_t, 3>& extent) {
  using boost::multiprecision::lcm;
  const Rational r0 = f.offset - dot(f.normal, base);
  std::vector<Rational> steps(dim);
  Int den = denominator(r0);
  for (int i = 0; i < dim; ++i) {
    steps[i] = f.normal[i] * h;
    den = lcm(den, denominator(steps[i]));
  }
  IntMargin m;
  const Int r0_int = numerator(r0) * (den / denominator(r0));
  Int bound = boost::multiprecision::abs(r0_int);
  std::array<Int, 3> s_int{};
  for (int i = 0; i < dim; ++i) {
    s_int[i] = numerator(steps[i]) * (den / denominator(steps[i]));
    bound += boost::multiprecision::abs(s_int[i]) *
             static_cast<long long>(extent[static_cast<size_t>(i)] + 2);
  }
  if (bound >= (Int(1) << 62)) return m;
  m.r0 = r0_int.convert_to<int64_t>();
  for (int i = 0; i < dim; ++i) m.s[i] = s_int[i].convert_to<int64_t>();
  m.denom = den.convert_to<double>();
  double len2 = 0;
  for (int i = 0; i < dim; ++i) {
    const double c = to_double(f.normal[i]);
    len2 += c * c;
  }
  m.normal_len = std::sqrt(len2);
  m.ok = true;
  return m;
}

}  // namespace spectile::detail
