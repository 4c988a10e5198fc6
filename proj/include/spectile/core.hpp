#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectile {

// Exact arithmetic used by all geometric kernels. Floating point only enters
// at the Fourier-evaluation boundary.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Point = std::vector<Rational>;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
// Affine hull has dimension < d (or volume is zero where a body is required).
struct DegenerateBody : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NonpositiveScale : Error {
  using Error::Error;
};
struct UnsupportedDimension : Error {
  using Error::Error;
};
struct GridTooCoarse : Error {
  using Error::Error;
};
struct WindowTooLarge : Error {
  using Error::Error;
};
struct InsufficientWindow : Error {
  using Error::Error;
};
struct SymmetricBody : Error {
  using Error::Error;
};
struct InconsistentCertificate : Error {
  explicit InconsistentCertificate(const std::string& field)
      : Error("inconsistent certificate field: " + field), field(field) {}
  std::string field;
};

// Axis-aligned box with exact rational corners, lo <= hi per axis.
struct Box {
  Point lo;
  Point hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Point& p) const;
  bool empty_interior() const;
};

// ---- rational helpers ----

// Accepts "p/q", integers, and decimal strings ("-3.25"); all parsed exactly.
Rational parse_rational(const std::string& text);

// Lowest terms; "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& q);

// Exact binary expansion of a finite double.
Rational rational_from_double(double x);

double to_double(const Rational& q);

Rational pow_rational(const Rational& base, unsigned exponent);

// Largest r with r^n <= value (value >= 0, n >= 1).
Int floor_nth_root(const Int& value, unsigned n);

// Exact d-th root if the rational is a perfect d-th power.
std::optional<Rational> exact_nth_root(const Rational& value, unsigned n);

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);

// ---- small point utilities ----

Rational dot(const Point& a, const Point& b);
Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point negate(const Point& a);
Point scale_point(const Point& a, const Rational& s);
std::vector<double> to_doubles(const Point& p);
double norm2(std::span<const double> v);

bool lex_less(const Point& a, const Point& b);

}  // namespace spectile
