#include "spectile/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace spectile {

bool Box::contains(const Point& p) const {
  for (size_t i = 0; i < lo.size(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

bool Box::empty_interior() const {
  for (size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] >= hi[i]) return true;
  }
  return false;
}

namespace {

// Decimal integer parse; leading zeros must not trigger the octal prefix of
// the bigint string constructor.
Int parse_decimal_int(const std::string& text) {
  std::string s = text;
  bool negative = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  while (pos + 1 < s.size() && s[pos] == '0') ++pos;
  if (pos >= s.size()) throw ParseError("malformed integer: " + text);
  for (size_t i = pos; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("malformed integer: " + text);
  Int v(s.substr(pos));
  return negative ? Int(-v) : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw ParseError("malformed rational: " + text);
    const Int p = parse_decimal_int(num);
    const Int q = parse_decimal_int(den);
    if (q == 0) throw ParseError("zero denominator: " + text);
    return Rational(p, q);
  }

  // Decimal or integer literal, converted exactly.
  bool negative = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  Int den = 1;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_dot) throw ParseError("malformed number: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) den *= 10;
    } else {
      throw ParseError("malformed number: " + text);
    }
  }
  if (!seen_digit) throw ParseError("malformed number: " + text);
  Int num = parse_decimal_int(digits);
  if (negative) num = -num;
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw ParseError("non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double f = std::frexp(x, &exp);  // x = f * 2^exp, |f| in [0.5, 1)
  // 53 bits of significand, exact.
  const int64_t mant = static_cast<int64_t>(std::ldexp(f, 53));
  Rational r(mant);
  const int e = exp - 53;
  if (e >= 0) {
    r *= pow_rational(Rational(2), static_cast<unsigned>(e));
  } else {
    r /= pow_rational(Rational(2), static_cast<unsigned>(-e));
  }
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational acc(1), b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) acc *= b;
    b *= b;
    e >>= 1u;
  }
  return acc;
}

Int floor_nth_root(const Int& value, unsigned n) {
  if (value < 0) throw Error("negative radicand");
  if (value == 0 || n == 1) return value;
  Int lo = 0, hi = 1;
  while (boost::multiprecision::pow(hi, n) <= value) hi <<= 1;
  while (lo < hi - 1) {
    Int mid = (lo + hi) >> 1;
    if (boost::multiprecision::pow(mid, n) <= value)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<Rational> exact_nth_root(const Rational& value, unsigned n) {
  if (value < 0) return std::nullopt;
  const Int p = numerator(value), q = denominator(value);
  Int rp = floor_nth_root(p, n), rq = floor_nth_root(q, n);
  if (boost::multiprecision::pow(rp, n) != p) return std::nullopt;
  if (boost::multiprecision::pow(rq, n) != q) return std::nullopt;
  return Rational(rp, rq);
}

Int floor_rational(const Rational& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;
  if (n % d != 0 && n < 0) --quot;
  return quot;
}

Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

Rational dot(const Point& a, const Point& b) {
  Rational acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point negate(const Point& a) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Point scale_point(const Point& a, const Rational& s) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = to_double(p[i]);
  return r;
}

double norm2(std::span<const double> v) {
  double acc = 0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

bool lex_less(const Point& a, const Point& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace spectile
