#pragma once

#include <optional>
#include <string>

#include "rlcsynth/polynomial.hpp"
#include "rlcsynth/roots.hpp"

namespace rlcsynth {

// z = (a + b*sqrt(d)) / c with a, b, c, d in Q[x]; b = 0 for a rational branch.
struct ZBranch {
  Poly a, b, c, d;

  static ZBranch rational(const Poly& num, const Poly& den);
  // root of e2 z^2 + e1 z + e0 (e2 nonzero at the point); sigma = +1 or -1 on the square root
  static ZBranch quadratic(const Poly& e2, const Poly& e1, const Poly& e0, int sigma);
  std::string str() const;
};

// Witness point (x, z): x a real algebraic number, z optional.
struct SamplePoint {
  RootLocus x;
  std::optional<ZBranch> z;

  static SamplePoint at(const Rational& x) { return {RootLocus::exact(x), std::nullopt}; }
  static SamplePoint at(const Rational& x, const Rational& z);
  std::optional<Rational> rational_x() const;
  std::optional<Rational> rational_z();  // only when x is rational
  bool is_rational();
  std::string x_str();
  std::string z_str();
};

// Exact sign of p(x, z); p is a polynomial in z over Q[x].
int sign_at_point(const BiPoly& p, SamplePoint& pt);
int sign_at_point(const Poly& px, SamplePoint& pt);
// p(x, z) when both coordinates are rational
std::optional<Rational> rational_value(const BiPoly& p, SamplePoint& pt);
// decimal approximation of num(x, z) / den(x, z), for display only
std::string decimal_value(const BiPoly& num, const BiPoly& den, SamplePoint& pt, int digits = 20);
std::string decimal_x(SamplePoint& pt, int digits = 20);
std::string decimal_z(SamplePoint& pt, int digits = 20);
// rational approximation of num/den at the point within roughly 2^-bits (display and netlists)
Rational approximate_value(const BiPoly& num, const BiPoly& den, SamplePoint& pt, int bits);

bool is_rational_square(const Rational& v, Rational* root = nullptr);

}  // namespace rlcsynth
