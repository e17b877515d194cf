#pragma once

#include <string>
#include <vector>

#include "rlcsynth/polynomial.hpp"

namespace rlcsynth {

// Interval bisections allowed before a sign query gives up with Undecided.
int precision_budget();
void set_precision_budget(int bits);

// A real algebraic number: the unique root of `defining` in the open
// interval (lo, hi), or the rational lo when lo == hi.
struct RootLocus {
  Poly defining;
  Rational lo, hi;
  int sign_lo = 0;  // sign of defining at lo (interval form only)

  static RootLocus exact(const Rational& r);
  bool is_rational() const { return lo == hi; }
  Rational midpoint() const { return Rational((lo + hi) / 2); }
  Rational width() const { return Rational(hi - lo); }
  void refine();  // halve the interval, or land exactly on a rational root
  double approx() const { return midpoint().get_d(); }
};

class SturmSequence {
 public:
  explicit SturmSequence(const Poly& f);
  int variations(const Rational& x) const;
  // number of distinct real roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<Poly> seq_;
};

Rational cauchy_bound(const Poly& f);
// Distinct real roots in ascending order; with nonnegative_only the search is
// restricted to [0, inf).
std::vector<RootLocus> isolate_roots(const Poly& f, bool nonnegative_only = false);

// Exact sign of g at the locus (gcd test for zero, refinement otherwise).
int sign_at(const Poly& g, RootLocus& at);
// -1, 0, 1 ordering of two algebraic numbers.
int compare(RootLocus& a, RootLocus& b);
// Rational approximation within 2^-bits.
Rational approximate(RootLocus& at, int bits);
std::string to_decimal(const Rational& r, int digits = 20);
std::string to_decimal(RootLocus& at, int digits = 20);
// Simplest rational (smallest denominator) strictly inside (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace rlcsynth
