#include <catch_amalgamated.hpp>

#include <random>

#include "rlcsynth/errors.hpp"
#include "rlcsynth/polynomial.hpp"
#include "rlcsynth/roots.hpp"
#include "rlcsynth/subresultant.hpp"

using namespace rlcsynth;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Rational rnd_rat(std::mt19937_64& g, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> n(lo, hi), d(1, 6);
  return make_rational(n(g), d(g));
}

Poly rnd_poly(std::mt19937_64& g, int deg) {
  std::vector<Rational> v;
  for (int i = 0; i <= deg; ++i) v.push_back(rnd_rat(g));
  return Poly(std::move(v));
}

const Poly kA = P({28, 92, 124, 60});
const Poly kB = P({59, 191, 291, 135});

}  // namespace

TEST_CASE("rational parsing is exact", "[poly]") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), SynthesisError);
  CHECK_THROWS_AS(parse_rational("x"), SynthesisError);
  CHECK(parse_poly("1,2,3") == P({1, 2, 3}));
  CHECK(parse_poly("1,2,3", true) == P({3, 2, 1}));
}

TEST_CASE("polynomial arithmetic", "[poly]") {
  Poly a = P({1, 1}), b = P({-1, 1});
  CHECK(a * b == P({-1, 0, 1}));
  CHECK((a * b).exact_divide(a) == b);
  CHECK_THROWS(P({1, 0, 1}).exact_divide(a));
  auto [q, r] = divmod(P({1, 0, 1}), a);
  CHECK(q == P({-1, 1}));
  CHECK(r == P({2}));
  CHECK(gcd(a * b, a * a) == a);
  CHECK(square_free(a * a * b) == a * b);
  CHECK(P({1, 2, 3}).reflect() == P({1, -2, 3}));
  CHECK(P({1, 2}).reverse(3) == P({0, 0, 2, 1}));
}

TEST_CASE("bivariate gcd and content", "[poly]") {
  BiPoly x = bivariate_x(), z = bivariate_z();
  BiPoly f = (z - x) * (z + BiPoly(Poly(1)));
  BiPoly g = (z - x) * (x * z + BiPoly(Poly(3)));
  BiPoly h = bigcd(f, g);
  CHECK(h.degree() == 1);
  CHECK(primitive_part(h) == primitive_part(z - x));
  CHECK(content(x * z + x) == Poly::var());
}

TEST_CASE("Bezoutian of the essential-regular counterexample pair", "[poly_core]") {
  auto b = bezoutian(kA, kB, 3);
  Matrix<Rational> expect = {{80, -832, -240}, {-832, -3328, -960}, {-240, -960, 720}};
  CHECK(b == expect);
}

TEST_CASE("Bezoutian matches its generating function at sample points", "[poly_core]") {
  std::mt19937_64 g(11);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 4;
    Poly q = rnd_poly(g, n), p = rnd_poly(g, n);
    auto b = bezoutian(q, p, n);
    Rational zz = rnd_rat(g), ww = rnd_rat(g);
    if (zz == ww) continue;
    Rational lhs = (q(zz) * p(ww) - p(zz) * q(ww)) / (zz - ww);
    Rational rhs = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational zi = 1, wj = 1;
        for (int k = 0; k < i; ++k) zi *= zz;
        for (int k = 0; k < j; ++k) wj *= ww;
        rhs += b[i][j] * zi * wj;
      }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("subresultants: Sylvester and Bezoutian routes agree", "[poly_core]") {
  auto r = subresultants(kA, kB, 3);
  CHECK(r == std::vector<Rational>{955514880, -3317760, -720});
  CHECK(subresultants_bezout(kA, kB, 3) == r);
  std::mt19937_64 g(7);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 5;
    Poly p = rnd_poly(g, n), q = rnd_poly(g, n);
    CHECK(subresultants(p, q, n) == subresultants_bezout(p, q, n));
    // det B(q,p) = R_0(p,q)
    CHECK(determinant(bezoutian(q, p, n)) == subresultants(p, q, n)[0]);
  }
}

TEST_CASE("R0 vanishes exactly on common roots", "[poly_core]") {
  std::mt19937_64 g(3);
  for (int t = 0; t < 50; ++t) {
    Poly common = P({1, 1}) * Poly{rnd_rat(g), Rational(1)};
    Poly p = common * rnd_poly(g, 1), q = common * rnd_poly(g, 1);
    auto r = subresultants(p, q, 3);
    CHECK(sgn(r[0]) == 0);
    CHECK(sgn(r[1]) == 0);
  }
}

TEST_CASE("storage counts from the sign sequence", "[poly_core]") {
  CHECK(storage_counts(P({2, 1}), P({1, 1})) == StorageCounts{1, 0});
  CHECK(storage_counts(P({0, 1}), P({1})) == StorageCounts{0, 1});
  CHECK(storage_counts(P({1}), P({0, 1})) == StorageCounts{1, 0});
  CHECK(storage_counts(kA, kB) == StorageCounts{1, 2});
  CHECK_THROWS_AS(storage_counts(P({1, 1}), P({2, 2})), SynthesisError);
  // zero-run rule: signs 1, 0, 0, R0 -> 1, +, -, ...
  auto seq = storage_sign_sequence({Rational(5), Rational(0), Rational(0)});
  CHECK(seq == std::vector<int>{1, 1, -1, 1});
}

TEST_CASE("same-sign helper", "[poly_core]") {
  CHECK(same_sign({1, 0, 1}));
  CHECK(same_sign({0, 0, 0}));
  CHECK(same_sign({-1, 0, -1}));
  CHECK_FALSE(same_sign({1, -1}));
}

TEST_CASE("generic determinant over polynomial entries", "[poly_core]") {
  // det [[x, 1], [1, x]] = x^2 - 1
  Poly x = Poly::var();
  Matrix<Poly> m = {{x, Poly(1)}, {Poly(1), x}};
  CHECK(determinant(m) == P({-1, 0, 1}));
  // resultant in z of (z - x) and (z + x) is -2x
  BiPoly X = bivariate_x(), Z = bivariate_z();
  Poly r = resultant(Z - X, Z + X);
  CHECK(r == P({0, 2}));
}

TEST_CASE("root isolation and exact sign queries", "[roots]") {
  Poly f = P({-2, 0, 1}) * P({-3, 2});  // roots -sqrt2, sqrt2, 3/2
  auto roots = isolate_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[2].is_rational());
  CHECK(roots[2].lo == Rational(3, 2));
  std::swap(roots[1], roots[2]);
  CHECK(sign_at(P({-2, 0, 1}), roots[2]) == 0);
  CHECK(sign_at(Poly{make_rational(-14142, 10000), Rational(1)}, roots[2]) == 1);
  CHECK(sign_at(Poly{make_rational(-14143, 10000), Rational(1)}, roots[2]) == -1);
  CHECK(compare(roots[0], roots[2]) == -1);
  auto nonneg = isolate_roots(f * Poly::var(), true);
  REQUIRE(nonneg.size() == 3);
  CHECK(nonneg[0].lo == 0);
  // the same algebraic number from two defining polynomials
  auto r2 = isolate_roots(P({-2, 0, 1}) * P({5, 1}), true);
  REQUIRE(r2.size() == 1);
  CHECK(compare(r2[0], roots[2]) == 0);
  CHECK(to_decimal(roots[2], 10) == "1.4142135624");
}

TEST_CASE("Sturm count agrees with isolation on random polynomials", "[roots]") {
  std::mt19937_64 g(5);
  for (int t = 0; t < 60; ++t) {
    Poly f = rnd_poly(g, 1 + t % 7);
    if (f.degree() < 1) continue;
    auto roots = isolate_roots(f);
    SturmSequence s(f);
    Rational b = cauchy_bound(f);
    CHECK(static_cast<int>(roots.size()) == s.count(-b, b));
    for (auto& r : roots) CHECK(sign_at(f, r) == 0);
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(compare(roots[i - 1], roots[i]) == -1);
  }
}

TEST_CASE("simplest rational between", "[roots]") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_between(Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(simplest_between(Rational(3, 2), Rational(7, 2)) == 2);
  CHECK(simplest_between(Rational(-7, 2), Rational(-3, 2)) == -2);
}
