#include "rlcsynth/witness.hpp"

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

struct Expansion {
  Poly u, v;  // c^m p(x, z) = u + v sqrt(d)
  int m = 0;
};

Expansion expand(const BiPoly& p, const ZBranch& z) {
  Expansion e;
  e.m = std::max(p.degree(), 0);
  std::vector<Poly> cpow(static_cast<std::size_t>(e.m) + 1, Poly(1));
  for (int k = 1; k <= e.m; ++k) cpow[k] = cpow[k - 1] * z.c;
  Poly uk(1), vk;
  for (int k = 0; k <= p.degree(); ++k) {
    e.u = e.u + p[k] * uk * cpow[e.m - k];
    e.v = e.v + p[k] * vk * cpow[e.m - k];
    Poly nu = uk * z.a + vk * z.b * z.d;
    Poly nv = uk * z.b + vk * z.a;
    uk = nu;
    vk = nv;
  }
  return e;
}

mpf_class to_mpf(const Rational& r, mp_bitcnt_t prec) {
  mpf_class f(0, prec);
  f = r;
  return f;
}

mpf_class eval_mpf(const Poly& p, const mpf_class& x, mp_bitcnt_t prec) {
  mpf_class acc(0, prec);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + to_mpf(p[i], prec);
  return acc;
}

}  // namespace

bool is_rational_square(const Rational& v, Rational* root) {
  if (sgn(v) < 0) return false;
  if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den_mpz_t()) == 0) return false;
  if (root) {
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
    *root = Rational(n, d);
    root->canonicalize();
  }
  return true;
}

ZBranch ZBranch::rational(const Poly& num, const Poly& den) { return {num, Poly(), den, Poly()}; }

ZBranch ZBranch::quadratic(const Poly& e2, const Poly& e1, const Poly& e0, int sigma) {
  return {-e1, Poly(Rational(sigma)), e2 * Rational(2), e1 * e1 - e2 * e0 * Rational(4)};
}

std::string ZBranch::str() const {
  std::string num = "(" + to_string(a, "x") + ")";
  if (!b.is_zero() && !d.is_zero()) num = "(" + to_string(a, "x") + " + (" + to_string(b, "x") + ")*sqrt(" + to_string(d, "x") + "))";
  return num + "/(" + to_string(c, "x") + ")";
}

SamplePoint SamplePoint::at(const Rational& x, const Rational& z) {
  return {RootLocus::exact(x), ZBranch::rational(Poly(z), Poly(1))};
}

std::optional<Rational> SamplePoint::rational_x() const {
  if (x.is_rational()) return x.lo;
  return std::nullopt;
}

std::optional<Rational> SamplePoint::rational_z() {
  if (!z || !x.is_rational()) return std::nullopt;
  Rational xa = x.lo;
  Rational a = z->a(xa), b = z->b(xa), c = z->c(xa), d = z->d(xa);
  if (sgn(c) == 0) fail(ErrorKind::Precondition, "z branch has a vanishing denominator");
  if (sgn(b) == 0 || sgn(d) == 0) return Rational(a / c);
  Rational r;
  if (!is_rational_square(d, &r)) return std::nullopt;
  return Rational((a + b * r) / c);
}

bool SamplePoint::is_rational() { return x.is_rational() && (!z || rational_z().has_value()); }

std::string SamplePoint::x_str() {
  if (x.is_rational()) return to_string(x.lo);
  return "root of " + to_string(x.defining, "x") + " in (" + to_string(x.lo) + ", " + to_string(x.hi) + ")";
}

std::string SamplePoint::z_str() {
  if (!z) return "";
  if (auto r = rational_z()) return to_string(*r);
  return z->str();
}

int sign_at_point(const Poly& px, SamplePoint& pt) { return sign_at(px, pt.x); }

int sign_at_point(const BiPoly& p, SamplePoint& pt) {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sign_at(p[0], pt.x);
  if (!pt.z) fail(ErrorKind::Precondition, "polynomial depends on z but the point has no z coordinate");
  const ZBranch& z = *pt.z;
  int sc = sign_at(z.c, pt.x);
  if (sc == 0) fail(ErrorKind::Precondition, "z branch has a vanishing denominator");
  Expansion e = expand(p, z);
  int factor = (e.m % 2 == 1) ? sc : 1;
  int su = sign_at(e.u, pt.x);
  int sv = (z.b.is_zero() || z.d.is_zero()) ? 0 : sign_at(e.v, pt.x);
  int sd = sv == 0 ? 0 : sign_at(z.d, pt.x);
  if (sd < 0) fail(ErrorKind::Precondition, "z branch is not real at this x");
  int s;
  if (sv == 0 || sd == 0) s = su;
  else if (su == 0) s = sv;
  else if (su == sv) s = su;
  else s = su * sign_at(e.u * e.u - e.v * e.v * z.d, pt.x);
  return factor * s;
}

std::optional<Rational> rational_value(const BiPoly& p, SamplePoint& pt) {
  if (!pt.x.is_rational()) return std::nullopt;
  Poly inz = eval_inner(p, pt.x.lo);
  if (inz.degree() <= 0) return inz[0];
  auto z = pt.rational_z();
  if (!z) return std::nullopt;
  return inz(*z);
}

Rational approximate_value(const BiPoly& num, const BiPoly& den, SamplePoint& pt, int bits) {
  mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(bits + 64);
  auto rn = rational_value(num, pt), rd = rational_value(den, pt);
  if (rn && rd) {
    if (sgn(*rd) == 0) fail(ErrorKind::Precondition, "division by zero in element value");
    return Rational(*rn / *rd);
  }
  Rational xa = approximate(pt.x, bits + 32);
  mpf_class x = to_mpf(xa, prec), z(0, prec);
  if (pt.z) {
    const ZBranch& br = *pt.z;
    mpf_class d = eval_mpf(br.d, x, prec);
    if (d < 0) d = 0;
    mpf_class r(0, prec);
    r = sqrt(d);
    z = (eval_mpf(br.a, x, prec) + eval_mpf(br.b, x, prec) * r) / eval_mpf(br.c, x, prec);
  }
  auto eval2 = [&](const BiPoly& p) {
    mpf_class acc(0, prec);
    for (int k = p.degree(); k >= 0; --k) acc = acc * z + eval_mpf(p[k], x, prec);
    return acc;
  };
  mpf_class v(0, prec);
  v = eval2(num) / eval2(den);
  return Rational(v);
}

std::string decimal_value(const BiPoly& num, const BiPoly& den, SamplePoint& pt, int digits) {
  return to_decimal(approximate_value(num, den, pt, digits * 4 + 16), digits);
}

std::string decimal_x(SamplePoint& pt, int digits) { return to_decimal(pt.x, digits); }

std::string decimal_z(SamplePoint& pt, int digits) {
  if (!pt.z) return "";
  return decimal_value(BiPoly::var(), BiPoly(Poly(1)), pt, digits);
}

}  // namespace rlcsynth
