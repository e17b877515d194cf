#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rlcsynth {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalized n/d (the two-argument mpq constructor does not reduce).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline int sign_of(const Rational& r) { return sgn(r); }
inline Rational exact_div(const Rational& a, const Rational& b) { return Rational(a / b); }

template <class T>
class Polynomial;
template <class T>
bool is_zero(const Polynomial<T>& p);
template <class T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b);

// Dense univariate polynomial, coefficients stored in ascending order.
// T is either Rational or another Polynomial (for bivariate work).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const T& c0) {  // NOLINT(google-explicit-constructor)
    if (!rlcsynth::is_zero(c0)) c_.push_back(c0);
  }
  Polynomial(int c0) : Polynomial(T(c0)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }

  static Polynomial monomial(const T& coef, int k) {
    if (rlcsynth::is_zero(coef)) return {};
    std::vector<T> c(static_cast<std::size_t>(k) + 1);
    c[k] = coef;
    return Polynomial(std::move(c));
  }
  static Polynomial var() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  const T& operator[](int i) const {
    static const T zero{};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }
  const T& lc() const { return (*this)[degree()]; }

  void set(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
    c_[i] = v;
    trim();
  }

  T operator()(const Rational& x) const {
    T acc{};
    for (int i = degree(); i >= 0; --i) acc = T(acc * x + c_[i]);
    return acc;
  }

  // Substitute a value from a larger ring (e.g. a polynomial) for the variable.
  template <class U>
  U compose(const U& x) const {
    U acc{};
    for (int i = degree(); i >= 0; --i) acc = acc * x + U(c_[i]);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(T(c_[i] * T(i)));
    return Polynomial(std::move(d));
  }

  // p(-x)
  Polynomial reflect() const {
    std::vector<T> d = c_;
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = T(-d[i]);
    return Polynomial(std::move(d));
  }

  // x^n p(1/x)
  Polynomial reverse(int n) const {
    std::vector<T> d(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) {
      if (i > n) throw std::invalid_argument("reverse: degree exceeds n");
      d[n - i] = c_[i];
    }
    return Polynomial(std::move(d));
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(T()));
    std::vector<U> d;
    d.reserve(c_.size());
    for (const auto& c : c_) d.push_back(f(c));
    return Polynomial<U>(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<T> d = c_;
    for (auto& c : d) c = T(-c);
    return Polynomial(std::move(d));
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] - o.c_[i]);
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_coef(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += T(a.c_[i] * b.c_[j]);
    }
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const Polynomial& a, const T& s) {
    if (is_zero_coef(s)) return {};
    std::vector<T> d = a.c_;
    for (auto& c : d) c = T(c * s);
    return Polynomial(std::move(d));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int k) const {
    Polynomial r(T(1)), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  // Division that is known to be exact; works over any coefficient domain
  // whose own exact_div is defined. Throws if a remainder appears.
  Polynomial exact_divide(const Polynomial& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < b.degree()) {
      if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
      return {};
    }
    std::vector<T> q(static_cast<std::size_t>(r.degree() - b.degree()) + 1);
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      T f = rlcsynth::exact_div(r.lc(), b.lc());
      q[k] = f;
      for (int i = 0; i <= b.degree(); ++i) r.c_[i + k] = T(r.c_[i + k] - f * b.c_[i]);
      r.trim();
    }
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return Polynomial(std::move(q));
  }

  // lc(b)^(deg a - deg b + 1) * a mod b
  Polynomial pseudo_remainder(const Polynomial& b) const {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    Polynomial r = *this;
    int delta = degree() - b.degree() + 1;
    if (delta <= 0) return r;
    const T& l = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      T f = r.lc();
      r = r * l - monomial(f, k) * b;
      --delta;
    }
    while (delta-- > 0) r = r * l;
    return r;
  }

 private:
  static bool is_zero_coef(const T& c) { return rlcsynth::is_zero(c); }
  void trim() {
    while (!c_.empty() && rlcsynth::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Polynomial<T>& p) { return p.is_zero(); }

template <class T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) { return a.exact_divide(b); }

using Poly = Polynomial<Rational>;  // univariate over Q
using BiPoly = Polynomial<Poly>;    // polynomial in z whose coefficients are polynomials in x

// Field operations on Poly.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic, or zero
Poly monic(const Poly& p);
Poly square_free(const Poly& p);
// Scale p by a positive rational so it has coprime integer coefficients.
Poly primitive_integer(const Poly& p);
int sign_at(const Poly& p, const Rational& x);

// Bivariate helpers on BiPoly (outer variable z, inner x).
Poly content(const BiPoly& p);  // gcd of x-coefficients (monic) or zero
BiPoly primitive_part(const BiPoly& p);
BiPoly bigcd(const BiPoly& a, const BiPoly& b);  // primitive gcd in Q[x][z]
BiPoly lift(const Poly& p);                      // constant in z
Poly eval_inner(const BiPoly& p, const Rational& x);  // p(x, z) at fixed x, as poly in z
BiPoly bivariate_x();                                  // the polynomial "x"
BiPoly bivariate_z();                                  // the polynomial "z"

Poly parse_poly(const std::string& text, bool descending = false);
std::string to_string(const Rational& r);
std::string to_string(const Poly& p, const std::string& var = "s");
Rational parse_rational(const std::string& text);

}  // namespace rlcsynth
