#include "rlcsynth/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPassive: return "NotPassive";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotInZ2: return "NotInZ2";
    case ErrorKind::NotInZ12: return "NotInZ12";
    case ErrorKind::NotInZ30: return "NotInZ30";
    case ErrorKind::NotInZ3: return "NotInZ3";
    case ErrorKind::Undecided: return "Undecided";
    case ErrorKind::InvalidElementValue: return "InvalidElementValue";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Precondition: return "PreconditionViolation";
  }
  return "Error";
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational inv = 1 / b.lc();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational f = r[k + db] * inv;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (int i = 0; i <= db; ++i) r[i + k] -= f * b[i];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.lc());
}

Poly primitive_integer(const Poly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    v.emplace_back(n);
  }
  for (auto& c : v) c /= g;
  return Poly(std::move(v));
}

Poly gcd(Poly a, Poly b) {
  a = primitive_integer(a);
  b = primitive_integer(b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_integer(r);
  }
  return monic(a);
}

Poly square_free(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = gcd(p, p.derivative());
  return monic(divmod(p, g).first);
}

int sign_at(const Poly& p, const Rational& x) { return sgn(p(x)); }

Poly content(const BiPoly& p) {
  Poly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) return g;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  Poly g = content(p);
  // keep the leading x-coefficient of the leading z-coefficient positive
  BiPoly q = p.map([&](const Poly& c) { return divmod(c, g).first; });
  if (sgn(q.lc().lc()) < 0) q = -q;
  return q;
}

BiPoly bigcd(const BiPoly& a0, const BiPoly& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  Poly ca = content(a0), cb = content(b0);
  Poly cg = gcd(ca, cb);
  BiPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero() && b.degree() > 0) {
    BiPoly r = a.pseudo_remainder(b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  if (!b.is_zero()) return lift(cg);  // b is a nonzero constant in z
  return a * cg;
}

BiPoly lift(const Poly& p) { return BiPoly(p); }

Poly eval_inner(const BiPoly& p, const Rational& x) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c(x));
  return Poly(std::move(v));
}

BiPoly bivariate_x() { return BiPoly(Poly::var()); }
BiPoly bivariate_z() { return BiPoly::monomial(Poly(1), 1); }

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(ErrorKind::Parse, "empty number");
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string body = t;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  Rational r;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!digits(n) || !digits(d)) fail(ErrorKind::Parse, "bad rational '" + text + "'");
    Integer dn(d, 10);
    if (dn == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    r = Rational(Integer(n, 10), dn);
  } else if (dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits(ip) || (!fp.empty() && !digits(fp))) fail(ErrorKind::Parse, "bad decimal '" + text + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    r = Rational(Integer(ip + fp, 10), scale);
  } else {
    if (!digits(body)) fail(ErrorKind::Parse, "bad number '" + text + "'");
    r = Rational(Integer(body, 10));
  }
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

Poly parse_poly(const std::string& text, bool descending) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    try {
      v.push_back(parse_rational(text.substr(start, end - start)));
    } catch (const SynthesisError& e) {
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      fail(ErrorKind::Parse, msg + " (coefficient " + std::to_string(v.size()) + " at position " +
                                 std::to_string(start + 1) + ")");
    }
    start = end + 1;
  }
  if (v.empty()) fail(ErrorKind::Parse, "empty coefficient list");
  if (descending) std::reverse(v.begin(), v.end());
  return Poly(std::move(v));
}

}  // namespace rlcsynth
