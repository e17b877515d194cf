#include "rlcsynth/roots.hpp"

#include <algorithm>
#include <functional>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

int g_budget_bits = 4096;

Rational pow2(long k) {
  Integer v = 1;
  if (k >= 0) {
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(v);
  }
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  return Rational(Integer(1), v);
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Simplest rational in (lo, hi) for 0 <= lo < hi; hi_inf means hi = +inf.
Rational simplest_nonneg(const Rational& lo, const Rational& hi, bool hi_inf) {
  Integer n = floor_of(lo);
  if (hi_inf || Rational(n + 1) < hi) return Rational(n + 1);
  Rational lf = lo - n, hf = hi - n;  // 0 <= lf < hf <= 1
  Rational inner;
  if (sgn(lf) == 0)
    inner = simplest_nonneg(Rational(1 / hf), Rational(0), true);
  else
    inner = simplest_nonneg(Rational(1 / hf), Rational(1 / lf), false);
  return Rational(n + 1 / inner);
}

bool interval_excludes_zero(const Poly& g, const RootLocus& at, int& s) {
  Rational m = at.midpoint();
  Rational r = Rational(at.width() / 2);
  Rational gm = g(m);
  Rational big = std::max(abs(at.lo), abs(at.hi));
  Rational lip = 0, pw = 1;
  for (int i = 1; i <= g.degree(); ++i) {
    lip += abs(g[i]) * i * pw;
    pw *= big;
  }
  if (abs(gm) > lip * r) {
    s = sgn(gm);
    return true;
  }
  return false;
}

}  // namespace

int precision_budget() { return g_budget_bits; }
void set_precision_budget(int bits) { g_budget_bits = bits; }

RootLocus RootLocus::exact(const Rational& r) {
  RootLocus l;
  l.defining = Poly{Rational(-r), Rational(1)};
  l.lo = r;
  l.hi = r;
  return l;
}

void RootLocus::refine() {
  if (is_rational()) return;
  Rational m = midpoint();
  int s = sgn(defining(m));
  if (s == 0) {
    lo = hi = m;
  } else if (s == sign_lo) {
    lo = m;
  } else {
    hi = m;
  }
}

SturmSequence::SturmSequence(const Poly& f) {
  Poly p0 = primitive_integer(square_free(f));
  if (p0.is_zero()) return;
  seq_.push_back(p0);
  Poly p1 = primitive_integer(p0.derivative());
  while (!p1.is_zero()) {
    seq_.push_back(p1);
    Poly r = divmod(seq_[seq_.size() - 2], p1).second;
    p1 = primitive_integer(-r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

Rational cauchy_bound(const Poly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f[i] / f.lc())));
  return Rational(m + 1);
}

std::vector<RootLocus> isolate_roots(const Poly& f0, bool nonnegative_only) {
  std::vector<RootLocus> out;
  if (f0.degree() <= 0) return out;
  Poly f = primitive_integer(square_free(f0));
  bool zero_root = false;
  if (nonnegative_only && sgn(f[0]) == 0) {
    zero_root = true;
    f = primitive_integer(divmod(f, Poly{Rational(0), Rational(1)}).first);
    out.push_back(RootLocus::exact(0));
  }
  if (f.degree() <= 0) return out;
  SturmSequence sturm(f);
  // power-of-two bound keeps every bisection point dyadic
  Rational b = cauchy_bound(f);
  long k = 0;
  while (pow2(k) <= b) ++k;
  Rational hi = pow2(k), lo = nonnegative_only ? Rational(0) : Rational(-hi);
  int total = sturm.count(lo, hi);
  (void)zero_root;

  std::function<void(const Rational&, const Rational&, int)> rec = [&](const Rational& a, const Rational& c,
                                                                         int n) {
    if (n <= 0) return;
    if (n == 1) {
      RootLocus l;
      l.defining = f;
      l.lo = a;
      l.hi = c;
      l.sign_lo = sgn(f(a));
      out.push_back(l);
      return;
    }
    // split point that is not itself a root, so loci never have root endpoints
    Rational m = Rational((a + c) / 2);
    for (long j = 2; sgn(f(m)) == 0; ++j) {
      Rational step = Rational((c - a) / 2) * pow2(-j);
      m = Rational((a + c) / 2 + ((j % 2) ? step : Rational(-step)));
    }
    int left = sturm.count(a, m);
    rec(a, m, left);
    rec(m, c, n - left);
  };
  rec(lo, hi, total);

  // Best-effort detection of rational roots: a root p/q has q | lc(f), so
  // once the interval is narrower than 1/lc^2 the simplest rational in it
  // is the only candidate.
  std::size_t lc_bits = mpz_sizeinbase(f.lc().get_num_mpz_t(), 2);
  int steps = static_cast<int>(std::min<std::size_t>(2 * lc_bits + 6, 160));
  for (auto& l : out) {
    if (l.is_rational()) continue;
    for (int i = 0; i < steps && !l.is_rational(); ++i) {
      Rational cand = simplest_between(l.lo, l.hi);
      if (sgn(f(cand)) == 0) {
        l.lo = l.hi = cand;
        break;
      }
      l.refine();
    }
  }
  return out;
}

int sign_at(const Poly& g, RootLocus& at) {
  if (g.is_zero()) return 0;
  if (at.is_rational()) return sgn(g(at.lo));
  if (g.degree() == 0) return sgn(g[0]);
  Poly h = gcd(g, at.defining);
  if (h.degree() >= 1) {
    int s1 = sgn(h(at.lo)), s2 = sgn(h(at.hi));
    if (s1 != s2) return 0;
  }
  Rational floor_width = pow2(-g_budget_bits);
  while (true) {
    if (at.is_rational()) return sgn(g(at.lo));
    int s = 0;
    if (interval_excludes_zero(g, at, s)) return s;
    if (at.width() < floor_width) fail(ErrorKind::Undecided, "precision budget exhausted in sign evaluation");
    at.refine();
  }
}

int compare(RootLocus& a, RootLocus& b) {
  if (a.is_rational() && b.is_rational()) return cmp(a.lo, b.lo) < 0 ? -1 : (a.lo == b.lo ? 0 : 1);
  if (a.is_rational()) return -sign_at(Poly{Rational(-a.lo), Rational(1)}, b);
  if (b.is_rational()) return sign_at(Poly{Rational(-b.lo), Rational(1)}, a);
  while (true) {
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    if (sign_at(b.defining, a) == 0) {
      while (true) {
        if (a.is_rational()) return compare(a, b);
        if (b.lo <= a.lo && a.hi <= b.hi) return 0;
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        a.refine();
      }
    }
    a.refine();
    b.refine();
  }
}

Rational approximate(RootLocus& at, int bits) {
  Rational w = pow2(-bits);
  while (!at.is_rational() && at.width() >= w) at.refine();
  return at.midpoint();
}

std::string to_decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational v = abs(r) * scale + Rational(1, 2);
  Integer n = floor_of(v);
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string ip = s.substr(0, s.size() - digits), fp = s.substr(s.size() - digits);
  while (!fp.empty() && fp.back() == '0') fp.pop_back();
  std::string out = (sgn(r) < 0 && (n != 0)) ? "-" : "";
  out += ip;
  if (!fp.empty()) out += "." + fp;
  return out;
}

std::string to_decimal(RootLocus& at, int digits) {
  if (at.is_rational()) return to_decimal(at.lo, digits);
  return to_decimal(approximate(at, digits * 4 + 8), digits);
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(hi) <= 0) return Rational(-simplest_nonneg(Rational(-hi), Rational(-lo), false));
  return simplest_nonneg(lo, hi, false);
}

}  // namespace rlcsynth
