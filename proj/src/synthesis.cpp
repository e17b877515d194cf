#include "rlcsynth/synthesis.hpp"

#include <algorithm>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

char kind_in(const TemplateNode& t, const std::string& label) {
  if (t.type == TemplateNode::Type::Leaf) return t.label == label ? t.kind : 0;
  for (const auto& c : t.children)
    if (char k = kind_in(c, label)) return k;
  return 0;
}

std::string expr_string(const ValueExpr& v) {
  auto bi = [](const BiPoly& p) {
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
      if (p[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + to_string(p[k], "x") + ")";
      if (k >= 1) s += "*z";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? std::string("0") : s;
  };
  return "(" + bi(v.num) + ")/(" + bi(v.den) + ")";
}

Rational abs_max_scale(const Poly& a, const Poly& d) {
  Rational m = 0;
  for (const auto& x : a.coeffs())
    for (const auto& y : d.coeffs()) m = std::max(m, Rational(abs(x) * abs(y)));
  return m;
}

bool close_enough(const Poly& a, const Poly& b, const Impedance& z, int bits) {
  if (z.is_short()) return a.is_zero();
  if (z.is_open()) return b.is_zero();
  Poly diff = a * z.den - b * z.num;
  Rational scale = std::max(abs_max_scale(a, z.den), abs_max_scale(b, z.num));
  Integer two = 1;
  mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  Rational tol = scale / Rational(two);
  for (const auto& c : diff.coeffs())
    if (abs(c) > tol) return false;
  return true;
}

}  // namespace

const char* verification_name(Verification v) {
  switch (v) {
    case Verification::Exact: return "exact";
    case Verification::IntervalVerified: return "interval-verified";
    case Verification::Failed: return "failed";
  }
  return "failed";
}

SynthesisResult finalize(const ClassId& id, const SymbolicValues& values0, std::optional<SamplePoint> witness,
                         const Poly& a, const Poly& b, const std::string& route, Mode mode) {
  const ClassTemplate& t = class_template(id.base);
  SamplePoint pt = witness ? *witness : SamplePoint::at(0);
  SymbolicValues values = values0;
  SynthesisResult r;
  r.class_id = id;
  r.route = route;
  r.witness = witness;

  std::map<std::string, int> signs;
  for (const auto& p : t.params) {
    auto it = values.find(p);
    if (it == values.end()) {
      if (p != t.pinned) fail(ErrorKind::Precondition, id.base + ": no value for " + p);
      values[p] = ValueExpr::constant(0);
      it = values.find(p);
    }
    int sd = sign_at_point(it->second.den, pt);
    if (sd == 0) fail(ErrorKind::InvalidElementValue, id.base + ": " + p + " has a vanishing denominator");
    int s = sd * sign_at_point(it->second.num, pt);
    char k = kind_in(t.root, p);
    bool strict = k == 'L' || k == 'C' || std::find(t.strict.begin(), t.strict.end(), p) != t.strict.end();
    if (p == t.pinned && s != 0) fail(ErrorKind::InvalidElementValue, id.base + ": " + p + " must vanish");
    if (s < 0 || (strict && s == 0))
      fail(ErrorKind::InvalidElementValue, id.base + ": " + p + " violates its sign condition");
    signs[p] = s;
  }

  bool rational = !witness || pt.is_rational();
  ValueMap exact;
  for (const auto& p : t.params) {
    const ValueExpr& v = values.at(p);
    ElementValue ev;
    ev.label = p;
    ev.kind = kind_in(t.root, p);
    if (rational) {
      Rational x = Rational(*rational_value(v.num, pt) / *rational_value(v.den, pt));
      ev.exact = x;
      ev.decimal = to_decimal(x, 20);
      exact[p] = x;
    } else {
      if (signs[p] == 0) {
        ev.exact = Rational(0);
        ev.decimal = "0";
      } else {
        ev.expression = expr_string(v);
        ev.decimal = decimal_value(v.num, v.den, pt, 20);
      }
    }
    r.values.push_back(ev);
  }

  Impedance target = Impedance::of(a, b);
  if (rational) {
    r.network = instantiate(id, exact);
    r.verified = impedance(r.network) == target ? Verification::Exact : Verification::Failed;
    return r;
  }

  auto approx_values = [&](int bits) {
    ValueMap m;
    for (const auto& p : t.params) {
      if (signs[p] == 0) {
        m[p] = 0;
        continue;
      }
      int extra = 0;
      Rational x;
      do {
        x = approximate_value(values.at(p).num, values.at(p).den, pt, bits + extra);
        extra += 64;
      } while (sgn(x) <= 0 && bits + extra <= precision_budget());
      if (sgn(x) <= 0) fail(ErrorKind::Undecided, "cannot approximate a positive element value");
      m[p] = x;
    }
    return m;
  };

  r.approximate_network = true;
  r.network = instantiate(id, approx_values(128));
  if (mode == Mode::Fast) {
    Node fine = instantiate(id, approx_values(256));
    r.verified = close_enough(a, b, impedance(fine), 200) ? Verification::IntervalVerified : Verification::Failed;
    return r;
  }

  // exact symbolic route over Q[x][z]
  TemplateNode tt = transform_template(t.root, id.transform);
  auto sym = symbolic_impedance<BiPoly>(tt, [&](const std::string& l) -> std::optional<std::pair<BiPoly, BiPoly>> {
    if (signs.at(l) == 0) return std::nullopt;
    const ValueExpr& v = values.at(l);
    return std::make_pair(v.num, v.den);
  });
  using K = SymImpedance<BiPoly>::Kind;
  bool ok;
  if (sym.kind == K::Short) {
    ok = a.is_zero();
  } else if (sym.kind == K::Open) {
    ok = b.is_zero();
  } else {
    auto lifted = [](const Poly& p) {
      std::vector<BiPoly> c;
      for (const auto& x : p.coeffs()) c.emplace_back(Poly(x));
      return Polynomial<BiPoly>(std::move(c));
    };
    Polynomial<BiPoly> diff = lifted(a) * sym.den - lifted(b) * sym.num;
    ok = true;
    for (const auto& c : diff.coeffs())
      if (sign_at_point(c, pt) != 0) ok = false;
    bool den_nonzero = false;
    for (const auto& c : sym.den.coeffs())
      if (sign_at_point(c, pt) != 0) den_nonzero = true;
    ok = ok && den_nonzero;
  }
  r.verified = ok ? Verification::Exact : Verification::Failed;
  return r;
}

SynthesisResult finalize(const ClassId& id, const ValueMap& values, const Poly& a, const Poly& b,
                         const std::string& route) {
  SymbolicValues sv;
  for (const auto& [k, v] : values) sv[k] = ValueExpr::constant(v);
  return finalize(id, sv, std::nullopt, a, b, route);
}

SynthesisResult transform_result(SynthesisResult r, Transform t, const Poly& a, const Poly& b) {
  r.class_id.transform = compose(t, r.class_id.transform);
  r.network = transform(r.network, t);
  r.route = std::string(t == Transform::D ? "dual" : t == Transform::P ? "p-transform" : "i-transform") + " of " +
            r.route;
  if (!r.approximate_network)
    r.verified = impedance(r.network) == Impedance::of(a, b) ? Verification::Exact : Verification::Failed;
  return r;
}

SynthesisResult dual_result(SynthesisResult r, const Poly& a, const Poly& b) {
  return transform_result(std::move(r), Transform::D, a, b);
}

}  // namespace rlcsynth
