#include "rlcsynth/synth_bicubic.hpp"

#include <algorithm>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

const Poly kX = Poly::var();

BiPoly lift_s(const Poly& p) {
  return p.map([](const Rational& r) { return Poly(r); });
}

// sum_k p_k (-x)^(n-k)
Poly reversed_eval(const Poly& p, int n) {
  Poly acc;
  for (int k = 0; k <= n; ++k) acc += Poly(p[k]) * (-kX).pow(n - k);
  return acc;
}

ValueExpr frac(const Poly& num, const Poly& den) { return {lift(num), lift(den)}; }

bool nonneg_coeffs(const Poly& p, int n) {
  for (int i = 0; i <= n; ++i)
    if (sgn(p[i]) < 0) return false;
  return true;
}

// Degenerate classes reached from each condition: zero element when
// x = 0, when the paired lambda vanishes, when the paired coefficient vanishes.
struct Pairing {
  unsigned cond;
  const char* parent;
  const char* classes[3];
  const char* pinned[3];
};

const Pairing kPairings[] = {
    {C1, "N11", {"N18", "N17", "N16"}, {"R5", "G3", "R1"}},
    {C2, "N12", {"N21", "N20", "N19"}, {"R5", "G3", "R1"}},
    {C3, "N13", {"N24", "N23", "N22"}, {"R5", "R3", "G1"}},
    {C4, "N14", {"N27", "N26", "N25"}, {"R5", "R3", "G1"}},
    {C5, "N15", {"N30", "N28", "N29"}, {"R5", "R1", "G3"}},
};

// The two quantities whose vanishing pairs with a condition (besides x = 0).
std::pair<const Poly*, const Poly*> paired(const BicubicAux& aux, unsigned cond) {
  const BiquadAux<Poly>& q = aux.q;
  switch (cond) {
    case C1: return {&q.lambda1, &q.c0};
    case C2: return {&q.lambda3, &q.c2};
    case C3: return {&q.lambda4, &q.d0};
    case C4: return {&q.lambda2, &q.d2};
    default: return {&q.c0, &q.d2};
  }
}

std::pair<Poly, Poly> normalized(Poly a, Poly b) {
  bool pos = false;
  for (int i = 0; i <= 3; ++i)
    if (sgn(b[i]) > 0) pos = true;
  if (!pos) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

std::optional<SynthesisResult> search(const Poly& a, const Poly& b, Variant v, Mode mode, const std::string& tag) {
  BicubicAux aux = bicubic_aux(a, b, v);
  for (auto& cand : minimal_candidates(aux)) {
    SamplePoint pt{cand.x, std::nullopt};
    BicubicSigns s = bicubic_signs(aux, pt);
    unsigned conds = c_conditions(s, v);
    for (const Pairing& p : kPairings) {
      if (!(conds & p.cond)) continue;
      auto [lam, coef] = paired(aux, p.cond);
      int which = -1;
      if (sign_at_point(kX, pt) == 0) which = 0;
      else if (sign_at_point(*lam, pt) == 0) which = 1;
      else if (sign_at_point(*coef, pt) == 0) which = 2;
      if (which < 0) continue;
      std::string route = tag + (v == Variant::Shifted ? " shifted " : " reversed ") + bicubic_condition_names(p.cond) +
                          ", x = " + cand.reason + ", " + p.pinned[which] + " = 0";
      try {
        SynthesisResult r = finalize(ClassId{p.classes[which]}, bicubic_element_values(aux, p.cond), pt, a, b,
                                     route, mode);
        if (r.verified != Verification::Failed) return r;
      } catch (const SynthesisError& e) {
        if (e.kind() == ErrorKind::Undecided) throw;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

BicubicAux bicubic_aux(const Poly& a, const Poly& b, Variant v) {
  if (std::max(a.degree(), b.degree()) > 3) fail(ErrorKind::Precondition, "degree above 3");
  BicubicAux aux;
  aux.variant = v;
  aux.a = a;
  aux.b = b;
  aux.r0 = subresultants(a, b, 3)[0];
  if (sgn(aux.r0) == 0) fail(ErrorKind::NotCoprime, "R0(a,b) = 0");
  Matrix<Rational> bab = bezoutian(a, b, 3);
  std::vector<Poly> row = v == Variant::Shifted ? std::vector<Poly>{Poly(1), -kX, kX * kX}
                                           : std::vector<Poly>{kX * kX, -kX, Poly(1)};
  const Rational sign = v == Variant::Shifted ? 1 : -1;
  Poly c[3];
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) c[j] += row[i] * Poly(Rational(sign * bab[i][j]));
  if (v == Variant::Shifted) {
    aux.c = BiPoly{c[0], c[1], c[2]};
    aux.a_t = a.compose(-kX);
    aux.b_t = b.compose(-kX);
    aux.c_t = c[0] - kX * c[1] + kX * kX * c[2];
  } else {
    aux.c = BiPoly{Poly(), c[0], c[1], c[2]};
    aux.a_t = reversed_eval(a, 3);
    aux.b_t = reversed_eval(b, 3);
    aux.c_t = kX * kX * c[0] - kX * c[1] + c[2];
  }
  Matrix<Poly> bbc = bezoutian(lift_s(b), aux.c, 3);
  Poly d[3];
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) d[j] += row[i] * bbc[i][j];
  for (auto& dj : d) dj = aux.b_t * dj * Poly(sign);
  aux.d = BiPoly{d[0], d[1], d[2]};
  aux.q = biquad_aux<Poly>(c[0], c[1], c[2], d[0], d[1], d[2]);
  return aux;
}

BiquadAux<Rational> bicubic_aux_at(const BicubicAux& aux, const Rational& x, Rational* a_t, Rational* b_t,
                                   Rational* c_t) {
  if (a_t) *a_t = aux.a_t(x);
  if (b_t) *b_t = aux.b_t(x);
  if (c_t) *c_t = aux.c_t(x);
  const BiquadAux<Poly>& q = aux.q;
  return biquad_aux<Rational>(q.c0(x), q.c1(x), q.c2(x), q.d0(x), q.d1(x), q.d2(x));
}

BicubicSigns bicubic_signs(const BicubicAux& aux, SamplePoint& pt) {
  BicubicSigns s;
  s.q = biquad_signs(aux.q, [&](const Poly& p) { return sign_at_point(p, pt); });
  s.a_t = sign_at_point(aux.a_t, pt);
  s.b_t = sign_at_point(aux.b_t, pt);
  s.c_t = sign_at_point(aux.c_t, pt);
  s.r0 = sgn(aux.r0);
  s.coeffs_nonneg = nonneg_coeffs(aux.a, 3) && nonneg_coeffs(aux.b, 3);
  s.some_b_pos = false;
  for (int i = 0; i <= 3; ++i)
    if (sgn(aux.b[i]) > 0) s.some_b_pos = true;
  return s;
}

unsigned c_conditions(const BicubicSigns& s, Variant v) {
  const BiquadSigns& q = s.q;
  auto base = [&](int lambda) {
    return s.coeffs_nonneg && s.r0 > 0 && s.c_t >= 0 &&
           same_sign({s.a_t, s.b_t, q.c0, q.c1, q.c2, q.d0, q.d1, q.d2, lambda});
  };
  unsigned out = 0;
  if (v == Variant::Reversed) {
    if (base(q.lambda1) && q.alpha2 >= 0) out |= C5;
    return out;
  }
  if (base(q.lambda1) && q.alpha2 >= 0) out |= C1;
  if (base(q.lambda3) && q.alpha2 <= 0) out |= C2;
  if (base(q.lambda4) && q.alpha2 <= 0) out |= C3;
  if (base(q.lambda2) && q.alpha2 >= 0) out |= C4;
  return out;
}

unsigned ca_equivalents(const BicubicSigns& s) {
  const BiquadSigns& q = s.q;
  if (!(s.some_b_pos && same_sign({s.a_t, s.b_t}) && s.b_t != 0 && s.c_t > 0 && s.r0 > 0)) return 0;
  unsigned out = 0;
  if (q.c0 * q.d0 >= 0 && q.d2 * q.lambda1 >= 0 && q.alpha2 * q.d0 * q.d2 >= 0 && q.d0 != 0 && q.d2 != 0 &&
      q.alpha1 > 0)
    out |= CA1;
  if (q.c2 * q.d2 >= 0 && q.d0 * q.lambda3 >= 0 && -q.alpha2 * q.d0 * q.d2 >= 0 && q.d0 != 0 && q.d2 != 0 &&
      q.alpha3 < 0)
    out |= CA2;
  if (q.c0 * q.d0 >= 0 && q.c2 * q.lambda4 >= 0 && -q.alpha2 * q.c0 * q.c2 >= 0 && q.c0 != 0 && q.c2 != 0 &&
      q.alpha1 < 0)
    out |= CA3;
  if (q.c2 * q.d2 >= 0 && q.c0 * q.lambda2 >= 0 && q.alpha2 * q.c0 * q.c2 >= 0 && q.c0 != 0 && q.c2 != 0 &&
      q.alpha3 > 0)
    out |= CA4;
  return out;
}

std::string bicubic_condition_names(unsigned set) {
  static const char* names[] = {"C1", "C2", "C3", "C4", "C5", "CA1", "CA2", "CA3", "CA4"};
  std::string out;
  for (unsigned i = 0; i < 9; ++i)
    if (set & (1u << i)) out += (out.empty() ? "" : ",") + std::string(names[i]);
  return out;
}

std::string bicubic_class(unsigned cond) {
  for (const Pairing& p : kPairings)
    if (p.cond == cond) return p.parent;
  fail(ErrorKind::Precondition, "not a bicubic condition");
}

SymbolicValues bicubic_element_values(const BicubicAux& aux, unsigned cond) {
  const BiquadAux<Poly>& q = aux.q;
  const Poly &at = aux.a_t, &bt = aux.b_t, &ct = aux.c_t;
  const Poly r0(aux.r0);
  const Poly b4r0 = bt.pow(4) * r0;
  const Poly k = b4r0 * ct * ct;
  SymbolicValues v;
  v["R4"] = frac(at, bt);
  v["R5"] = frac(ct * kX, bt * bt);
  switch (cond) {
    case C1:
      v["R1"] = frac(ct * q.c0, q.d0);
      v["R2"] = frac(ct * q.alpha2, q.d0 * q.d2);
      v["G3"] = frac(q.d2 * q.lambda1, k);
      v["C1"] = frac(q.d2 * q.d2 * q.alpha1, k);
      v["L1"] = frac(ct * q.alpha1, q.d0 * q.d0);
      v["L2"] = frac(ct, bt * bt);
      break;
    case C2:
      v["R1"] = frac(ct * q.c2, q.d2);
      v["R2"] = frac(-(ct * q.alpha2), q.d0 * q.d2);
      v["G3"] = frac(q.d0 * q.lambda3, k);
      v["C1"] = frac(-(q.d2 * q.d2), ct * q.alpha3);
      v["L1"] = frac(-k, q.d0 * q.d0 * q.alpha3);
      v["L2"] = frac(ct, bt * bt);
      break;
    case C3:
      v["G1"] = frac(q.d0, ct * q.c0);
      v["G2"] = frac(-q.alpha2, ct * q.c0 * q.c2);
      v["R3"] = frac(q.c2 * q.lambda4, b4r0);
      v["C1"] = frac(-q.alpha1, ct * q.c0 * q.c0);
      v["L1"] = frac(-(q.c2 * q.c2 * q.alpha1), b4r0);
      v["L2"] = frac(ct, bt * bt);
      break;
    case C4:
      v["G1"] = frac(q.d2, ct * q.c2);
      v["G2"] = frac(q.alpha2, ct * q.c0 * q.c2);
      v["R3"] = frac(q.c0 * q.lambda2, b4r0);
      v["C1"] = frac(b4r0, q.c0 * q.c0 * q.alpha3);
      v["L1"] = frac(ct * q.c2 * q.c2, q.alpha3);
      v["L2"] = frac(ct, bt * bt);
      break;
    case C5:
      v["R1"] = frac(ct * q.c0, q.d0);
      v["R2"] = frac(ct * q.alpha1 * q.alpha1, q.d0 * q.lambda1);
      v["G3"] = frac(q.d2 * q.lambda1, k);
      v["C1"] = frac(bt * bt, ct);
      v["L1"] = frac(k * q.alpha1, q.lambda1 * q.lambda1);
      v["L2"] = frac(ct * q.alpha1, q.d0 * q.d0);
      break;
    default: fail(ErrorKind::Precondition, "not a bicubic condition");
  }
  return v;
}

std::vector<Candidate> minimal_candidates(const BicubicAux& aux) {
  const BiquadAux<Poly>& q = aux.q;
  std::vector<Candidate> out{{RootLocus::exact(0), "0"}};
  const std::pair<const Poly*, const char*> sources[] = {
      {&q.lambda1, "lambda1"}, {&q.lambda2, "lambda2"}, {&q.lambda3, "lambda3"}, {&q.lambda4, "lambda4"},
      {&q.c0, "c0"},           {&q.c2, "c2"},           {&q.d0, "d0"},           {&q.d2, "d2"}};
  for (const auto& [p, name] : sources) {
    if (p->degree() <= 0) continue;
    for (auto& r : isolate_roots(*p, true)) {
      bool dup = false;
      for (auto& c : out)
        if (compare(c.x, r) == 0) {
          dup = true;
          c.reason += std::string(",") + name;
          break;
        }
      if (!dup) out.push_back({r, std::string("root of ") + name});
    }
  }
  // insertion sort: compare refines the loci in place
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = i; j > 0 && compare(out[j].x, out[j - 1].x) < 0; --j) std::swap(out[j], out[j - 1]);
  return out;
}

SynthesisResult realize_bicubic_Z12(const Poly& a0, const Poly& b0, Mode mode) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() != 3) fail(ErrorKind::Precondition, "not bicubic");
  StorageCounts sc = storage_counts(z.num, z.den);
  if (!(sc == StorageCounts{1, 2}))
    fail(ErrorKind::NotInZ12, "storage counts (" + std::to_string(sc.capacitors) + "," +
                                  std::to_string(sc.inductors) + ") differ from (1,2)");
  auto [a, b] = normalized(z.num, z.den);
  auto [ra, rb] = normalized(z.den.reverse(3), z.num.reverse(3));
  for (Variant v : {Variant::Shifted, Variant::Reversed}) {
    if (auto r = search(a, b, v, mode, "bicubic")) return *r;
  }
  for (Variant v : {Variant::Shifted, Variant::Reversed}) {
    if (auto r = search(ra, rb, v, mode, "bicubic")) return transform_result(*r, Transform::P, z.num, z.den);
  }
  fail(ErrorKind::NotInZ12, "no candidate witness satisfies C1-C5 in either orientation");
}

bool c6_holds(const Poly& a, const Poly& b) {
  if (!nonneg_coeffs(a, 3) || !nonneg_coeffs(b, 3)) return false;
  std::vector<Rational> r = subresultants(a, b, 3);
  for (const Rational& v : {b[3], b[2], b[1], Rational(b[1] * b[2] - b[0] * b[3]), r[2], r[1], r[0]})
    if (sgn(v) <= 0) return false;
  return true;
}

SynthesisResult cauer_realize(const Poly& a0, const Poly& b0) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() < 3) return realize_low(z.num, z.den);
  if (z.degree() != 3) fail(ErrorKind::Precondition, "degree above 3");
  if (!c6_holds(z.num, z.den)) fail(ErrorKind::NotInZ30, "condition C6 fails");
  Poly n = z.num, d = z.den;
  const Poly s = Poly::var();
  auto need = [](const Poly& p, int deg) {
    if (p.degree() != deg) fail(ErrorKind::NotInZ30, "continued fraction ends early");
  };
  // alternate: series resistor Z(inf), shunt capacitor from the admittance pole at infinity
  ValueMap v;
  v["R1"] = Rational(n[3] / d[3]);
  n -= d * Poly(v["R1"]);
  need(n, 2);
  v["C3"] = Rational(d[3] / n[2]);
  d -= s * n * Poly(v["C3"]);
  need(d, 2);
  v["R2"] = Rational(n[2] / d[2]);
  n -= d * Poly(v["R2"]);
  need(n, 1);
  v["C2"] = Rational(d[2] / n[1]);
  d -= s * n * Poly(v["C2"]);
  need(d, 1);
  v["R3"] = Rational(n[1] / d[1]);
  n -= d * Poly(v["R3"]);
  need(n, 0);
  v["G4"] = Rational(d[0] / n[0]);
  v["C1"] = Rational(d[1] / n[0]);
  try {
    return finalize(ClassId{"N10"}, v, z.num, z.den, "Cauer C6");
  } catch (const SynthesisError& e) {
    if (e.kind() == ErrorKind::InvalidElementValue) fail(ErrorKind::NotInZ30, e.what());
    throw;
  }
}

SynthesisResult realize_bicubic_Z3(const Poly& a0, const Poly& b0, Mode mode) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() != 3) fail(ErrorKind::Precondition, "not bicubic");
  StorageCounts sc = storage_counts(z.num, z.den);
  try {
    if (sc == StorageCounts{3, 0}) return cauer_realize(z.num, z.den);
    if (sc == StorageCounts{0, 3}) return dual_result(cauer_realize(z.den, z.num), z.num, z.den);
    if (sc == StorageCounts{1, 2}) return realize_bicubic_Z12(z.num, z.den, mode);
    if (sc == StorageCounts{2, 1})
      return dual_result(realize_bicubic_Z12(z.den, z.num, mode), z.num, z.den);
  } catch (const SynthesisError& e) {
    if (e.kind() == ErrorKind::NotInZ12 || e.kind() == ErrorKind::NotInZ30) fail(ErrorKind::NotInZ3, e.what());
    throw;
  }
  fail(ErrorKind::NotInZ3, "unexpected storage counts");
}

std::pair<bool, bool> essential_regular_necessary(const Poly& a, const Poly& b) {
  auto m = [&](int i, int j) { return sgn(Rational(a[i] * b[j] - a[j] * b[i])); };
  return {same_sign({m(3, 2), m(3, 1), m(3, 0)}), same_sign({m(3, 0), m(2, 0), m(1, 0)})};
}

}  // namespace rlcsynth
