#include "rlcsynth/synth_low.hpp"

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

BiquadSigns biquad_signs(const BiquadAux<Rational>& q) {
  return biquad_signs(q, [](const Rational& v) { return sgn(v); });
}

unsigned q_conditions(const BiquadSigns& s) {
  unsigned out = 0;
  auto base = [&](int lambda) { return same_sign({s.c0, s.c1, s.c2, s.d0, s.d1, s.d2, lambda}); };
  if (base(s.lambda1) && s.alpha2 >= 0) out |= Q1;
  if (base(s.lambda2) && s.alpha2 >= 0) out |= Q2;
  if (base(s.lambda3) && s.alpha2 <= 0) out |= Q3;
  if (base(s.lambda4) && s.alpha2 <= 0) out |= Q4;
  return out;
}

unsigned q_conditions(const BiquadAux<Rational>& q) {
  if (sgn(q.r0) == 0) fail(ErrorKind::NotCoprime, "R0(c,d) = 0");
  return q_conditions(biquad_signs(q));
}

unsigned qa_equivalents(const BiquadSigns& s) {
  unsigned out = 0;
  if (s.c0 * s.d0 >= 0 && s.d2 * s.lambda1 >= 0 && s.alpha2 * s.d0 * s.d2 >= 0 && s.d0 != 0 && s.d2 != 0 &&
      s.alpha1 > 0)
    out |= QA;
  if (s.c2 * s.d2 >= 0 && s.d0 * s.lambda3 >= 0 && -s.alpha2 * s.d0 * s.d2 >= 0 && s.d0 != 0 && s.d2 != 0 &&
      s.alpha3 < 0)
    out |= QB;
  if (s.c0 * s.d0 >= 0 && s.c2 * s.lambda4 >= 0 && -s.alpha2 * s.c0 * s.c2 >= 0 && s.c0 != 0 && s.c2 != 0 &&
      s.alpha1 < 0)
    out |= QC;
  if (s.c2 * s.d2 >= 0 && s.c0 * s.lambda2 >= 0 && s.alpha2 * s.c0 * s.c2 >= 0 && s.c0 != 0 && s.c2 != 0 &&
      s.alpha3 > 0)
    out |= QD;
  if (same_sign({s.c2, s.d0, s.d2, s.lambda3}) && s.d2 != 0 && s.lambda3 != 0 && s.alpha3 < 0) out |= QE;
  if (same_sign({s.c0, s.d0, s.d2, s.lambda1}) && s.d0 != 0 && s.lambda1 != 0 && s.alpha1 > 0) out |= QF;
  if (same_sign({s.c0, s.c2, s.d0, s.lambda4}) && s.c0 != 0 && s.lambda4 != 0 && s.alpha1 < 0) out |= QG;
  return out;
}

std::string condition_names(unsigned set) {
  static const char* names[] = {"Q1", "Q2", "Q3", "Q4", "QA", "QB", "QC", "QD", "QE", "QF", "QG"};
  std::string out;
  for (unsigned i = 0; i < 11; ++i)
    if (set & (1u << i)) out += (out.empty() ? "" : ",") + std::string(names[i]);
  return out;
}

std::string biquad_class(unsigned conds, int r0_sign) {
  if (r0_sign < 0) {
    if (conds & Q1) return "N6";
    if (conds & Q3) return "N7";
    if (conds & Q4) return "N8";
    if (conds & Q2) return "N9";
  } else if (r0_sign > 0) {
    if (conds & (Q1 | Q2)) return "N5";
    if (conds & (Q3 | Q4)) return "N4";
  }
  return "";
}

SynthesisResult realize_constant(const Rational& v) {
  if (sgn(v) < 0) fail(ErrorKind::NotPassive, "negative constant impedance");
  return finalize(ClassId{"N1"}, ValueMap{{"R1", v}}, Poly(v), Poly(1), "constant");
}

SynthesisResult realize_bilinear(const Poly& a0, const Poly& b0) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() == 0) return realize_low(z.num, z.den);
  if (z.degree() != 1) fail(ErrorKind::Precondition, "not bilinear");
  Poly a = z.num, b = z.den;
  bool pos = false, neg = false;
  for (const Poly* p : {&a, &b})
    for (int i = 0; i <= 1; ++i) {
      if (sgn((*p)[i]) > 0) pos = true;
      if (sgn((*p)[i]) < 0) neg = true;
    }
  if (pos && neg) fail(ErrorKind::NotPassive, "bilinear coefficients of mixed sign");
  if (neg) {
    a = -a;
    b = -b;
  }
  Rational sigma = a[1] * b[0] - a[0] * b[1];
  if (sgn(sigma) < 0) {
    Rational ms = -sigma;
    return finalize(ClassId{"N2"},
                    ValueMap{{"R1", Rational(a[1] / b[1])}, {"C1", Rational(b[1] * b[1] / ms)},
                             {"G2", Rational(b[0] * b[1] / ms)}},
                    a, b, "bilinear RC");
  }
  return finalize(ClassId{"N3"},
                  ValueMap{{"R1", Rational(a[0] / b[0])}, {"G2", Rational(b[0] * b[1] / sigma)},
                           {"L1", Rational(sigma / (b[0] * b[0]))}},
                  a, b, "bilinear RL");
}

SynthesisResult realize_biquadratic(const Poly& c0, const Poly& d0) {
  Impedance z = Impedance::of(c0, d0);
  if (z.is_open() || z.degree() < 2) return realize_low(z.num, z.den);
  if (z.degree() != 2) fail(ErrorKind::Precondition, "not biquadratic");
  BiquadAux<Rational> q = biquad_aux(z.num, z.den);
  if (sgn(q.r0) == 0) fail(ErrorKind::NotCoprime, "R0(c,d) = 0");
  unsigned conds = q_conditions(biquad_signs(q));
  std::string cls = biquad_class(conds, sgn(q.r0));
  if (cls.empty()) fail(ErrorKind::NotInZ2, "no regularity condition holds");
  ValueMap v;
  for (const auto& [label, f] : biquad_element_values(q, cls)) v[label] = Rational(f.num / f.den);
  return finalize(ClassId{cls}, v, z.num, z.den, "biquadratic " + condition_names(conds));
}

SynthesisResult realize_low(const Poly& a, const Poly& b) {
  Impedance z = Impedance::of(a, b);
  if (z.is_open()) return finalize(ClassId{"N1", Transform::D}, ValueMap{{"R1", 0}}, z.num, z.den, "open circuit");
  switch (z.degree()) {
    case 0: return realize_constant(Rational(z.num[0] / z.den[0]));
    case 1: return realize_bilinear(z.num, z.den);
    case 2: return realize_biquadratic(z.num, z.den);
    default: fail(ErrorKind::Precondition, "degree above 2");
  }
}

}  // namespace rlcsynth
