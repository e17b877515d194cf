#pragma once

#include <array>
#include <map>
#include <string>

#include "rlcsynth/subresultant.hpp"
#include "rlcsynth/synthesis.hpp"

namespace rlcsynth {

// c, d coefficients and the derived quantities alpha1-3, lambda1-4, R0(c,d)
// over any commutative ring T (Rational, Q[x], Q[x][z]).
template <class T>
struct BiquadAux {
  T c0, c1, c2, d0, d1, d2;
  T alpha1, alpha2, alpha3, lambda1, lambda2, lambda3, lambda4, r0;
};

template <class T>
BiquadAux<T> biquad_aux(const T& c0, const T& c1, const T& c2, const T& d0, const T& d1, const T& d2) {
  BiquadAux<T> q{c0, c1, c2, d0, d1, d2, {}, {}, {}, {}, {}, {}, {}, {}};
  q.alpha1 = c1 * d0 - c0 * d1;
  q.alpha2 = c2 * d0 - c0 * d2;
  q.alpha3 = c2 * d1 - c1 * d2;
  q.lambda1 = d1 * q.alpha1 - d0 * q.alpha2;
  q.lambda2 = c1 * q.alpha3 - c2 * q.alpha2;
  q.lambda3 = d2 * q.alpha2 - d1 * q.alpha3;
  q.lambda4 = c0 * q.alpha2 - c1 * q.alpha1;
  q.r0 = q.alpha1 * q.alpha3 - q.alpha2 * q.alpha2;
  return q;
}

inline BiquadAux<Rational> biquad_aux(const Poly& c, const Poly& d) {
  return biquad_aux<Rational>(c[0], c[1], c[2], d[0], d[1], d[2]);
}

// Signs of the aux quantities, enough to decide every clause.
struct BiquadSigns {
  int c0, c1, c2, d0, d1, d2, alpha1, alpha2, alpha3, lambda1, lambda2, lambda3, lambda4, r0;
};

template <class T, class SignFn>
BiquadSigns biquad_signs(const BiquadAux<T>& q, SignFn sign) {
  return {sign(q.c0),     sign(q.c1),     sign(q.c2),      sign(q.d0),      sign(q.d1),
          sign(q.d2),     sign(q.alpha1), sign(q.alpha2),  sign(q.alpha3),  sign(q.lambda1),
          sign(q.lambda2), sign(q.lambda3), sign(q.lambda4), sign(q.r0)};
}
BiquadSigns biquad_signs(const BiquadAux<Rational>& q);

enum Cond : unsigned {
  Q1 = 1u << 0, Q2 = 1u << 1, Q3 = 1u << 2, Q4 = 1u << 3,
  QA = 1u << 4, QB = 1u << 5, QC = 1u << 6, QD = 1u << 7, QE = 1u << 8, QF = 1u << 9, QG = 1u << 10,
};

unsigned q_conditions(const BiquadSigns& s);
// throws NotCoprime when R0(c,d) = 0
unsigned q_conditions(const BiquadAux<Rational>& q);
unsigned qa_equivalents(const BiquadSigns& s);
std::string condition_names(unsigned set);

// Element values of N4-N9 as quotients over T for the given condition.
template <class T>
struct Fraction {
  T num, den;
};

template <class T>
std::map<std::string, Fraction<T>> biquad_element_values(const BiquadAux<T>& q, const std::string& cls) {
  const T& r0 = q.r0;
  if (cls == "N6")
    return {{"R1", {q.c0, q.d0}},
            {"R2", {q.alpha2, T(q.d0 * q.d2)}},
            {"G3", {T(-(q.d2 * q.lambda1)), r0}},
            {"C1", {T(-(q.d2 * q.d2 * q.alpha1)), r0}},
            {"L1", {q.alpha1, T(q.d0 * q.d0)}}};
  if (cls == "N7")
    return {{"R1", {q.c2, q.d2}},
            {"R2", {T(-q.alpha2), T(q.d0 * q.d2)}},
            {"G3", {T(-(q.d0 * q.lambda3)), r0}},
            {"C1", {T(-(q.d2 * q.d2)), q.alpha3}},
            {"L1", {r0, T(q.d0 * q.d0 * q.alpha3)}}};
  if (cls == "N8")
    return {{"G1", {q.d0, q.c0}},
            {"G2", {T(-q.alpha2), T(q.c0 * q.c2)}},
            {"R3", {T(-(q.c2 * q.lambda4)), r0}},
            {"C1", {T(-q.alpha1), T(q.c0 * q.c0)}},
            {"L1", {T(q.c2 * q.c2 * q.alpha1), r0}}};
  if (cls == "N9")
    return {{"G1", {q.d2, q.c2}},
            {"G2", {q.alpha2, T(q.c0 * q.c2)}},
            {"R3", {T(-(q.c0 * q.lambda2)), r0}},
            {"C1", {T(-r0), T(q.c0 * q.c0 * q.alpha3)}},
            {"L1", {T(q.c2 * q.c2), q.alpha3}}};
  if (cls == "N5")
    return {{"R1", {q.c0, q.d0}},
            {"R2", {T(q.alpha1 * q.alpha1), T(q.d0 * q.lambda1)}},
            {"G3", {T(q.d2 * q.lambda1), r0}},
            {"L1", {T(q.alpha1 * r0), T(q.lambda1 * q.lambda1)}},
            {"L2", {q.alpha1, T(q.d0 * q.d0)}}};
  if (cls == "N4")
    return {{"R1", {q.c2, q.d2}},
            {"R2", {T(q.alpha3 * q.alpha3), T(q.d2 * q.lambda3)}},
            {"G3", {T(q.d0 * q.lambda3), r0}},
            {"C1", {T(-(q.lambda3 * q.lambda3)), T(q.alpha3 * r0)}},
            {"C2", {T(-(q.d2 * q.d2)), q.alpha3}}};
  fail(ErrorKind::Precondition, "no biquadratic element formulas for " + cls);
}

// Class chosen for a condition set and R0 sign (preference Q1, Q3, Q4, Q2),
// or "" when no condition holds.
std::string biquad_class(unsigned conds, int r0_sign);

SynthesisResult realize_constant(const Rational& v);
SynthesisResult realize_bilinear(const Poly& a, const Poly& b);
SynthesisResult realize_biquadratic(const Poly& c, const Poly& d);
// Dispatch by McMillan degree 0, 1 or 2.
SynthesisResult realize_low(const Poly& a, const Poly& b);

}  // namespace rlcsynth
