#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rlcsynth/synth_low.hpp"

namespace rlcsynth {

enum class Variant { Shifted, Reversed };

// Aux quantities of a bicubic a/b as polynomials in the witness x.
// Shifted: [c0 c1 c2] = [1 -x x^2] B(a,b), c(s) = c2 s^2 + c1 s + c0,
//     tildes are evaluations at -x, [d0 d1 d2] = b~ [1 -x x^2] B(b,c).
// Reversed: [c0 c1 c2] = -[x^2 -x 1] B(a,b), c(s) = c2 s^3 + c1 s^2 + c0 s,
//     tildes are reversed evaluations, [d0 d1 d2] = -b~ [x^2 -x 1] B(b,c).
struct BicubicAux {
  Variant variant = Variant::Shifted;
  Poly a, b;        // coefficients in s
  Rational r0;      // R0(a,b)
  Poly a_t, b_t, c_t;
  BiPoly c, d;      // polynomials in s over Q[x]
  BiquadAux<Poly> q;
};

BicubicAux bicubic_aux(const Poly& a, const Poly& b, Variant v);
// Aux quantities at a fixed rational x.
BiquadAux<Rational> bicubic_aux_at(const BicubicAux& aux, const Rational& x, Rational* a_t = nullptr,
                                   Rational* b_t = nullptr, Rational* c_t = nullptr);

struct BicubicSigns {
  BiquadSigns q;
  int a_t, b_t, c_t, r0;
  bool coeffs_nonneg;  // a_i, b_i >= 0
  bool some_b_pos;     // b_i > 0 for some i
};

BicubicSigns bicubic_signs(const BicubicAux& aux, SamplePoint& pt);

enum BicubicCond : unsigned {
  C1 = 1u << 0, C2 = 1u << 1, C3 = 1u << 2, C4 = 1u << 3, C5 = 1u << 4,
  CA1 = 1u << 5, CA2 = 1u << 6, CA3 = 1u << 7, CA4 = 1u << 8,
};

// C1-C4 for Shifted, C5 for Reversed.
unsigned c_conditions(const BicubicSigns& s, Variant v);
unsigned ca_equivalents(const BicubicSigns& s);
std::string bicubic_condition_names(unsigned set);

// Element values of N11-N15 as rational functions of x for a condition C1-C5.
SymbolicValues bicubic_element_values(const BicubicAux& aux, unsigned cond);
std::string bicubic_class(unsigned cond);

struct Candidate {
  RootLocus x;
  std::string reason;
};
// x = 0 and every nonnegative root of lambda1-4, c0, c2, d0, d2, ascending.
std::vector<Candidate> minimal_candidates(const BicubicAux& aux);

SynthesisResult realize_bicubic_Z12(const Poly& a, const Poly& b, Mode mode = Mode::Exact);
// C6 test and Cauer ladder N10; degree < 3 falls back to realize_low.
bool c6_holds(const Poly& a, const Poly& b);
SynthesisResult cauer_realize(const Poly& a, const Poly& b);
SynthesisResult realize_bicubic_Z3(const Poly& a, const Poly& b, Mode mode = Mode::Exact);

// Necessary sign screens (i), (ii) for an essential-regular bicubic.
std::pair<bool, bool> essential_regular_necessary(const Poly& a, const Poly& b);

}  // namespace rlcsynth
