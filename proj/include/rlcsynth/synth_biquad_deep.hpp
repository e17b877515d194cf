#pragma once

#include <string>
#include <vector>

#include "rlcsynth/synth_low.hpp"

namespace rlcsynth {

enum class DeepVariant { Shifted, Reversed };

// Aux quantities of a biquadratic a/b in the witness (x, z); BiPoly values
// are polynomials in z over Q[x].
// Shifted: [f0 f1] = [1 -x] B(a,b), c = (x f0, f0 + x f1, f1), h = (b0 - z f0, b1 - z f1, b2),
//      tildes at -x.
// Reversed: [f0 f1] = [x -1] B(a,b), c = (f0, x f0 + f1, x f1), h = (b0, b1 - z f0, b2 - z f1),
//      tildes reversed.
// In both, d = b~ h.
struct DeepAux {
  DeepVariant variant = DeepVariant::Shifted;
  Poly a, b;
  Rational r0;  // R0(a,b)
  Poly a_t, b_t, f0, f1;
  BiPoly h_t;
  BiquadAux<BiPoly> q;
};

DeepAux deep_aux(const Poly& a, const Poly& b, DeepVariant v);

struct DeepSigns {
  BiquadSigns q;
  int a_t, b_t, z, f0, f1, h_t, bhr0, r0;
  bool coeffs_nonneg;
};
DeepSigns deep_signs(const DeepAux& aux, SamplePoint& pt);

enum DeepCond : unsigned { Q7 = 1u << 0, Q8 = 1u << 1, Q9 = 1u << 2, Q10 = 1u << 3, Q11 = 1u << 4 };

// Q7-Q10 for Shifted, Q11 for Reversed.
unsigned deep_conditions(const DeepSigns& s, DeepVariant v);
std::string deep_condition_names(unsigned set);

// Element values of N11-N15 as rational functions of (x, z) for Q7-Q11.
SymbolicValues deep_element_values(const DeepAux& aux, unsigned cond);

// Every sample (x, z) of the plane region cut out by E = 0 with x >= 0 at
// which the sign of each poly in `polys` is constant between samples:
// x is swept through the critical values of the z-eliminants, z through the
// roots of E (or of the polys when E vanishes identically in z).
std::vector<SamplePoint> curve_samples(const BiPoly& e, const std::vector<BiPoly>& polys);

// (a) two-storage realization; (c) degenerate N11-N15 witness search with
// equality pairs (Q7,l1) (Q8,l3) (Q9,l4) (Q9,d0) (Q10,l2) (Q10,d2) (Q11,d2),
// both coefficient orientations.
SynthesisResult realize_biquad_Z12(const Poly& a, const Poly& b, Mode mode = Mode::Exact);
// Case (c) alone.
SynthesisResult realize_biquad_deep(const Poly& a, const Poly& b, Mode mode = Mode::Exact);

}  // namespace rlcsynth
