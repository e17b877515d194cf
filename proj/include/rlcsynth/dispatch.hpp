#pragma once

#include "rlcsynth/synth_bicubic.hpp"
#include "rlcsynth/synth_biquad_deep.hpp"

namespace rlcsynth {

// Biquadratic in Z3: Z2 first, then case (c) on Z, then on 1/Z with the d transform.
SynthesisResult realize_biquad_Z3(const Poly& a, const Poly& b, Mode mode = Mode::Exact);

// Any impedance of degree at most 3, routed by degree and storage counts.
SynthesisResult synthesize(const Poly& a, const Poly& b, Mode mode = Mode::Exact);

}  // namespace rlcsynth
