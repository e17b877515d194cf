#include "rlcsynth/dispatch.hpp"

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

SynthesisResult realize_biquad_Z3(const Poly& a0, const Poly& b0, Mode mode) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() != 2) fail(ErrorKind::Precondition, "not biquadratic");
  try {
    return realize_low(z.num, z.den);
  } catch (const SynthesisError& e) {
    if (e.kind() != ErrorKind::NotInZ2) throw;
  }
  try {
    return realize_biquad_deep(z.num, z.den, mode);
  } catch (const SynthesisError& e) {
    if (e.kind() != ErrorKind::NotInZ12) throw;
  }
  try {
    return dual_result(realize_biquad_deep(z.den, z.num, mode), z.num, z.den);
  } catch (const SynthesisError& e) {
    if (e.kind() != ErrorKind::NotInZ12) throw;
  }
  fail(ErrorKind::NotInZ3, "not in Z2 and neither Z nor 1/Z admits a witness (x, z)");
}

SynthesisResult synthesize(const Poly& a, const Poly& b, Mode mode) {
  Impedance z = Impedance::of(a, b);
  if (z.is_open() || z.degree() < 2) return realize_low(z.num, z.den);
  if (z.degree() == 2) return realize_biquad_Z3(z.num, z.den, mode);
  if (z.degree() == 3) return realize_bicubic_Z3(z.num, z.den, mode);
  fail(ErrorKind::Precondition, "degree above 3");
}

}  // namespace rlcsynth
