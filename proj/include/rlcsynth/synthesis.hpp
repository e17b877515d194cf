#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlcsynth/classes.hpp"
#include "rlcsynth/network.hpp"
#include "rlcsynth/witness.hpp"

namespace rlcsynth {

enum class Verification { Exact, IntervalVerified, Failed };
enum class Mode { Exact, Fast };
const char* verification_name(Verification v);

// Element value as a rational function of the witness coordinates (x, z).
struct ValueExpr {
  BiPoly num, den;
  static ValueExpr constant(const Rational& v) { return {BiPoly(Poly(v)), BiPoly(Poly(1))}; }
};
using SymbolicValues = std::map<std::string, ValueExpr>;

struct ElementValue {
  std::string label;
  char kind = 'R';                 // template leaf kind R, G, L or C
  std::optional<Rational> exact;   // when the value is rational
  std::string expression;          // num/den in x, z when irrational
  std::string decimal;
};

struct SynthesisResult {
  ClassId class_id;
  Node network;                    // exact unless approximate_network
  bool approximate_network = false;
  std::vector<ElementValue> values;
  std::optional<SamplePoint> witness;
  Verification verified = Verification::Failed;
  std::string route;               // engine and condition that produced the result
};

// Checks signs at the witness, builds the network and verifies that its
// impedance equals a/b: exactly (rational or symbolic route) or, in fast
// mode with an irrational witness, at 256-bit precision.
SynthesisResult finalize(const ClassId& id, const SymbolicValues& values, std::optional<SamplePoint> witness,
                         const Poly& a, const Poly& b, const std::string& route, Mode mode = Mode::Exact);
SynthesisResult finalize(const ClassId& id, const ValueMap& values, const Poly& a, const Poly& b,
                         const std::string& route);

// Result for a/b from a realization of the impedance related to it by t
// (1/Z for d, 1/Z(1/s) for p): applies t to the class and the network.
SynthesisResult transform_result(SynthesisResult r, Transform t, const Poly& a, const Poly& b);
SynthesisResult dual_result(SynthesisResult r, const Poly& a, const Poly& b);

}  // namespace rlcsynth
