#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rlcsynth/dispatch.hpp"

namespace rlcsynth {

using Json = nlohmann::ordered_json;

// One line per element: `<label> <n+> <n-> <R|L|C> <p/q>`. Terminals are 1
// and 0, internal nodes are numbered depth-first from 2. A short network is
// a single zero resistor, an open network is empty. Values are exact
// rationals; with `approx` they are decimals instead.
std::string write_netlist(const Node& n, bool approx = false);
// Refuses approximate networks unless `approx` is set.
std::string write_netlist(const SynthesisResult& r, bool approx = false);
// Rebuilds a series-parallel tree by series and parallel reductions.
// Throws Parse on malformed lines or bridge topologies.
Node read_netlist(const std::string& text);

// Force-current analogy: damper c = 1/R, spring k = 1/L, inerter b = C,
// on the same terminals as the netlist.
struct MechElement {
  std::string label, element, parameter;
  int from = 1, to = 0;
  Rational value;
};
std::vector<MechElement> mech_analogy(const Node& n);

struct ReportOptions {
  Mode mode = Mode::Exact;
  bool mech = false;
  bool timing = false;  // off by default so that reports are byte-identical
};

Json input_json(const Poly& a, const Poly& b);
Json analyze_report(const Poly& a, const Poly& b);
Json result_json(const SynthesisResult& r, bool mech);
// Runs synthesize(); errors are reported in the "error" field.
Json synthesize_report(const Poly& a, const Poly& b, const ReportOptions& opt, SynthesisResult* out = nullptr);
Json verify_report(const Poly& a, const Poly& b, const Node& network);

struct FuzzCase {
  std::string cls, impedance, outcome;
  bool ok = false;
};
struct FuzzSummary {
  int total = 0, passed = 0;
  std::vector<FuzzCase> failures;
  std::vector<std::string> classes_seen;
};
// Random instantiations of every class and transform with dyadic values in
// [1/8, 8], round-tripped through synthesize().
FuzzSummary roundtrip_fuzz(int count, std::uint64_t seed, Mode mode = Mode::Exact);
Json fuzz_json(const FuzzSummary& s);

// Human-readable rendering of a report.
std::string render_text(const Json& report);

}  // namespace rlcsynth
