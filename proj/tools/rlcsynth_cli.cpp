#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rlcsynth/errors.hpp"
#include "rlcsynth/report.hpp"

using namespace rlcsynth;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotInZ3 = 2;
constexpr int kUndecided = 3;
constexpr int kMismatch = 4;

struct Input {
  std::string num, den;
  bool descending = false;
  int precision_bits = 4096;
  std::string mode = "exact";
  std::string format = "json";
};

void add_input(CLI::App* app, Input& in, bool impedance = true) {
  if (impedance) {
    app->add_option("--num", in.num, "numerator coefficients, comma-separated exact rationals")->required();
    app->add_option("--den", in.den, "denominator coefficients, comma-separated exact rationals")->required();
    app->add_flag("--descending", in.descending, "coefficients are given highest power first");
  }
  app->add_option("--precision-bits", in.precision_bits, "bound on interval refinement")
      ->check(CLI::Range(64, 1 << 20));
  app->add_option("--mode", in.mode, "exact or fast")->check(CLI::IsMember({"exact", "fast"}));
  app->add_option("--format", in.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

void emit(const Json& j, const Input& in) {
  if (in.format == "text")
    std::cout << render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

Mode mode_of(const Input& in) { return in.mode == "fast" ? Mode::Fast : Mode::Exact; }

int error_exit(const SynthesisError& e) {
  std::string msg = e.what();
  msg = msg.substr(msg.find(": ") + 2);
  Json j{{"status", error_name(e.kind())}, {"error", {{"kind", error_name(e.kind())}, {"message", msg}}}};
  std::cout << j.dump(2) << "\n";
  if (e.kind() == ErrorKind::NotInZ3) return kNotInZ3;
  if (e.kind() == ErrorKind::Undecided) return kUndecided;
  return kError;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::Precondition, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series-parallel RLC synthesis for impedances of degree at most three"};
  app.require_subcommand(1);

  Input in;
  CLI::App* analyze = app.add_subcommand("analyze", "degree, subresultants, storage counts and sign screens");
  add_input(analyze, in);

  std::string netlist_path;
  bool mech = false, approx = false, timing = false;
  CLI::App* synth = app.add_subcommand("synthesize", "realize the impedance with at most three storage elements");
  add_input(synth, in);
  synth->add_option("--netlist", netlist_path, "write the netlist to this file");
  synth->add_flag("--mech", mech, "include the mechanical force-current analogy");
  synth->add_flag("--approx", approx, "allow decimal element values in the netlist");
  synth->add_flag("--timing", timing, "include wall-clock timing in the report");

  CLI::App* verify = app.add_subcommand("verify", "check that a netlist realizes the impedance");
  add_input(verify, in);
  verify->add_option("--netlist", netlist_path, "netlist file")->required();

  int count = 500;
  std::uint64_t seed = 1;
  CLI::App* fuzz = app.add_subcommand("roundtrip-fuzz", "instantiate random class members and re-synthesize them");
  add_input(fuzz, in, false);
  fuzz->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    set_precision_budget(in.precision_bits);
    if (*fuzz) {
      FuzzSummary s = roundtrip_fuzz(count, seed, mode_of(in));
      emit(fuzz_json(s), in);
      return s.passed == s.total ? kOk : kError;
    }
    Poly a = parse_poly(in.num, in.descending);
    Poly b = parse_poly(in.den, in.descending);
    if (*analyze) {
      emit(analyze_report(a, b), in);
      return kOk;
    }
    if (*verify) {
      Json j = verify_report(a, b, read_netlist(read_file(netlist_path)));
      emit(j, in);
      return j["equal"].get<bool>() ? kOk : kMismatch;
    }
    SynthesisResult r;
    Json j = synthesize_report(a, b, {mode_of(in), mech, timing}, &r);
    std::string status = j["status"];
    if (status == "realized" && !netlist_path.empty()) {
      if (r.approximate_network && !approx) {
        j["netlist_error"] = "element values are irrational; pass --approx for decimal values";
        emit(j, in);
        return kError;
      }
      std::ofstream f(netlist_path);
      if (!f) fail(ErrorKind::Precondition, "cannot write " + netlist_path);
      f << write_netlist(r, approx);
      j["netlist_file"] = netlist_path;
    }
    emit(j, in);
    if (status == "realized") return kOk;
    if (status == error_name(ErrorKind::NotInZ3)) return kNotInZ3;
    if (status == error_name(ErrorKind::Undecided)) return kUndecided;
    return kError;
  } catch (const SynthesisError& e) {
    return error_exit(e);
  }
}
