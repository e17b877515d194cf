#include <catch_amalgamated.hpp>

#include <sstream>

#include "rlcsynth/report.hpp"

using namespace rlcsynth;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

Node counterexample_network() {
  ValueMap v = {{"R1", make_rational(4, 9)},    {"R2", make_rational(128, 279)}, {"G3", make_rational(31, 96)},
                {"R4", 0},                      {"R5", 1},                       {"C1", make_rational(405, 64)},
                {"L1", make_rational(576, 961)}, {"L2", 1}};
  return instantiate(ClassId::parse("N12"), v);
}

const Poly kNum = P({28, 92, 124, 60});
const Poly kDen = P({59, 191, 291, 135});

}  // namespace

TEST_CASE("netlist of single elements and degenerate networks", "[netlist]") {
  CHECK(write_netlist(Node::element(ElementKind::R, 5)) == "R1 1 0 R 5/1\n");
  CHECK(write_netlist(Node::element(ElementKind::C, make_rational(3, 4))) == "C1 1 0 C 3/4\n");
  CHECK(write_netlist(Node::short_circuit()) == "R1 1 0 R 0/1\n");
  CHECK(write_netlist(Node::open()).empty());
  CHECK(impedance(read_netlist("")).is_open());
  CHECK(impedance(read_netlist("R1 1 0 R 0/1\n")).is_short());
  // opens in a series branch drop the branch
  Node n = Node::parallel({Node::element(ElementKind::R, 2), Node::series({Node::open(), Node::element(ElementKind::L, 1)})});
  CHECK(write_netlist(n) == "R1 1 0 R 2/1\n");
}

TEST_CASE("netlist node numbering is depth-first", "[netlist]") {
  Node n = Node::series({Node::element(ElementKind::R, 1),
                         Node::parallel({Node::element(ElementKind::L, 2),
                                         Node::series({Node::element(ElementKind::R, 3), Node::element(ElementKind::C, 4)})}),
                         Node::element(ElementKind::R, 5)});
  CHECK(lines_of(write_netlist(n)) == std::vector<std::string>{"R1 1 2 R 1/1", "L1 2 3 L 2/1", "R2 2 4 R 3/1",
                                                                 "C1 4 3 C 4/1", "R3 3 0 R 5/1"});
  CHECK(impedance(read_netlist(write_netlist(n))) == impedance(n));
}

TEST_CASE("counterexample network writes seven lines and reads back", "[netlist]") {
  Node n = counterexample_network();
  std::string text = write_netlist(n);
  CHECK(lines_of(text).size() == 7);
  Node back = read_netlist(text);
  CHECK(impedance(back) == Impedance::of(kNum, kDen));
  CHECK(count_storage(back) == StorageCounts{1, 2});
}

TEST_CASE("netlists of random networks round-trip", "[netlist][property]") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    Node n = random_network(static_cast<int>(seed % 4), static_cast<int>(seed % 5), seed);
    Node back = read_netlist(write_netlist(n));
    INFO(structure_key(n));
    CHECK(impedance(back) == impedance(n));
    CHECK(count_storage(back) == count_storage(simplify(n)));
    CHECK(count_elements(back) == count_elements(simplify(n)));
  }
}

TEST_CASE("malformed netlists are rejected", "[netlist]") {
  CHECK_THROWS_AS(read_netlist("R1 1 0 X 1"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("R1 1 0 R"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("R1 1 1 R 1"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("L1 1 0 L 0"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("R1 1 0 R -1"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("R1 1 0 R 1/0"), SynthesisError);
  CHECK_THROWS_AS(read_netlist("R1 1 2 R 1\nR2 2 0 R 1\nR3 2 3 R 1"), SynthesisError);
  // Wheatstone bridge
  std::string bridge = "R1 1 2 R 1\nR2 1 3 R 1\nR3 2 3 R 1\nR4 2 0 R 1\nR5 3 0 R 1\n";
  try {
    read_netlist(bridge);
    FAIL("bridge accepted");
  } catch (const SynthesisError& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
  // comments and blank lines are ignored
  CHECK(impedance(read_netlist("* header\n\nR1 1 0 R 5/2\n")) == Impedance::of(P({5}), P({2})));
}

TEST_CASE("mechanical analogy", "[mech]") {
  auto one = [](ElementKind k, long v) { return mech_analogy(Node::element(k, v)).at(0); };
  MechElement d = one(ElementKind::R, 2);
  CHECK(d.element == "damper");
  CHECK(d.value == make_rational(1, 2));
  MechElement k = one(ElementKind::L, 4);
  CHECK(k.element == "spring");
  CHECK(k.value == make_rational(1, 4));
  MechElement b = one(ElementKind::C, 3);
  CHECK(b.element == "inerter");
  CHECK(b.value == 3);
  CHECK(mech_analogy(Node::short_circuit()).at(0).element == "rigid link");
  CHECK(mech_analogy(Node::open()).at(0).element == "disconnection");

  Json j = synthesize_report(P({0, 1}), P({1}), {Mode::Exact, true, false});
  const Json& m = j["realization"]["mechanical"];
  REQUIRE(m.size() == 1);
  CHECK(m[0]["element"] == "spring");
  CHECK(m[0]["value"] == "1");
}

TEST_CASE("analyze reports", "[report]") {
  Json j = analyze_report(kNum, kDen);
  CHECK(j["degree"] == 3);
  CHECK(j["coprime"] == true);
  CHECK(j["storage_counts"]["capacitors"] == 1);
  CHECK(j["storage_counts"]["inductors"] == 2);
  CHECK(j["necessary_class"] == "Z_{1,2}");
  CHECK(j["screens"]["essential_regular"]["i"] == false);
  CHECK(j["screens"]["essential_regular"]["ii"] == false);
  CHECK(j["sign_sequence"].size() == 4);

  Json c = analyze_report(P({5}), P({1}));
  CHECK(c["degree"] == 0);
  CHECK(c["storage_counts"]["capacitors"] == 0);

  Json nc = analyze_report(P({1, 1}), P({1, 1}));
  CHECK(nc["coprime"] == false);
  CHECK(nc["status"] == "NotCoprime");
  CHECK(nc["storage_counts"].is_null());

  try {
    parse_poly("1, 2/x");
    FAIL("parsed");
  } catch (const SynthesisError& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("coefficient 1 at position 3") != std::string::npos);
  }
  CHECK(parse_poly("3,2,1", true) == P({1, 2, 3}));
}

TEST_CASE("synthesize reports", "[report]") {
  SynthesisResult r;
  Json j = synthesize_report(kNum, kDen, {}, &r);
  CHECK(j["status"] == "realized");
  CHECK(j["realization"]["verified"] == "exact");
  CHECK(j["realization"]["counts"]["elements"].get<int>() <= 7);
  CHECK(j["realization"]["counts"]["resistors"].get<int>() <= 4);
  CHECK(j["membership"]["Z_{1,2}"] == true);
  CHECK_FALSE(j.contains("timing"));
  CHECK(j.dump() == synthesize_report(kNum, kDen, {}).dump());
  if (r.approximate_network) {
    CHECK_THROWS_AS(write_netlist(r), SynthesisError);
    CHECK(lines_of(write_netlist(r, true)).size() == static_cast<std::size_t>(count_elements(simplify(r.network))));
  }

  Json d = synthesize_report(kDen, kNum, {});
  CHECK(d["status"] == "realized");
  CHECK(d["realization"]["transform"] == "d");
  CHECK(d["realization"]["verified"] == "exact");

  Json bad = synthesize_report(P({1, 1}) * P({1, 0, 1}), P({2, 1}) * P({2, 0, 1}), {});
  CHECK(bad["status"] == "NotInZ3");
  CHECK(bad["membership"]["Z_3"] == false);
  CHECK(bad["error"]["kind"] == "NotInZ3");

  Json v = verify_report(kNum, kDen, read_netlist(write_netlist(counterexample_network())));
  CHECK(v["equal"] == true);
  CHECK(verify_report(kDen, kNum, counterexample_network())["equal"] == false);
}

TEST_CASE("round-trip fuzz covers every class variant", "[fuzz]") {
  const int n = static_cast<int>(class_bases().size()) * 4;
  FuzzSummary s = roundtrip_fuzz(n, 7);
  CHECK(s.total == n);
  CHECK(s.passed == n);
  CHECK(s.classes_seen.size() == static_cast<std::size_t>(n));
  for (const auto& f : s.failures) UNSCOPED_INFO(f.cls << " " << f.impedance << " " << f.outcome);
}
