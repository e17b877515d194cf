#include "rlcsynth/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

std::string exact_string(const Rational& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

char kind_char(ElementKind k) { return k == ElementKind::R ? 'R' : (k == ElementKind::L ? 'L' : 'C'); }

struct Branch {
  std::string label;
  const Node* node;
  int from, to;
};

// Branches of the simplified tree with depth-first node numbering.
class BranchWalker {
 public:
  std::vector<Branch> walk(const Node& n) {
    out_.clear();
    next_ = 2;
    counts_.clear();
    if (n.type == Node::Type::Short) {
      out_.push_back({"R1", &n, 1, 0});
      return out_;
    }
    visit(n, 1, 0);
    return out_;
  }

 private:
  void visit(const Node& n, int p, int m) {
    switch (n.type) {
      case Node::Type::Open: return;
      case Node::Type::Short: fail(ErrorKind::Precondition, "short inside a simplified network");
      case Node::Type::Element: {
        char k = kind_char(n.kind);
        out_.push_back({std::string(1, k) + std::to_string(++counts_[k]), &n, p, m});
        return;
      }
      case Node::Type::Series: {
        int cur = p;
        for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
          int nxt = next_++;
          visit(n.children[i], cur, nxt);
          cur = nxt;
        }
        visit(n.children.back(), cur, m);
        return;
      }
      case Node::Type::Parallel:
        for (const auto& c : n.children) visit(c, p, m);
        return;
    }
  }

  std::vector<Branch> out_;
  int next_ = 2;
  std::map<char, int> counts_;
};

Json poly_json(const Poly& p) {
  Json j = Json::array();
  for (int i = 0; i <= std::max(p.degree(), 0); ++i) j.push_back(to_string(p[i]));
  return j;
}

Json impedance_json(const Impedance& z) {
  if (z.is_open()) return Json{{"num", "1"}, {"den", "0"}};
  return Json{{"num", to_string(z.num)}, {"den", to_string(z.den)}};
}

Json counts_json(const StorageCounts& c) { return Json{{"capacitors", c.capacitors}, {"inductors", c.inductors}}; }

const char* kind_name(char k) {
  switch (k) {
    case 'R': return "resistance";
    case 'G': return "conductance";
    case 'L': return "inductance";
    default: return "capacitance";
  }
}

Json error_json(const SynthesisError& e) {
  std::string msg = e.what();
  auto pos = msg.find(": ");
  return Json{{"kind", error_name(e.kind())}, {"message", pos == std::string::npos ? msg : msg.substr(pos + 2)}};
}

}  // namespace

std::string write_netlist(const Node& n, bool approx) {
  Node s = simplify(n);
  std::ostringstream os;
  for (const Branch& b : BranchWalker().walk(s)) {
    const Node& e = *b.node;
    char k = e.type == Node::Type::Short ? 'R' : kind_char(e.kind);
    Rational v = e.type == Node::Type::Short ? Rational(0) : e.value;
    os << b.label << ' ' << b.from << ' ' << b.to << ' ' << k << ' ' << (approx ? to_decimal(v, 40) : exact_string(v))
       << '\n';
  }
  return os.str();
}

std::string write_netlist(const SynthesisResult& r, bool approx) {
  if (r.approximate_network && !approx)
    fail(ErrorKind::Precondition, "element values are irrational; use the approximate netlist option");
  return write_netlist(r.network, approx);
}

Node read_netlist(const std::string& text) {
  struct Edge {
    int u, v;
    Node n;
  };
  std::vector<Edge> edges;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto where = [&] { return "line " + std::to_string(lineno); };
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '*' || tok[0][0] == '#') continue;
    if (tok.size() != 5) fail(ErrorKind::Parse, where() + ": expected 5 fields");
    int u, v;
    try {
      std::size_t used = 0;
      u = std::stoi(tok[1], &used);
      if (used != tok[1].size()) throw std::invalid_argument("node");
      v = std::stoi(tok[2], &used);
      if (used != tok[2].size()) throw std::invalid_argument("node");
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, where() + ": bad node number");
    }
    if (u < 0 || v < 0) fail(ErrorKind::Parse, where() + ": negative node number");
    if (u == v) fail(ErrorKind::Parse, where() + ": branch connects a node to itself");
    if (tok[3].size() != 1 || std::string("RLC").find(tok[3][0]) == std::string::npos)
      fail(ErrorKind::Parse, where() + ": element kind must be R, L or C");
    Rational val;
    try {
      val = parse_rational(tok[4]);
    } catch (const SynthesisError& e) {
      fail(ErrorKind::Parse, where() + ": " + error_json(e)["message"].get<std::string>());
    }
    char k = tok[3][0];
    if (sgn(val) < 0 || (k != 'R' && sgn(val) == 0)) fail(ErrorKind::Parse, where() + ": invalid element value");
    Node n = k == 'R' && sgn(val) == 0 ? Node::short_circuit()
                                       : Node::element(k == 'R' ? ElementKind::R : (k == 'L' ? ElementKind::L : ElementKind::C),
                                                       val, tok[0]);
    edges.push_back({u, v, std::move(n)});
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < edges.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < edges.size() && !changed; ++j) {
        bool same = (edges[i].u == edges[j].u && edges[i].v == edges[j].v) ||
                    (edges[i].u == edges[j].v && edges[i].v == edges[j].u);
        if (!same) continue;
        edges[i].n = Node::parallel({edges[i].n, edges[j].n});
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    if (changed) continue;
    std::map<int, std::vector<std::size_t>> incident;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      incident[edges[i].u].push_back(i);
      incident[edges[i].v].push_back(i);
    }
    for (const auto& [w, es] : incident) {
      if (w == 0 || w == 1) continue;
      if (es.size() == 1) fail(ErrorKind::Parse, "node " + std::to_string(w) + " is dangling");
      if (es.size() != 2) continue;
      Edge& a = edges[es[0]];
      Edge& b = edges[es[1]];
      int x = a.u == w ? a.v : a.u;
      int y = b.u == w ? b.v : b.u;
      if (x == y) fail(ErrorKind::Parse, "node " + std::to_string(w) + " closes a loop without current");
      Edge merged{x, y, Node::series({a.n, b.n})};
      std::size_t hi = std::max(es[0], es[1]), lo = std::min(es[0], es[1]);
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(hi));
      edges[lo] = std::move(merged);
      changed = true;
      break;
    }
  }
  if (edges.empty()) return Node::open();
  if (edges.size() != 1 || std::min(edges[0].u, edges[0].v) != 0 || std::max(edges[0].u, edges[0].v) != 1)
    fail(ErrorKind::Parse, "netlist is not a series-parallel two-terminal network between nodes 1 and 0");
  return simplify(edges[0].n);
}

std::vector<MechElement> mech_analogy(const Node& n) {
  Node s = simplify(n);
  std::vector<MechElement> out;
  if (s.type == Node::Type::Open) {
    out.push_back({"", "disconnection", "", 1, 0, Rational(0)});
    return out;
  }
  for (const Branch& b : BranchWalker().walk(s)) {
    const Node& e = *b.node;
    MechElement m;
    m.label = b.label;
    m.from = b.from;
    m.to = b.to;
    if (e.type == Node::Type::Short) {
      m.element = "rigid link";
    } else if (e.kind == ElementKind::R) {
      m.element = "damper";
      m.parameter = "c";
      m.value = Rational(1 / e.value);
    } else if (e.kind == ElementKind::L) {
      m.element = "spring";
      m.parameter = "k";
      m.value = Rational(1 / e.value);
    } else {
      m.element = "inerter";
      m.parameter = "b";
      m.value = e.value;
    }
    out.push_back(m);
  }
  return out;
}

Json input_json(const Poly& a, const Poly& b) { return Json{{"num", poly_json(a)}, {"den", poly_json(b)}}; }

Json analyze_report(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::Precondition, "numerator and denominator are both zero");
  Json j;
  j["command"] = "analyze";
  j["input"] = input_json(a, b);
  const int n = std::max(a.degree(), b.degree());
  j["degree"] = std::max(n, 0);
  bool coprime = !a.is_zero() && !b.is_zero() ? gcd(a, b).degree() == 0 : std::max(a.degree(), b.degree()) == 0;
  j["coprime"] = coprime;
  Impedance z = Impedance::of(a, b);
  j["reduced"] = impedance_json(z);
  j["reduced"]["degree"] = z.is_open() || z.is_short() ? 0 : z.degree();

  Json sub = Json::object();
  Json seq = Json::array();
  if (n >= 1 && !a.is_zero() && !b.is_zero()) {
    std::vector<Rational> r = subresultants(a, b, n);
    for (int k = n - 1; k >= 0; --k) sub["R" + std::to_string(k)] = to_string(r[k]);
    for (int s : storage_sign_sequence(r)) seq.push_back(s);
  }
  j["subresultants"] = sub;
  j["sign_sequence"] = seq;
  try {
    StorageCounts c = storage_counts(a, b);
    j["storage_counts"] = counts_json(c);
    j["status"] = "ok";
    if (n <= 3)
      j["necessary_class"] = "Z_{" + std::to_string(c.capacitors) + "," + std::to_string(c.inductors) + "}";
  } catch (const SynthesisError& e) {
    if (e.kind() != ErrorKind::NotCoprime) throw;
    j["storage_counts"] = nullptr;
    j["status"] = error_name(e.kind());
  }

  std::vector<int> signs;
  for (const Poly* p : {&a, &b})
    for (const auto& c : p->coeffs()) signs.push_back(sgn(c));
  Json screens;
  screens["coefficients_same_sign"] = same_sign(signs);
  if (n == 3 && coprime) {
    auto [i, ii] = essential_regular_necessary(a, b);
    screens["essential_regular"] = Json{{"i", i}, {"ii", ii}};
  }
  j["screens"] = screens;
  return j;
}

Json result_json(const SynthesisResult& r, bool mech) {
  Json j;
  j["class"] = r.class_id.name();
  j["base_class"] = r.class_id.base;
  j["transform"] = r.class_id.transform == Transform::Identity ? "identity" : transform_suffix(r.class_id.transform) + 1;
  j["route"] = r.route;
  j["verified"] = verification_name(r.verified);
  Json params = Json::array();
  for (const auto& v : r.values) {
    Json p;
    p["label"] = v.label;
    p["kind"] = kind_name(v.kind);
    p["exact"] = v.exact ? Json(to_string(*v.exact)) : Json(nullptr);
    if (!v.exact) p["expression"] = v.expression;
    p["decimal"] = v.decimal;
    params.push_back(p);
  }
  j["parameters"] = params;
  if (r.witness) {
    SamplePoint pt = *r.witness;
    Json w;
    w["x"] = pt.x_str();
    w["x_decimal"] = decimal_x(pt);
    if (pt.z) {
      w["z"] = pt.z_str();
      w["z_decimal"] = decimal_z(pt);
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Node s = simplify(r.network);
  StorageCounts c = count_storage(s);
  j["network"] = structure_key(s);
  j["approximate_network"] = r.approximate_network;
  j["counts"] = Json{{"capacitors", c.capacitors},
                     {"inductors", c.inductors},
                     {"resistors", count_resistors(s)},
                     {"elements", count_elements(s)}};
  Json lines = Json::array();
  std::istringstream is(write_netlist(s, r.approximate_network));
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  j["netlist"] = lines;
  if (mech) {
    Json m = Json::array();
    for (const auto& e : mech_analogy(s)) {
      Json x{{"label", e.label}, {"element", e.element}, {"from", e.from}, {"to", e.to}};
      if (!e.parameter.empty()) {
        x["parameter"] = e.parameter;
        x["value"] = r.approximate_network ? to_decimal(e.value, 40) : to_string(e.value);
      }
      m.push_back(x);
    }
    j["mechanical"] = m;
  }
  return j;
}

Json synthesize_report(const Poly& a, const Poly& b, const ReportOptions& opt, SynthesisResult* out) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::Precondition, "numerator and denominator are both zero");
  Json j;
  j["command"] = "synthesize";
  j["input"] = input_json(a, b);
  Impedance z = Impedance::of(a, b);
  int degree = z.is_open() || z.is_short() ? 0 : z.degree();
  j["degree"] = degree;
  j["mode"] = opt.mode == Mode::Exact ? "exact" : "fast";
  auto t0 = std::chrono::steady_clock::now();
  Json membership = Json::object();
  try {
    j["storage_counts"] = degree > 0 ? counts_json(storage_counts(z.num, z.den)) : counts_json({});
    SynthesisResult r = synthesize(z.num, z.den, opt.mode);
    StorageCounts c = count_storage(r.network);
    j["status"] = "realized";
    membership["Z_{" + std::to_string(c.capacitors) + "," + std::to_string(c.inductors) + "}"] = true;
    membership["Z_" + std::to_string(c.capacitors + c.inductors)] = true;
    j["membership"] = membership;
    j["realization"] = result_json(r, opt.mech);
    if (out) *out = std::move(r);
  } catch (const SynthesisError& e) {
    j["status"] = error_name(e.kind());
    if (e.kind() == ErrorKind::NotInZ3) membership["Z_3"] = false;
    j["membership"] = membership;
    j["error"] = error_json(e);
  }
  if (opt.timing)
    j["timing"] = Json{
        {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  return j;
}

Json verify_report(const Poly& a, const Poly& b, const Node& network) {
  Json j;
  j["command"] = "verify";
  j["input"] = input_json(a, b);
  Impedance target = Impedance::of(a, b);
  Impedance got = impedance(network);
  j["target"] = impedance_json(target);
  j["netlist_impedance"] = impedance_json(got);
  StorageCounts c = count_storage(network);
  j["counts"] = Json{{"capacitors", c.capacitors},
                     {"inductors", c.inductors},
                     {"resistors", count_resistors(network)},
                     {"elements", count_elements(network)}};
  j["equal"] = got == target;
  return j;
}

FuzzSummary roundtrip_fuzz(int count, std::uint64_t seed, Mode mode) {
  static const Transform kTransforms[] = {Transform::Identity, Transform::I, Transform::D, Transform::P};
  const auto& bases = class_bases();
  std::mt19937_64 g(seed);
  auto dyadic = [&] { return make_rational(std::uniform_int_distribution<int>(2, 128)(g), 16); };
  FuzzSummary s;
  std::set<std::string> seen;
  for (int i = 0; i < count; ++i) {
    const std::string& base = bases[static_cast<std::size_t>(i) % bases.size()];
    Transform t = kTransforms[(static_cast<std::size_t>(i) / bases.size()) % 4];
    ClassId id{base, t};
    const ClassTemplate& ct = class_template(base);
    ValueMap v;
    for (const auto& p : ct.params)
      if (p != ct.pinned) v[p] = dyadic();
    Impedance z = impedance(instantiate(id, v));
    FuzzCase fc{id.name(), z.str(), "", false};
    try {
      SynthesisResult r = synthesize(z.num, z.den, mode);
      StorageCounts c = count_storage(r.network);
      bool exact_ok = r.approximate_network || impedance(r.network) == z;
      fc.ok = exact_ok && c.capacitors + c.inductors <= 3 &&
              (r.verified == Verification::Exact || (mode == Mode::Fast && r.verified == Verification::IntervalVerified));
      fc.outcome = r.class_id.name() + " " + verification_name(r.verified);
    } catch (const SynthesisError& e) {
      fc.outcome = e.what();
    }
    ++s.total;
    seen.insert(id.name());
    if (fc.ok)
      ++s.passed;
    else
      s.failures.push_back(fc);
  }
  s.classes_seen.assign(seen.begin(), seen.end());
  return s;
}

Json fuzz_json(const FuzzSummary& s) {
  Json j;
  j["command"] = "roundtrip-fuzz";
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["variants_covered"] = s.classes_seen.size();
  Json f = Json::array();
  for (const auto& c : s.failures) f.push_back(Json{{"class", c.cls}, {"impedance", c.impedance}, {"outcome", c.outcome}});
  j["failures"] = f;
  return j;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  std::string cmd = j.value("command", "");
  auto str = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (cmd == "analyze") {
    os << "degree " << j["degree"] << ", " << (j["coprime"].get<bool>() ? "coprime" : "not coprime") << "\n";
    for (const auto& [k, v] : j["subresultants"].items()) os << k << " = " << str(v) << "\n";
    if (!j["storage_counts"].is_null())
      os << "storage: " << j["storage_counts"]["capacitors"] << " capacitor(s), " << j["storage_counts"]["inductors"]
         << " inductor(s)\n";
    for (const auto& [k, v] : j["screens"].items()) os << "screen " << k << ": " << v.dump() << "\n";
  } else if (cmd == "synthesize") {
    os << "status: " << str(j["status"]) << "\n";
    if (j.contains("error")) os << "reason: " << str(j["error"]["message"]) << "\n";
    if (j.contains("netlist_error")) os << "netlist not written: " << str(j["netlist_error"]) << "\n";
    if (j.contains("realization")) {
      const Json& r = j["realization"];
      os << "class " << str(r["class"]) << ", verified " << str(r["verified"]) << "\n";
      if (!r["witness"].is_null()) {
        os << "x = " << str(r["witness"]["x"]) << " ~ " << str(r["witness"]["x_decimal"]) << "\n";
        if (r["witness"].contains("z"))
          os << "z = " << str(r["witness"]["z"]) << " ~ " << str(r["witness"]["z_decimal"]) << "\n";
      }
      for (const auto& p : r["parameters"])
        os << "  " << str(p["label"]) << " (" << str(p["kind"]) << ") = "
           << (p["exact"].is_null() ? str(p["expression"]) : str(p["exact"])) << " ~ " << str(p["decimal"]) << "\n";
      os << "netlist:\n";
      for (const auto& l : r["netlist"]) os << "  " << str(l) << "\n";
      if (r.contains("mechanical")) {
        os << "mechanical analogy:\n";
        for (const auto& m : r["mechanical"]) {
          os << "  " << str(m["element"]);
          if (m.contains("parameter")) os << " " << str(m["parameter"]) << " = " << str(m["value"]);
          os << " between " << m["from"] << " and " << m["to"] << "\n";
        }
      }
    }
  } else if (cmd == "verify") {
    os << (j["equal"].get<bool>() ? "impedance matches" : "impedance differs") << ": " << str(j["netlist_impedance"]["num"])
       << " / " << str(j["netlist_impedance"]["den"]) << "\n";
  } else if (cmd == "roundtrip-fuzz") {
    os << j["passed"] << "/" << j["total"] << " round-trips passed over " << j["variants_covered"] << " class variants\n";
    for (const auto& f : j["failures"]) os << "  " << str(f["class"]) << " " << str(f["impedance"]) << ": " << str(f["outcome"]) << "\n";
  } else {
    os << j.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace rlcsynth
