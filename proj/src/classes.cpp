#include "rlcsynth/classes.hpp"

#include <algorithm>
#include <cctype>

namespace rlcsynth {

namespace {

struct Row {
  const char* base;
  const char* topology;
  const char* parent;
  const char* pinned;
  std::vector<std::string> strict;
};

const char* kN11 = "S(R:R4,P(S(R:R5,L:L2),S(R:R1,P(L:L1,S(R:R2,P(G:G3,C:C1))))))";
const char* kN12 = "S(R:R4,P(S(R:R5,L:L2),S(R:R1,P(C:C1,S(R:R2,P(G:G3,L:L1))))))";
const char* kN13 = "S(R:R4,P(S(R:R5,L:L2),G:G1,S(C:C1,P(G:G2,S(R:R3,L:L1)))))";
const char* kN14 = "S(R:R4,P(S(R:R5,L:L2),G:G1,S(L:L1,P(G:G2,S(R:R3,C:C1)))))";
const char* kN15 = "S(R:R4,P(S(R:R5,C:C1),S(R:R1,P(L:L2,S(R:R2,P(G:G3,L:L1))))))";

const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {"N1", "R:R1", "", "", {}},
      {"N2", "S(R:R1,P(G:G2,C:C1))", "", "", {}},
      {"N2a", "P(G:G1,S(R:R2,C:C1))", "", "", {}},
      {"N3", "S(R:R1,P(G:G2,L:L1))", "", "", {}},
      {"N3a", "P(G:G1,S(R:R2,L:L1))", "", "", {}},
      {"N4", "S(R:R1,P(C:C2,S(R:R2,P(G:G3,C:C1))))", "", "", {}},
      {"N5", "S(R:R1,P(L:L2,S(R:R2,P(G:G3,L:L1))))", "", "", {}},
      {"N6", "S(R:R1,P(L:L1,S(R:R2,P(G:G3,C:C1))))", "", "", {}},
      {"N7", "S(R:R1,P(C:C1,S(R:R2,P(G:G3,L:L1))))", "", "", {}},
      {"N8", "P(G:G1,S(C:C1,P(G:G2,S(R:R3,L:L1))))", "", "", {}},
      {"N9", "P(G:G1,S(L:L1,P(G:G2,S(R:R3,C:C1))))", "", "", {}},
      {"N10", "S(R:R1,P(C:C3,S(R:R2,P(C:C2,S(R:R3,P(G:G4,C:C1))))))", "", "", {"R2", "R3"}},
      {"N11", kN11, "", "", {}},
      {"N12", kN12, "", "", {}},
      {"N13", kN13, "", "", {}},
      {"N14", kN14, "", "", {}},
      {"N15", kN15, "", "", {"R2"}},
      {"N16", kN11, "N11", "R1", {}},
      {"N17", kN11, "N11", "G3", {}},
      {"N18", kN11, "N11", "R5", {}},
      {"N19", kN12, "N12", "R1", {}},
      {"N20", kN12, "N12", "G3", {}},
      {"N21", kN12, "N12", "R5", {}},
      {"N22", kN13, "N13", "G1", {}},
      {"N23", kN13, "N13", "R3", {}},
      {"N24", kN13, "N13", "R5", {}},
      {"N25", kN14, "N14", "G1", {}},
      {"N26", kN14, "N14", "R3", {}},
      {"N27", kN14, "N14", "R5", {}},
      {"N28", kN15, "N15", "R1", {"R2"}},
      {"N29", kN15, "N15", "G3", {"R2"}},
      {"N30", kN15, "N15", "R5", {"R2"}},
  };
  return r;
}

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::Parse, "template: " + what + " at position " + std::to_string(i));
  }
  void expect(char c) {
    if (i >= s.size() || s[i] != c) error(std::string("expected '") + c + "'");
    ++i;
  }
  TemplateNode node() {
    if (i + 1 < s.size() && (s[i] == 'S' || s[i] == 'P') && s[i + 1] == '(') {
      TemplateNode n;
      n.type = s[i] == 'S' ? TemplateNode::Type::Series : TemplateNode::Type::Parallel;
      i += 2;
      n.children.push_back(node());
      while (i < s.size() && s[i] == ',') {
        ++i;
        n.children.push_back(node());
      }
      expect(')');
      if (n.children.size() < 2) error("composite with fewer than two children");
      return n;
    }
    if (i >= s.size() || std::string("RGLC").find(s[i]) == std::string::npos) error("expected leaf kind");
    TemplateNode n;
    n.kind = s[i++];
    expect(':');
    std::size_t start = i;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) error("empty label");
    n.label = s.substr(start, i - start);
    return n;
  }
};

void collect_params(const TemplateNode& t, std::vector<std::string>& out) {
  if (t.type == TemplateNode::Type::Leaf) {
    if (std::find(out.begin(), out.end(), t.label) == out.end()) out.push_back(t.label);
    return;
  }
  for (const auto& c : t.children) collect_params(c, out);
}

std::map<std::string, ClassTemplate> build_table() {
  std::map<std::string, ClassTemplate> m;
  for (const auto& r : rows()) {
    ClassTemplate t;
    t.base = r.base;
    t.topology = r.topology;
    t.parent = r.parent;
    t.pinned = r.pinned;
    t.strict = r.strict;
    t.root = parse_template(t.topology);
    collect_params(t.root, t.params);
    m.emplace(t.base, std::move(t));
  }
  return m;
}

const std::map<std::string, ClassTemplate>& table() {
  static const std::map<std::string, ClassTemplate> m = build_table();
  return m;
}

char kind_of(const TemplateNode& t, const std::string& label) {
  if (t.type == TemplateNode::Type::Leaf) return t.label == label ? t.kind : 0;
  for (const auto& c : t.children)
    if (char k = kind_of(c, label)) return k;
  return 0;
}

Node build(const TemplateNode& t, const ValueMap& v) {
  if (t.type == TemplateNode::Type::Leaf) {
    Rational x = v.at(t.label);
    if (t.inverted && sgn(x) != 0) x = 1 / x;
    switch (t.kind) {
      case 'R': return sgn(x) == 0 ? Node::short_circuit() : Node::element(ElementKind::R, x, t.label);
      case 'G': return sgn(x) == 0 ? Node::open() : Node::element(ElementKind::R, Rational(1 / x), t.label);
      case 'L': return Node::element(ElementKind::L, x, t.label);
      default: return Node::element(ElementKind::C, x, t.label);
    }
  }
  std::vector<Node> kids;
  for (const auto& c : t.children) kids.push_back(build(c, v));
  return t.type == TemplateNode::Type::Series ? Node::series(std::move(kids)) : Node::parallel(std::move(kids));
}

}  // namespace

TemplateNode parse_template(const std::string& text) {
  Parser p{text};
  TemplateNode n = p.node();
  if (p.i != text.size()) p.error("trailing input");
  return n;
}

TemplateNode transform_template(const TemplateNode& t, Transform tr) {
  if (tr == Transform::Identity) return t;
  if (tr == Transform::P) return transform_template(transform_template(t, Transform::D), Transform::I);
  TemplateNode out = t;
  bool dual = tr == Transform::D;
  if (t.type == TemplateNode::Type::Leaf) {
    if (dual) {
      static const std::map<char, char> swap = {{'R', 'G'}, {'G', 'R'}, {'L', 'C'}, {'C', 'L'}};
      out.kind = swap.at(t.kind);
    } else if (t.kind == 'L' || t.kind == 'C') {
      out.kind = t.kind == 'L' ? 'C' : 'L';
      out.inverted = !t.inverted;
    }
    return out;
  }
  if (dual) out.type = t.type == TemplateNode::Type::Series ? TemplateNode::Type::Parallel : TemplateNode::Type::Series;
  for (auto& c : out.children) c = transform_template(c, tr);
  return out;
}

const ClassTemplate& class_template(const std::string& base) {
  auto it = table().find(base);
  if (it == table().end()) fail(ErrorKind::Parse, "unknown network class " + base);
  return it->second;
}

const std::vector<std::string>& class_bases() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (const auto& r : rows()) out.push_back(r.base);
    return out;
  }();
  return v;
}

ClassId ClassId::parse(const std::string& text) {
  ClassId id;
  std::size_t caret = text.find('^');
  id.base = text.substr(0, caret);
  class_template(id.base);
  if (caret != std::string::npos) {
    std::string t = text.substr(caret + 1);
    if (t == "i") id.transform = Transform::I;
    else if (t == "d") id.transform = Transform::D;
    else if (t == "p") id.transform = Transform::P;
    else fail(ErrorKind::Parse, "unknown transform ^" + t);
  }
  return id;
}

void check_values(const ClassTemplate& t, const ValueMap& values) {
  for (const auto& p : t.params) {
    auto it = values.find(p);
    if (p == t.pinned) {
      if (it != values.end() && sgn(it->second) != 0)
        fail(ErrorKind::InvalidElementValue, t.base + " pins " + p + " = 0");
      continue;
    }
    if (it == values.end()) fail(ErrorKind::InvalidElementValue, t.base + ": missing value for " + p);
    char k = kind_of(t.root, p);
    bool strict = k == 'L' || k == 'C' || std::find(t.strict.begin(), t.strict.end(), p) != t.strict.end();
    int s = sgn(it->second);
    if (s < 0 || (strict && s == 0))
      fail(ErrorKind::InvalidElementValue, t.base + ": " + p + " = " + it->second.get_str() + " violates its sign condition");
  }
}

Node instantiate(const ClassId& id, const ValueMap& values) {
  const ClassTemplate& t = class_template(id.base);
  check_values(t, values);
  ValueMap v = values;
  if (!t.pinned.empty()) v[t.pinned] = 0;
  return transform(simplify(build(t.root, v)), id.transform);
}

}  // namespace rlcsynth
