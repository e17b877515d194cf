#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rlcsynth/errors.hpp"
#include "rlcsynth/network.hpp"

namespace rlcsynth {

// Class topologies are data: "S(...)" series, "P(...)" parallel, leaves
// "K:label" with K in {R, G, L, C}. An R leaf holds a resistance (0 = short),
// a G leaf a conductance (0 = open).
struct TemplateNode {
  enum class Type { Leaf, Series, Parallel };
  Type type = Type::Leaf;
  char kind = 'R';
  std::string label;
  bool inverted = false;  // leaf value enters as its reciprocal
  std::vector<TemplateNode> children;
};

TemplateNode parse_template(const std::string& text);
TemplateNode transform_template(const TemplateNode& t, Transform tr);

struct ClassTemplate {
  std::string base;
  std::string topology;
  std::string parent;  // N16-N30: the generic class they degenerate from
  std::string pinned;  // parameter forced to zero
  std::vector<std::string> strict;  // R/G parameters that must be positive
  TemplateNode root;
  std::vector<std::string> params;  // in order of appearance
};

const ClassTemplate& class_template(const std::string& base);
const std::vector<std::string>& class_bases();

struct ClassId {
  std::string base;
  Transform transform = Transform::Identity;
  std::string name() const { return base + transform_suffix(transform); }
  static ClassId parse(const std::string& text);
  bool operator==(const ClassId&) const = default;
};

using ValueMap = std::map<std::string, Rational>;

// Checks the class sign conditions and builds the simplified tree.
Node instantiate(const ClassId& id, const ValueMap& values);
void check_values(const ClassTemplate& t, const ValueMap& values);

// Symbolic impedance over a coefficient ring S. The leaf callback returns
// the value of a template parameter as (N, D) or nullopt when it is zero.
template <class S>
struct SymImpedance {
  enum class Kind { Regular, Short, Open };
  Kind kind = Kind::Short;
  Polynomial<S> num, den;
};

template <class S, class Leaf>
SymImpedance<S> symbolic_impedance(const TemplateNode& t, const Leaf& leaf) {
  using Z = SymImpedance<S>;
  if (t.type == TemplateNode::Type::Leaf) {
    std::optional<std::pair<S, S>> v = leaf(t.label);
    Z z;
    if (!v) {
      if (t.kind == 'R') return z;
      if (t.kind == 'G') {
        z.kind = Z::Kind::Open;
        return z;
      }
      fail(ErrorKind::InvalidElementValue, "zero reactive element " + t.label);
    }
    S n = v->first, d = v->second;
    if (t.inverted) std::swap(n, d);
    Polynomial<S> s = Polynomial<S>::monomial(S(1), 1);
    z.kind = Z::Kind::Regular;
    switch (t.kind) {
      case 'R': z.num = Polynomial<S>(n); z.den = Polynomial<S>(d); break;
      case 'G': z.num = Polynomial<S>(d); z.den = Polynomial<S>(n); break;
      case 'L': z.num = s * n; z.den = Polynomial<S>(d); break;
      default: z.num = Polynomial<S>(d); z.den = s * n; break;
    }
    return z;
  }
  bool ser = t.type == TemplateNode::Type::Series;
  typename Z::Kind neutral = ser ? Z::Kind::Short : Z::Kind::Open;
  typename Z::Kind absorbing = ser ? Z::Kind::Open : Z::Kind::Short;
  Z acc;
  acc.kind = neutral;
  for (const auto& c : t.children) {
    Z z = symbolic_impedance<S>(c, leaf);
    if (z.kind == absorbing) return z;
    if (z.kind == neutral) continue;
    if (acc.kind == neutral) {
      acc = z;
    } else if (ser) {
      acc.num = acc.num * z.den + z.num * acc.den;
      acc.den = acc.den * z.den;
    } else {
      Polynomial<S> n = acc.num * z.num;
      acc.den = acc.num * z.den + z.num * acc.den;
      acc.num = n;
    }
  }
  return acc;
}

}  // namespace rlcsynth
