#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rlcsynth/polynomial.hpp"
#include "rlcsynth/subresultant.hpp"

namespace rlcsynth {

enum class ElementKind { R, L, C };
enum class Transform { Identity, I, D, P };

const char* transform_suffix(Transform t);  // "", "^i", "^d", "^p"
Transform compose(Transform outer, Transform inner);

// Driving-point impedance num/den as a point of the projective line:
// Open = (1, 0), Short = (0, 1).
struct Impedance {
  Poly num, den;

  static Impedance open() { return {Poly(1), Poly()}; }
  static Impedance short_circuit() { return {Poly(), Poly(1)}; }
  static Impedance of(const Poly& n, const Poly& d);  // canonical form

  bool is_open() const { return den.is_zero(); }
  bool is_short() const { return num.is_zero(); }
  int degree() const { return std::max(num.degree(), den.degree()); }
  Impedance inverse() const { return of(den, num); }
  Impedance reciprocal_argument() const;  // Z(1/s)
  friend bool operator==(const Impedance& a, const Impedance& b) { return a.num == b.num && a.den == b.den; }
  std::string str() const;
};

Impedance series(const Impedance& a, const Impedance& b);
Impedance parallel(const Impedance& a, const Impedance& b);

struct Node {
  enum class Type { Short, Open, Element, Series, Parallel };
  Type type = Type::Short;
  ElementKind kind = ElementKind::R;
  Rational value;
  std::string label;
  std::vector<Node> children;

  static Node short_circuit() { return Node{}; }
  static Node open() {
    Node n;
    n.type = Type::Open;
    return n;
  }
  static Node element(ElementKind k, const Rational& v, std::string label = "");
  static Node series(std::vector<Node> c);
  static Node parallel(std::vector<Node> c);

  bool is_element() const { return type == Type::Element; }
  bool operator==(const Node& o) const = default;
};

Impedance impedance(const Node& n);
Node transform(const Node& n, Transform t);
// Removes shorts in series and opens in parallel, collapses absorbing
// cases, flattens nested series/series and parallel/parallel.
Node simplify(const Node& n);
// simplify() plus a deterministic order of children.
Node canonicalize(const Node& n);
std::string structure_key(const Node& n);

StorageCounts count_storage(const Node& n);
int count_resistors(const Node& n);
int count_elements(const Node& n);
int mcmillan_degree(const Node& n);

Node random_network(int storage_budget, int resistor_budget, std::uint64_t seed);

struct ShiftValues {
  Rational r, g, alpha;
};
// R1 + (1/G1 || a1 H)  ->  1/G2 || (R2 + a2 H), and back.
ShiftValues shift_forward(const Rational& r1, const Rational& g1, const Rational& alpha1);
ShiftValues shift_inverse(const Rational& r2, const Rational& g2, const Rational& alpha2);

}  // namespace rlcsynth
