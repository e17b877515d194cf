#include "rlcsynth/network.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

const char* transform_suffix(Transform t) {
  switch (t) {
    case Transform::Identity: return "";
    case Transform::I: return "^i";
    case Transform::D: return "^d";
    case Transform::P: return "^p";
  }
  return "";
}

Transform compose(Transform outer, Transform inner) {
  // the group {id, i, d, p} is Z2 x Z2 with p = i*d
  auto bits = [](Transform t) {
    switch (t) {
      case Transform::Identity: return 0;
      case Transform::I: return 1;
      case Transform::D: return 2;
      case Transform::P: return 3;
    }
    return 0;
  };
  static const Transform from[4] = {Transform::Identity, Transform::I, Transform::D, Transform::P};
  return from[bits(outer) ^ bits(inner)];
}

Impedance Impedance::of(const Poly& n, const Poly& d) {
  if (n.is_zero() && d.is_zero()) throw std::domain_error("impedance 0/0");
  if (d.is_zero()) return open();
  if (n.is_zero()) return short_circuit();
  Poly g = gcd(n, d);
  Poly nn = divmod(n, g).first, dd = divmod(d, g).first;
  // joint integer content
  Integer l = 1, c = 0;
  for (const Poly* p : {&nn, &dd})
    for (const auto& x : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  for (const Poly* p : {&nn, &dd})
    for (const auto& x : p->coeffs()) {
      Integer v = x.get_num() * (l / x.get_den());
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
    }
  Rational scale(l, c);
  scale.canonicalize();
  if (sgn(dd.lc()) < 0) scale = -scale;
  return {nn * scale, dd * scale};
}

Impedance Impedance::reciprocal_argument() const {
  if (is_open() || is_short()) return *this;
  int n = degree();
  return of(num.reverse(n), den.reverse(n));
}

std::string Impedance::str() const {
  if (is_open()) return "open";
  if (is_short()) return "short";
  return "(" + to_string(num) + ")/(" + to_string(den) + ")";
}

Impedance series(const Impedance& a, const Impedance& b) {
  if (a.is_open() || b.is_open()) return Impedance::open();
  return Impedance::of(a.num * b.den + b.num * a.den, a.den * b.den);
}

Impedance parallel(const Impedance& a, const Impedance& b) {
  if (a.is_short() || b.is_short()) return Impedance::short_circuit();
  return Impedance::of(a.num * b.num, a.num * b.den + b.num * a.den);
}

Node Node::element(ElementKind k, const Rational& v, std::string label) {
  if (sgn(v) <= 0) fail(ErrorKind::InvalidElementValue, "element values must be positive");
  Node n;
  n.type = Type::Element;
  n.kind = k;
  n.value = v;
  n.label = std::move(label);
  return n;
}

Node Node::series(std::vector<Node> c) {
  Node n;
  n.type = Type::Series;
  n.children = std::move(c);
  return n;
}

Node Node::parallel(std::vector<Node> c) {
  Node n;
  n.type = Type::Parallel;
  n.children = std::move(c);
  return n;
}

Impedance impedance(const Node& n) {
  switch (n.type) {
    case Node::Type::Short: return Impedance::short_circuit();
    case Node::Type::Open: return Impedance::open();
    case Node::Type::Element: {
      Poly s = Poly::var();
      switch (n.kind) {
        case ElementKind::R: return Impedance::of(Poly(n.value), Poly(1));
        case ElementKind::L: return Impedance::of(s * n.value, Poly(1));
        case ElementKind::C: return Impedance::of(Poly(1), s * n.value);
      }
      break;
    }
    case Node::Type::Series: {
      Impedance z = Impedance::short_circuit();
      for (const auto& c : n.children) z = series(z, impedance(c));
      return z;
    }
    case Node::Type::Parallel: {
      Impedance z = Impedance::open();
      for (const auto& c : n.children) z = parallel(z, impedance(c));
      return z;
    }
  }
  return Impedance::short_circuit();
}

Node transform(const Node& n, Transform t) {
  if (t == Transform::Identity) return n;
  if (t == Transform::P) return transform(transform(n, Transform::D), Transform::I);
  Node out = n;
  bool dual = (t == Transform::D);
  switch (n.type) {
    case Node::Type::Short:
      if (dual) out.type = Node::Type::Open;
      break;
    case Node::Type::Open:
      if (dual) out.type = Node::Type::Short;
      break;
    case Node::Type::Element:
      if (n.kind == ElementKind::R) {
        if (dual) out.value = Rational(1 / n.value);
      } else {
        out.kind = (n.kind == ElementKind::L) ? ElementKind::C : ElementKind::L;
        if (!dual) out.value = Rational(1 / n.value);
      }
      break;
    case Node::Type::Series:
    case Node::Type::Parallel:
      if (dual) out.type = (n.type == Node::Type::Series) ? Node::Type::Parallel : Node::Type::Series;
      for (auto& c : out.children) c = transform(c, t);
      break;
  }
  return out;
}

Node simplify(const Node& n) {
  if (n.type != Node::Type::Series && n.type != Node::Type::Parallel) return n;
  bool ser = n.type == Node::Type::Series;
  Node::Type neutral = ser ? Node::Type::Short : Node::Type::Open;
  Node::Type absorbing = ser ? Node::Type::Open : Node::Type::Short;
  std::vector<Node> kids;
  for (const auto& c0 : n.children) {
    Node c = simplify(c0);
    if (c.type == absorbing) return c;
    if (c.type == neutral) continue;
    if (c.type == n.type) {
      for (auto& g : c.children) kids.push_back(std::move(g));
    } else {
      kids.push_back(std::move(c));
    }
  }
  if (kids.empty()) return ser ? Node::short_circuit() : Node::open();
  if (kids.size() == 1) return kids[0];
  Node out = n;
  out.children = std::move(kids);
  return out;
}

std::string structure_key(const Node& n) {
  switch (n.type) {
    case Node::Type::Short: return "S0";
    case Node::Type::Open: return "O0";
    case Node::Type::Element: {
      const char* k = n.kind == ElementKind::R ? "R" : (n.kind == ElementKind::L ? "L" : "C");
      return std::string(k) + "[" + n.value.get_str() + "]";
    }
    case Node::Type::Series:
    case Node::Type::Parallel: {
      std::string s = n.type == Node::Type::Series ? "S(" : "P(";
      for (std::size_t i = 0; i < n.children.size(); ++i) s += (i ? "," : "") + structure_key(n.children[i]);
      return s + ")";
    }
  }
  return "";
}

Node canonicalize(const Node& n0) {
  Node n = simplify(n0);
  if (n.type != Node::Type::Series && n.type != Node::Type::Parallel) return n;
  for (auto& c : n.children) c = canonicalize(c);
  std::sort(n.children.begin(), n.children.end(),
            [](const Node& a, const Node& b) { return structure_key(a) < structure_key(b); });
  return n;
}

StorageCounts count_storage(const Node& n) {
  StorageCounts s;
  if (n.type == Node::Type::Element) {
    if (n.kind == ElementKind::C) s.capacitors = 1;
    if (n.kind == ElementKind::L) s.inductors = 1;
  }
  for (const auto& c : n.children) {
    StorageCounts t = count_storage(c);
    s.capacitors += t.capacitors;
    s.inductors += t.inductors;
  }
  return s;
}

int count_resistors(const Node& n) {
  int r = (n.type == Node::Type::Element && n.kind == ElementKind::R) ? 1 : 0;
  for (const auto& c : n.children) r += count_resistors(c);
  return r;
}

int count_elements(const Node& n) {
  int r = n.type == Node::Type::Element ? 1 : 0;
  for (const auto& c : n.children) r += count_elements(c);
  return r;
}

int mcmillan_degree(const Node& n) {
  Impedance z = impedance(n);
  if (z.is_open() || z.is_short()) return 0;
  return z.degree();
}

Node random_network(int storage_budget, int resistor_budget, std::uint64_t seed) {
  if (storage_budget < 0 || resistor_budget < 0) fail(ErrorKind::Precondition, "negative budget");
  std::mt19937_64 g(seed);
  auto value = [&]() {
    std::uniform_int_distribution<int> k(2, 128);
    return make_rational(k(g), 16);
  };
  std::vector<Node> pool;
  int nl = 0, nc = 0, nr = 0;
  for (int i = 0; i < storage_budget; ++i) {
    if (std::uniform_int_distribution<int>(0, 1)(g) == 0)
      pool.push_back(Node::element(ElementKind::L, value(), "L" + std::to_string(++nl)));
    else
      pool.push_back(Node::element(ElementKind::C, value(), "C" + std::to_string(++nc)));
  }
  int resistors = std::uniform_int_distribution<int>(storage_budget == 0 ? std::min(1, resistor_budget) : 0,
                                                       resistor_budget)(g);
  for (int i = 0; i < resistors; ++i) pool.push_back(Node::element(ElementKind::R, value(), "R" + std::to_string(++nr)));
  if (pool.empty()) return Node::short_circuit();
  while (pool.size() > 1) {
    std::shuffle(pool.begin(), pool.end(), g);
    Node a = std::move(pool.back());
    pool.pop_back();
    Node b = std::move(pool.back());
    pool.pop_back();
    bool ser = std::uniform_int_distribution<int>(0, 1)(g) == 0;
    Node c = ser ? Node::series({std::move(a), std::move(b)}) : Node::parallel({std::move(a), std::move(b)});
    pool.push_back(simplify(c));
  }
  return pool[0];
}

ShiftValues shift_forward(const Rational& r1, const Rational& g1, const Rational& alpha1) {
  if (sgn(r1) < 0 || sgn(g1) < 0 || sgn(alpha1) <= 0) fail(ErrorKind::Precondition, "shift values out of range");
  Rational k = 1 + r1 * g1;
  return {Rational(r1 * k), Rational(g1 / k), Rational(alpha1 * k * k)};
}

ShiftValues shift_inverse(const Rational& r2, const Rational& g2, const Rational& alpha2) {
  if (sgn(r2) < 0 || sgn(g2) < 0 || sgn(alpha2) <= 0) fail(ErrorKind::Precondition, "shift values out of range");
  Rational k = 1 + r2 * g2;
  return {Rational(r2 / k), Rational(g2 * k), Rational(alpha2 / (k * k))};
}

}  // namespace rlcsynth
