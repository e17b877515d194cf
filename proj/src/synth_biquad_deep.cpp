#include "rlcsynth/synth_biquad_deep.hpp"

#include <algorithm>
#include <optional>

#include "rlcsynth/errors.hpp"

namespace rlcsynth {

namespace {

const Poly kX = Poly::var();

bool nonneg_coeffs(const Poly& p) {
  for (int i = 0; i <= 2; ++i)
    if (sgn(p[i]) < 0) return false;
  return true;
}

std::pair<Poly, Poly> normalized(Poly a, Poly b) {
  bool pos = false;
  for (int i = 0; i <= 2; ++i)
    if (sgn(b[i]) > 0) pos = true;
  if (!pos) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

ValueExpr frac(const BiPoly& num, const BiPoly& den) { return {num, den}; }

Poly discriminant(const BiPoly& e) { return e[1] * e[1] - Poly(4) * e[2] * e[0]; }

void add_roots(std::vector<RootLocus>& out, const Poly& p) {
  if (p.degree() <= 0) return;
  for (auto& r : isolate_roots(p, true)) out.push_back(r);
}

// ascending, duplicates removed; compare refines the loci in place
void sort_unique(std::vector<RootLocus>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && compare(v[j], v[j - 1]) < 0; --j) std::swap(v[j], v[j - 1]);
  std::vector<RootLocus> out;
  for (auto& r : v)
    if (out.empty() || compare(out.back(), r) != 0) out.push_back(r);
  v = std::move(out);
}

Rational upper(const RootLocus& r) { return r.hi; }

// x = 0, each critical value, midpoints of isolating intervals between them, and last + 1
std::vector<RootLocus> x_samples(std::vector<RootLocus> crit) {
  crit.push_back(RootLocus::exact(0));
  sort_unique(crit);
  std::vector<RootLocus> out;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    out.push_back(crit[i]);
    if (i + 1 < crit.size()) {
      RootLocus &l = crit[i], &r = crit[i + 1];
      while (!(upper(l) < r.lo)) {
        if (!l.is_rational()) l.refine();
        if (!r.is_rational()) r.refine();
      }
      out.push_back(RootLocus::exact(Rational((l.hi + r.lo) / 2)));
    }
  }
  const RootLocus& last = crit.back();
  out.push_back(RootLocus::exact(Rational(last.hi + 1)));
  return out;
}

// z-roots of e(x, z) at the x of pt; nullopt when e vanishes identically there
std::optional<std::vector<ZBranch>> z_roots(const BiPoly& e, SamplePoint& pt) {
  int k = e.degree();
  while (k >= 0 && sign_at_point(e[k], pt) == 0) --k;
  if (k < 0) return std::nullopt;
  std::vector<ZBranch> out;
  if (k == 1) out.push_back(ZBranch::rational(-e[0], e[1]));
  if (k == 2) {
    int sd = sign_at_point(discriminant(e), pt);
    if (sd == 0) out.push_back(ZBranch::quadratic(e[2], e[1], e[0], 1));
    if (sd > 0) {
      out.push_back(ZBranch::quadratic(e[2], e[1], e[0], -1));
      out.push_back(ZBranch::quadratic(e[2], e[1], e[0], 1));
    }
  }
  return out;
}

// Every root in z of the polys at the x of pt, plus a rational point in each
// gap and beyond each end.
std::vector<ZBranch> z_sweep(const std::vector<BiPoly>& polys, SamplePoint pt) {
  std::vector<std::pair<Rational, ZBranch>> roots;
  for (const BiPoly& p : polys) {
    if (p.degree() < 1) continue;
    auto r = z_roots(p, pt);
    if (!r) continue;
    for (ZBranch& z : *r) {
      pt.z = z;
      roots.emplace_back(approximate_value(bivariate_z(), BiPoly(Poly(1)), pt, 128), z);
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<ZBranch> out;
  auto konst = [](const Rational& v) { return ZBranch::rational(Poly(v), Poly(1)); };
  if (roots.empty()) return {konst(-1), konst(1)};
  const Rational eps = Rational(1, Integer(1) << 100);
  out.push_back(konst(Rational(roots.front().first - 1)));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out.push_back(roots[i].second);
    if (i + 1 < roots.size() && roots[i + 1].first - roots[i].first > eps)
      out.push_back(konst(Rational((roots[i].first + roots[i + 1].first) / 2)));
  }
  out.push_back(konst(Rational(roots.back().first + 1)));
  return out;
}

// e * lc(g)^2 = g * q for a linear factor g of a quadratic e
BiPoly cofactor(const BiPoly& e, const BiPoly& g) {
  if (g.degree() >= e.degree()) return BiPoly(Poly(1));
  const Poly &g1 = g[1], &g0 = g[0];
  return BiPoly{e[1] * g1 - e[2] * g0, e[2] * g1};
}

std::vector<RootLocus> curve_critical(const BiPoly& e, const std::vector<BiPoly>& polys) {
  std::vector<RootLocus> crit;
  add_roots(crit, e.lc());
  if (e.degree() == 2) add_roots(crit, discriminant(e));
  for (const BiPoly& p : polys) {
    if (p.degree() <= 0) {
      add_roots(crit, p[0]);
      continue;
    }
    Poly r = resultant(e, p);
    if (!r.is_zero()) {
      add_roots(crit, r);
      continue;
    }
    BiPoly g = bigcd(e, p);
    add_roots(crit, g.lc());
    BiPoly q = cofactor(e, g);
    if (q.degree() >= 1) add_roots(crit, resultant(q, p));
  }
  return crit;
}

std::vector<RootLocus> plane_critical(const std::vector<BiPoly>& polys) {
  std::vector<RootLocus> crit;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const BiPoly& p = polys[i];
    add_roots(crit, p.lc());
    if (p.degree() == 2) add_roots(crit, discriminant(p));
    if (p.degree() <= 0) continue;
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (polys[j].degree() >= 1) add_roots(crit, resultant(p, polys[j]));
  }
  return crit;
}

struct DeepPairing {
  DeepVariant variant;
  unsigned cond;
  const char* cls;
  const char* pinned;
};

const DeepPairing kDeepPairings[] = {
    {DeepVariant::Shifted, Q7, "N17", "G3"},  {DeepVariant::Shifted, Q8, "N20", "G3"},
    {DeepVariant::Shifted, Q9, "N23", "R3"},  {DeepVariant::Shifted, Q9, "N22", "G1"},
    {DeepVariant::Shifted, Q10, "N26", "R3"}, {DeepVariant::Shifted, Q10, "N25", "G1"},
    {DeepVariant::Reversed, Q11, "N29", "G3"},
};

const BiPoly& equality(const DeepAux& aux, const DeepPairing& p) {
  const BiquadAux<BiPoly>& q = aux.q;
  std::string pin = p.pinned;
  switch (p.cond) {
    case Q7: return q.lambda1;
    case Q8: return q.lambda3;
    case Q9: return pin == "R3" ? q.lambda4 : q.d0;
    case Q10: return pin == "R3" ? q.lambda2 : q.d2;
    default: return q.d2;
  }
}

std::vector<BiPoly> clause_polys(const DeepAux& aux) {
  const BiquadAux<BiPoly>& q = aux.q;
  std::vector<BiPoly> out{lift(aux.a_t), lift(aux.b_t), bivariate_z(), q.d0, q.d1, q.d2, lift(aux.f0),
                          lift(aux.f1), q.lambda1, q.lambda2, q.lambda3, q.lambda4, q.alpha1, q.alpha2,
                          q.alpha3, q.c0, q.c2, aux.h_t, lift(aux.b_t) * aux.h_t};
  std::vector<BiPoly> kept;
  for (auto& p : out)
    if (!p.is_zero() && !(p.degree() == 0 && p[0].degree() <= 0)) kept.push_back(p);
  return kept;
}

std::optional<SynthesisResult> search(const Poly& a, const Poly& b, DeepVariant v, Mode mode,
                                      const std::string& tag) {
  DeepAux aux = deep_aux(a, b, v);
  std::vector<BiPoly> polys = clause_polys(aux);
  for (const DeepPairing& pair : kDeepPairings) {
    if (pair.variant != v) continue;
    const BiPoly& e = equality(aux, pair);
    for (SamplePoint& pt : curve_samples(e, polys)) {
      if (sign_at_point(e, pt) != 0) continue;
      DeepSigns s = deep_signs(aux, pt);
      if (!(deep_conditions(s, v) & pair.cond)) continue;
      std::string route = tag + (v == DeepVariant::Shifted ? " shifted " : " reversed ") + deep_condition_names(pair.cond) +
                          ", " + pair.pinned + " = 0";
      try {
        SynthesisResult r = finalize(ClassId{pair.cls}, deep_element_values(aux, pair.cond), pt, a, b, route, mode);
        if (r.verified != Verification::Failed) return r;
      } catch (const SynthesisError& err) {
        if (err.kind() == ErrorKind::Undecided) throw;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

DeepAux deep_aux(const Poly& a, const Poly& b, DeepVariant v) {
  if (std::max(a.degree(), b.degree()) > 2) fail(ErrorKind::Precondition, "degree above 2");
  DeepAux aux;
  aux.variant = v;
  aux.a = a;
  aux.b = b;
  aux.r0 = subresultants(a, b, 2)[0];
  if (sgn(aux.r0) == 0) fail(ErrorKind::NotCoprime, "R0(a,b) = 0");
  Matrix<Rational> bab = bezoutian(a, b, 2);
  const BiPoly z = bivariate_z();
  const bool shifted = v == DeepVariant::Shifted;
  // Reversed row is [x -1]; [-x 1] negates c and d and breaks the N15 identity
  const Poly row[2] = {shifted ? Poly(1) : kX, shifted ? -kX : Poly(-1)};
  aux.f0 = row[0] * Poly(bab[0][0]) + row[1] * Poly(bab[1][0]);
  aux.f1 = row[0] * Poly(bab[0][1]) + row[1] * Poly(bab[1][1]);
  Poly c0, c1, c2;
  BiPoly h0, h1, h2;
  if (shifted) {
    aux.a_t = a.compose(-kX);
    aux.b_t = b.compose(-kX);
    c2 = aux.f1;
    c1 = aux.f0 + kX * aux.f1;
    c0 = kX * aux.f0;
    h2 = lift(Poly(b[2]));
    h1 = lift(Poly(b[1])) - z * lift(aux.f1);
    h0 = lift(Poly(b[0])) - z * lift(aux.f0);
    aux.h_t = h0 - lift(kX) * h1 + lift(kX * kX) * h2;
  } else {
    aux.a_t = a.reverse(2).compose(-kX);
    aux.b_t = b.reverse(2).compose(-kX);
    c2 = kX * aux.f1;
    c1 = kX * aux.f0 + aux.f1;
    c0 = aux.f0;
    h2 = lift(Poly(b[2])) - z * lift(aux.f1);
    h1 = lift(Poly(b[1])) - z * lift(aux.f0);
    h0 = lift(Poly(b[0]));
    aux.h_t = lift(kX * kX) * h0 - lift(kX) * h1 + h2;
  }
  const BiPoly bt = lift(aux.b_t);
  aux.q = biquad_aux<BiPoly>(lift(c0), lift(c1), lift(c2), bt * h0, bt * h1, bt * h2);
  return aux;
}

DeepSigns deep_signs(const DeepAux& aux, SamplePoint& pt) {
  DeepSigns s;
  s.q = biquad_signs(aux.q, [&](const BiPoly& p) { return sign_at_point(p, pt); });
  s.a_t = sign_at_point(aux.a_t, pt);
  s.b_t = sign_at_point(aux.b_t, pt);
  s.z = sign_at_point(bivariate_z(), pt);
  s.f0 = sign_at_point(aux.f0, pt);
  s.f1 = sign_at_point(aux.f1, pt);
  s.h_t = sign_at_point(aux.h_t, pt);
  s.r0 = sgn(aux.r0);
  s.bhr0 = s.b_t * s.h_t * s.r0;
  s.coeffs_nonneg = nonneg_coeffs(aux.a) && nonneg_coeffs(aux.b);
  return s;
}

unsigned deep_conditions(const DeepSigns& s, DeepVariant v) {
  const BiquadSigns& q = s.q;
  auto base = [&](int lambda) {
    return s.coeffs_nonneg && s.z != 0 && s.h_t != 0 && s.r0 != 0 &&
           same_sign({s.a_t, s.b_t, s.z, q.d0, q.d1, q.d2, s.f0, s.f1, lambda});
  };
  unsigned out = 0;
  if (v == DeepVariant::Reversed) {
    if (base(q.lambda1) && q.alpha2 >= 0 && s.bhr0 >= 0) out |= Q11;
    return out;
  }
  if (base(q.lambda1) && q.alpha2 >= 0 && s.bhr0 <= 0) out |= Q7;
  if (base(q.lambda3) && q.alpha2 <= 0 && s.bhr0 <= 0) out |= Q8;
  if (base(q.lambda4) && q.alpha2 <= 0 && s.bhr0 <= 0) out |= Q9;
  if (base(q.lambda2) && q.alpha2 >= 0 && s.bhr0 <= 0) out |= Q10;
  return out;
}

std::string deep_condition_names(unsigned set) {
  static const char* names[] = {"Q7", "Q8", "Q9", "Q10", "Q11"};
  std::string out;
  for (unsigned i = 0; i < 5; ++i)
    if (set & (1u << i)) out += (out.empty() ? "" : ",") + std::string(names[i]);
  return out;
}

SymbolicValues deep_element_values(const DeepAux& aux, unsigned cond) {
  const BiquadAux<BiPoly>& q = aux.q;
  const BiPoly at = lift(aux.a_t), bt = lift(aux.b_t), x = bivariate_x(), z = bivariate_z();
  const BiPoly k = bt * bt * bt * aux.h_t * lift(Poly(aux.r0));
  SymbolicValues v;
  v["R4"] = frac(at, bt);
  v["R5"] = frac(x, bt * z);
  v["L2"] = frac(BiPoly(Poly(1)), bt * z);
  switch (cond) {
    case Q7:
      v["R1"] = frac(q.c0, q.d0);
      v["R2"] = frac(q.alpha2, q.d0 * q.d2);
      v["G3"] = frac(-(q.d2 * q.lambda1), k);
      v["C1"] = frac(-(q.d2 * q.d2 * q.alpha1), k);
      v["L1"] = frac(q.alpha1, q.d0 * q.d0);
      break;
    case Q8:
      v["R1"] = frac(q.c2, q.d2);
      v["R2"] = frac(-q.alpha2, q.d0 * q.d2);
      v["G3"] = frac(-(q.d0 * q.lambda3), k);
      v["C1"] = frac(-(q.d2 * q.d2), q.alpha3);
      v["L1"] = frac(k, q.d0 * q.d0 * q.alpha3);
      break;
    case Q9:
      v["G1"] = frac(q.d0, q.c0);
      v["G2"] = frac(-q.alpha2, q.c0 * q.c2);
      v["R3"] = frac(-(q.c2 * q.lambda4), k);
      v["C1"] = frac(-q.alpha1, q.c0 * q.c0);
      v["L1"] = frac(q.c2 * q.c2 * q.alpha1, k);
      break;
    case Q10:
      v["G1"] = frac(q.d2, q.c2);
      v["G2"] = frac(q.alpha2, q.c0 * q.c2);
      v["R3"] = frac(-(q.c0 * q.lambda2), k);
      v["C1"] = frac(-k, q.c0 * q.c0 * q.alpha3);
      v["L1"] = frac(q.c2 * q.c2, q.alpha3);
      break;
    case Q11:
      v["R1"] = frac(q.c0, q.d0);
      v["R2"] = frac(q.alpha1 * q.alpha1, q.d0 * q.lambda1);
      v["G3"] = frac(q.d2 * q.lambda1, k);
      v["C1"] = frac(bt * z, BiPoly(Poly(1)));
      v["L1"] = frac(k * q.alpha1, q.lambda1 * q.lambda1);
      v["L2"] = frac(q.alpha1, q.d0 * q.d0);
      break;
    default: fail(ErrorKind::Precondition, "not a deep biquadratic condition");
  }
  return v;
}

std::vector<SamplePoint> curve_samples(const BiPoly& e, const std::vector<BiPoly>& polys) {
  std::vector<SamplePoint> out;
  auto sweep = [&](const RootLocus& x) {
    for (ZBranch& z : z_sweep(polys, SamplePoint{x, std::nullopt})) out.push_back(SamplePoint{x, z});
  };
  if (e.is_zero()) {
    for (const RootLocus& x : x_samples(plane_critical(polys))) sweep(x);
    return out;
  }
  if (e.degree() == 0) {
    std::vector<RootLocus> roots;
    add_roots(roots, e[0]);
    for (const RootLocus& x : roots) sweep(x);
    return out;
  }
  for (const RootLocus& x : x_samples(curve_critical(e, polys))) {
    SamplePoint pt{x, std::nullopt};
    auto zs = z_roots(e, pt);
    if (!zs) {
      sweep(x);
      continue;
    }
    for (ZBranch& z : *zs) out.push_back(SamplePoint{x, z});
  }
  return out;
}

SynthesisResult realize_biquad_Z12(const Poly& a0, const Poly& b0, Mode mode) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() != 2) fail(ErrorKind::Precondition, "not biquadratic");
  try {
    SynthesisResult low = realize_low(z.num, z.den);
    StorageCounts sc = count_storage(low.network);
    if (sc.capacitors <= 1 && sc.inductors <= 2) return low;
  } catch (const SynthesisError& e) {
    if (e.kind() != ErrorKind::NotInZ2) throw;
  }
  return realize_biquad_deep(z.num, z.den, mode);
}

SynthesisResult realize_biquad_deep(const Poly& a0, const Poly& b0, Mode mode) {
  Impedance z = Impedance::of(a0, b0);
  if (z.is_open() || z.degree() != 2) fail(ErrorKind::Precondition, "not biquadratic");
  auto [a, b] = normalized(z.num, z.den);
  auto [ra, rb] = normalized(z.den.reverse(2), z.num.reverse(2));
  for (DeepVariant v : {DeepVariant::Shifted, DeepVariant::Reversed})
    if (auto r = search(a, b, v, mode, "biquadratic")) return *r;
  for (DeepVariant v : {DeepVariant::Shifted, DeepVariant::Reversed})
    if (auto r = search(ra, rb, v, mode, "biquadratic")) return transform_result(*r, Transform::P, z.num, z.den);
  fail(ErrorKind::NotInZ12, "no witness (x, z) satisfies Q7-Q11 with its equality in either orientation");
}

}  // namespace rlcsynth
