// SPDX-License-Identifier: Apache-2.0

#include "equisolid/links.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "equisolid/error.hpp"

namespace equisolid {

namespace {

ProjMat pm(const Mat& m) { return ProjMat(m); }

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec apply_p2(const SurfaceAut& g, const Vec& p) { return canonical_scale(g.a.mat() * p); }

std::vector<std::string> point_strings(const std::vector<Vec>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(vec_str(p));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_point_set(std::vector<Vec> a, std::vector<Vec> b) {
  return point_strings(a) == point_strings(b);
}

void require_p2(const SurfaceGroup& g) {
  if (g.elements.empty() || g.elements[0].model != Model::P2) fail("expected a group acting on P2");
}

std::string require_polyhedral(const SurfaceGroup& g) {
  require_p2(g);
  const std::string name = identify_named(g.group).name;
  if (name != "A4" && name != "S4")
    fail("link enumeration covers A4 and S4 only, got " + name);
  return name;
}

Term term(CycNum c, int i, int j, int k) { return Term{std::move(c), {i, j, k}}; }

}  // namespace

CycNum HomPoly::eval(const Vec& p) const {
  CycNum s;
  for (const auto& t : terms) {
    CycNum m = t.coeff;
    for (int i = 0; i < 3; ++i)
      if (t.exp[i]) m *= p[i].pow(t.exp[i]);
    s += m;
  }
  return s;
}

int HomPoly::degree() const {
  return terms.empty() ? 0 : terms[0].exp[0] + terms[0].exp[1] + terms[0].exp[2];
}

std::string HomPoly::str() const {
  static const char* vars = "xyz";
  std::string out;
  for (const auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    std::string c = t.coeff.str();
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      if (!t.exp[i]) continue;
      mono += vars[i];
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    if (!out.empty()) out += " + ";
    out += mono.empty() ? c : (c == "1" ? mono : "(" + c + ")*" + mono);
  }
  return out.empty() ? "0" : out;
}

Vec RationalMapP2::operator()(const Vec& p) const {
  if (p.size() != 3 || is_zero(p)) fail(name + ": expected a point of P2");
  Vec out{f[0].eval(p), f[1].eval(p), f[2].eval(p)};
  if (is_zero(out)) fail(name + ": " + vec_str(canonical_scale(p)) + " is a base point");
  return canonical_scale(out);
}

bool RationalMapP2::is_base_point(const Vec& p) const {
  return f[0].eval(p).is_zero() && f[1].eval(p).is_zero() && f[2].eval(p).is_zero();
}

const RationalMapP2& cremona_map() {
  static const RationalMapP2 m{"cremona",
                               {HomPoly{{term(1, 0, 1, 1)}}, HomPoly{{term(1, 1, 0, 1)}},
                                HomPoly{{term(1, 1, 1, 0)}}},
                               {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}}};
  return m;
}

Vec cremona(const Vec& p) { return cremona_map()(p); }

std::vector<Vec> six_point_orbit(const CycNum& a) {
  std::vector<Vec> pts{{0, 1, a}, {a, 0, 1}, {1, a, 0}, {0, -1, a}, {a, 0, -1}, {-1, a, 0}};
  for (auto& p : pts) p = canonical_scale(p);
  return pts;
}

RationalMapP2 ia_map(const CycNum& a) {
  if (a.is_zero()) fail("i_a needs a nonzero parameter");
  const CycNum a2 = a.pow(2), a4 = a.pow(4), a6 = a.pow(6), a8 = a.pow(8), a10 = a.pow(10);
  const CycNum lead = a.pow(12) + CycNum(1);
  RationalMapP2 m;
  m.name = "i_a";
  m.f[0] = HomPoly{{term(lead, 2, 2, 1), term(-a10, 0, 4, 1), term(CycNum(2) * a8, 0, 2, 3),
                    term(-a6, 0, 0, 5), term(CycNum(2) * a4, 2, 0, 3), term(-a2, 4, 0, 1)}};
  m.f[1] = HomPoly{{term(lead, 2, 1, 2), term(-a10, 4, 1, 0), term(CycNum(2) * a8, 2, 3, 0),
                    term(-a6, 0, 5, 0), term(CycNum(2) * a4, 0, 3, 2), term(-a2, 0, 1, 4)}};
  m.f[2] = HomPoly{{term(lead, 1, 2, 2), term(-a10, 1, 0, 4), term(CycNum(2) * a8, 3, 0, 2),
                    term(-a6, 5, 0, 0), term(CycNum(2) * a4, 3, 2, 0), term(-a2, 1, 4, 0)}};
  m.base_points = six_point_orbit(a);
  return m;
}

Vec involution_ia(const CycNum& a, const Vec& p) { return ia_map(a)(p); }

std::vector<Vec> random_plane_points(std::size_t n, std::uint32_t seed, const RationalMapP2* avoid) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Vec> out;
  while (out.size() < n) {
    Vec p{c(rng), c(rng), c(rng)};
    if (is_zero(p)) continue;
    if (avoid) {
      if (avoid->is_base_point(p)) continue;
      if (avoid->is_base_point((*avoid)(p))) continue;
    }
    out.push_back(canonical_scale(p));
  }
  return out;
}

namespace {

// g i g^-1 = i on every sample; sample points landing in the base locus are skipped.
bool commutes_on(const SurfaceAut& g, const RationalMapP2& map, const SurfaceAut* pre,
                 const std::vector<Vec>& samples, EquivarianceReport* rep) {
  const SurfaceAut gi = g.inverse();
  auto twisted = [&](const Vec& p) { return pre ? apply_p2(*pre, map(p)) : map(p); };
  for (const auto& p : samples) {
    const Vec q = apply_p2(gi, p);
    if (map.is_base_point(q) || map.is_base_point(p)) continue;
    const Vec lhs = apply_p2(g, twisted(q));
    const Vec rhs = twisted(p);
    if (rep) ++rep->checked;
    if (lhs != rhs) {
      if (rep) {
        rep->equivariant = false;
        rep->element = g;
        rep->point = p;
        rep->lhs = lhs;
        rep->rhs = rhs;
      }
      return false;
    }
  }
  return true;
}

}  // namespace

EquivarianceReport check_equivariance(const SurfaceGroup& g, const RationalMapP2& map,
                                      const std::vector<Vec>& samples) {
  require_p2(g);
  EquivarianceReport rep;
  for (const auto& e : g.elements)
    if (!commutes_on(e, map, nullptr, samples, &rep)) break;
  if (rep.equivariant) return rep;
  const SurfaceGroup& big = octahedral_group();
  const bool inside = std::all_of(g.elements.begin(), g.elements.end(),
                                  [&](const SurfaceAut& e) { return big.find(e).has_value(); });
  if (!inside) return rep;
  for (const auto& c : big.elements) {
    if (g.find(c)) continue;
    const bool ok = std::all_of(g.elements.begin(), g.elements.end(), [&](const SurfaceAut& e) {
      return commutes_on(e, map, &c, samples, nullptr);
    });
    if (ok) {
      rep.twist = c;
      break;
    }
  }
  return rep;
}

const SurfaceGroup& octahedral_group() {
  static const SurfaceGroup g = close_surface_group(
      {SurfaceAut::p2(pm(Mat{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
       SurfaceAut::p2(pm(Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})),
       SurfaceAut::p2(pm(Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}))});
  return g;
}

const SurfaceGroup& tetrahedral_group() {
  static const SurfaceGroup g = close_surface_group(
      {SurfaceAut::p2(pm(Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})),
       SurfaceAut::p2(pm(Mat{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))});
  return g;
}

// ---- orbits ----

std::vector<Vec> PlaneOrbit::points() const {
  std::vector<Vec> out;
  for (const auto& p : orbit.points) out.push_back(p.x);
  return out;
}

std::string PlaneOrbit::str() const {
  std::string out = (family ? "family, length " : "length ") + std::to_string(length()) + " {";
  auto pts = point_strings(points());
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + pts[i];
  out += "}";
  if (general_position) out += " general position";
  if (collinear_triple) out += " collinear triple";
  if (conic) out += " on conic " + conic_str(*conic);
  return out;
}

namespace {

PlaneOrbit annotate(OrbitReport rep) {
  PlaneOrbit o;
  o.orbit = std::move(rep);
  const auto pts = o.points();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n && !o.collinear_triple; ++i)
    for (std::size_t j = i + 1; j < n && !o.collinear_triple; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(pts[i], pts[j], pts[k])) {
          o.collinear_triple = true;
          break;
        }
  if (n >= 5) o.conic = on_common_conic(pts);
  o.general_position = n <= 8 && in_general_position_p2(pts);
  return o;
}

bool fixes_pointwise(const SurfaceAut& g, const std::vector<Vec>& span) {
  for (const auto& v : {span[0], span[1], add(span[0], span[1])})
    if (apply_p2(g, canonical_scale(v)) != canonical_scale(v)) return false;
  return true;
}

bool on_line(const Vec& normal, const Vec& p) {
  CycNum s;
  for (int i = 0; i < 3; ++i) s += normal[i] * p[i];
  return s.is_zero();
}

}  // namespace

std::vector<PlaneOrbit> enumerate_small_orbits(const SurfaceGroup& g, std::size_t bound) {
  require_polyhedral(g);
  std::vector<Vec> candidates;
  std::vector<std::vector<Vec>> lines;
  for (const auto& e : g.elements) {
    if (e.is_identity()) continue;
    for (const auto& c : fixed_locus({e}, Model::P2).components) {
      if (c.kind == ComponentKind::Point) candidates.push_back(c.point.x);
      if (c.kind == ComponentKind::Line) lines.push_back(c.span);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Vec p = cross(cross(lines[i][0], lines[i][1]), cross(lines[j][0], lines[j][1]));
      if (!is_zero(p)) candidates.push_back(canonical_scale(p));
    }

  std::vector<PlaneOrbit> out;
  std::set<std::vector<std::string>> seen;

  // families along pointwise fixed lines
  struct Family {
    std::vector<Vec> normals;
    std::size_t length;
  };
  std::vector<Family> families;
  std::set<std::vector<std::string>> seen_lines;
  for (const auto& span : lines) {
    std::size_t pw = 0;
    for (const auto& e : g.elements) pw += fixes_pointwise(e, span);
    const std::size_t generic = g.order() / pw;
    if (generic > bound) continue;
    std::vector<Vec> normals;
    for (const auto& e : g.elements)
      normals.push_back(canonical_scale(cross(e.a.mat() * span[0], e.a.mat() * span[1])));
    auto key = point_strings(normals);
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (!seen_lines.insert(key).second) continue;
    std::vector<Vec> uniq;
    for (const auto& nrm : normals)
      if (std::find(uniq.begin(), uniq.end(), nrm) == uniq.end()) uniq.push_back(nrm);
    for (int k = 2; k < 200; ++k) {
      Vec p = canonical_scale(add(span[0], scale(span[1], CycNum(k))));
      auto rep = orbit(g, SurfacePoint::p2(p));
      if (rep.length() != generic) continue;
      PlaneOrbit o = annotate(std::move(rep));
      if (!o.general_position) continue;
      o.family = true;
      o.lines = uniq;
      seen.insert(point_strings(o.points()));
      out.push_back(std::move(o));
      families.push_back({uniq, generic});
      break;
    }
  }

  for (const auto& p : candidates) {
    auto rep = orbit(g, SurfacePoint::p2(p));
    if (rep.length() > bound) continue;
    PlaneOrbit o = annotate(std::move(rep));
    if (!seen.insert(point_strings(o.points())).second) continue;
    const auto pts = o.points();
    const bool absorbed = std::any_of(families.begin(), families.end(), [&](const Family& f) {
      return f.length == pts.size() && std::all_of(pts.begin(), pts.end(), [&](const Vec& q) {
               return std::any_of(f.normals.begin(), f.normals.end(),
                                  [&](const Vec& nrm) { return on_line(nrm, q); });
             });
    });
    if (!absorbed) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const PlaneOrbit& a, const PlaneOrbit& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.family != b.family) return !a.family;
    return point_strings(a.points()) < point_strings(b.points());
  });
  return out;
}

std::string SarkisovLink::str() const {
  std::string out = std::string("type ") + (type == 1 ? "I" : "II") + " at " + center.str() + " -> " +
                    target;
  if (map) out += " via " + *map;
  return out;
}

LinkEnumeration enumerate_links_p2(const SurfaceGroup& g) {
  require_polyhedral(g);
  LinkEnumeration out;
  const std::vector<Vec> coordinate_points{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (auto& o : enumerate_small_orbits(g, 8)) {
    if (!o.general_position) {
      std::string reason = "not in general position";
      if (o.conic && o.length() >= 6) reason = "on conic " + conic_str(*o.conic);
      else if (o.collinear_triple) reason = "three collinear points";
      out.blocked.push_back({std::move(o), reason});
      continue;
    }
    SarkisovLink l;
    switch (o.length()) {
      case 1: l.type = 1; l.target = "F1 conic bundle"; break;
      case 2: l.type = 2; l.target = "P1xP1"; break;
      case 3:
        l.type = 2;
        l.target = "P2";
        if (same_point_set(o.points(), coordinate_points)) {
          l.map = "cremona";
          l.target = "P2 via Cremona";
        }
        break;
      case 4: l.type = 1; l.target = "dP5 conic bundle"; break;
      case 5: l.type = 2; l.target = "dP5"; break;
      case 6: {
        l.type = 2;
        l.target = "P2";
        for (const auto& p : o.points())
          if (p[0].is_zero() && !p[2].is_zero() && same_point_set(o.points(), six_point_orbit(p[2]))) {
            l.map = "i_a";
            l.target = o.family ? "P2 via i_a, one-parameter family" : "P2 via i_a";
            break;
          }
        break;
      }
      default: l.type = 2; l.target = "P2"; break;
    }
    l.center = std::move(o);
    out.links.push_back(std::move(l));
  }
  return out;
}

// ---- conic pencils ----

namespace {

Vec conic_row(const Vec& p) {
  return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

Mat conic_matrix(const Vec& c) {
  const CycNum h(1, 2);
  return Mat{{c[0], c[3] * h, c[4] * h}, {c[3] * h, c[1], c[5] * h}, {c[4] * h, c[5] * h, c[2]}};
}

Vec pullback(const Vec& c, const Mat& m) {
  const Mat s = m.transpose() * conic_matrix(c) * m;
  return {s(0, 0), s(1, 1), s(2, 2), s(0, 1) * CycNum(2), s(0, 2) * CycNum(2), s(1, 2) * CycNum(2)};
}

CycNum conic_value(const Vec& c, const Vec& p) {
  const Vec r = conic_row(p);
  CycNum s;
  for (int i = 0; i < 6; ++i) s += c[i] * r[i];
  return s;
}

}  // namespace

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = rank(Mat::from_rows(both));
  return r == rank(Mat::from_rows(a)) && r == rank(Mat::from_rows(b));
}

PencilCheck conic_pencil_check(const SurfaceGroup& g, const std::vector<Vec>& orbit4) {
  require_p2(g);
  if (orbit4.size() != 4) fail("conic pencil needs four points");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (collinear(orbit4[i], orbit4[j], orbit4[k])) fail("degenerate orbit: three collinear points");
  std::vector<Vec> rows;
  for (const auto& p : orbit4) rows.push_back(conic_row(p));
  PencilCheck out;
  out.basis = kernel(Mat::from_rows(rows));
  if (out.basis.size() != 2) fail("internal: pencil of conics is not two-dimensional");
  for (auto& b : out.basis) b = canonical_scale(b);

  for (Index i = 0; i < g.order(); ++i) {
    const Mat& m = g.elements[i].a.mat();
    std::array<std::array<CycNum, 2>, 2> act{};
    for (int j = 0; j < 2; ++j) {
      const Vec v = pullback(out.basis[j], m);
      auto k = kernel(Mat::from_cols({out.basis[0], out.basis[1], v}));
      if (k.size() != 1 || k[0][2].is_zero()) fail("point set is not invariant under the group");
      act[0][j] = -k[0][0] / k[0][2];
      act[1][j] = -k[0][1] / k[0][2];
    }
    if (act[0][1].is_zero() && act[1][0].is_zero() && act[0][0] == act[1][1]) out.kernel.push_back(i);
  }
  out.kernel_name = identify_named(induced(g.group, out.kernel)).name;
  if (out.kernel.size() == 1) {
    out.note = "no obstruction computed";
    return out;
  }
  std::vector<SurfaceAut> gens;
  for (Index i : out.kernel) gens.push_back(g.elements[i]);
  const FixedLocus fix = fixed_locus(gens, Model::P2);
  bool free = !fix.whole;
  std::vector<Vec> fixed_points;
  for (const auto& c : fix.components) {
    if (c.kind == ComponentKind::Line) free = false;  // a fixed line meets every member
    if (c.kind == ComponentKind::Point) fixed_points.push_back(c.point.x);
  }
  for (int lambda : {1, 2, 3, 5, 7}) {
    const Vec member = add(out.basis[0], scale(out.basis[1], CycNum(lambda)));
    if (det(conic_matrix(member)).is_zero()) continue;
    ++out.smooth_members;
    for (const auto& p : fixed_points)
      if (conic_value(member, p).is_zero()) free = false;
  }
  if (out.smooth_members == 0) {
    free = false;
    out.note = "no smooth member sampled";
  }
  out.fibrewise_free = free;
  return out;
}

// ---- quintic del Pezzo constructions ----

Dp5Construction dp5_construction(const SurfaceGroup& g) {
  require_p2(g);
  const std::string name = identify_named(g.group).name;
  if (name != "Z5" && name != "D5") fail("expected a group of type Z5 or D5, got " + name);
  const CycNum z = CycNum::root_of_unity(5, 1);
  const SurfaceAut m = SurfaceAut::p2(pm(Mat{{1, 0, 0}, {0, z, 0}, {0, 0, z.inverse()}}));
  const SurfaceAut n = SurfaceAut::p2(pm(Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  static const SurfaceGroup big = close_surface_group({m, n});
  const bool inside = std::all_of(g.elements.begin(), g.elements.end(),
                                  [&](const SurfaceAut& e) { return big.find(e).has_value(); });
  if (!g.find(m) || !inside) fail("group is not generated by the quintic construction matrices");
  Dp5Construction out;
  out.orbit5 = orbit(g, SurfacePoint::p2(Vec{1, 1, 1}));
  if (out.orbit5.length() != 5)
    fail("orbit of (1:1:1) has length " + std::to_string(out.orbit5.length()) + ", expected 5");
  std::vector<Vec> pts;
  for (const auto& p : out.orbit5.points) pts.push_back(p.x);
  out.no_three_collinear = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        if (collinear(pts[i], pts[j], pts[k])) out.no_three_collinear = false;
  out.conic = on_common_conic(pts);
  out.fixed_point = Vec{1, 0, 0};
  for (const auto& e : g.elements)
    if (apply_p2(e, out.fixed_point) != out.fixed_point) fail("internal: (1:0:0) is not fixed");
  return out;
}

}  // namespace equisolid
