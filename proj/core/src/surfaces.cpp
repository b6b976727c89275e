// SPDX-License-Identifier: Apache-2.0

#include "equisolid/surfaces.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

namespace equisolid {

std::string model_name(Model m) {
  switch (m) {
    case Model::P1:
      return "P1";
    case Model::P2:
      return "P2";
    case Model::P1xP1:
      return "P1xP1";
    case Model::DP6:
      return "dP6";
  }
  return "?";
}

namespace {

std::size_t model_dim(Model m) {
  return (m == Model::P1 || m == Model::P1xP1) ? 2 : 3;
}

void check_dim(const ProjMat& m, std::size_t n, const char* what) {
  if (m.dim() != n) fail(std::string(what) + ": expected a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
}

const Mat& form(int k) {
  static const Mat f1{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  static const Mat f2{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
  return k == 0 ? f1 : f2;
}

}  // namespace

// ---- automorphisms ----

SurfaceAut SurfaceAut::p1(const ProjMat& m) {
  check_dim(m, 2, "P1 automorphism");
  return {Model::P1, m, ProjMat(), false};
}

SurfaceAut SurfaceAut::p2(const ProjMat& m) {
  check_dim(m, 3, "P2 automorphism");
  return {Model::P2, m, ProjMat(), false};
}

SurfaceAut SurfaceAut::p1p1(const ProjMat& a, const ProjMat& b, bool swap) {
  check_dim(a, 2, "P1xP1 automorphism");
  check_dim(b, 2, "P1xP1 automorphism");
  return {Model::P1xP1, a, b, swap};
}

SurfaceAut SurfaceAut::dp6(const ProjMat& a, const ProjMat& b, bool swap) {
  check_dim(a, 3, "dP6 automorphism");
  check_dim(b, 3, "dP6 automorphism");
  if (!dp6_membership(a, b, swap))
    fail("not an automorphism of the dP6 model: the pullback of span{xu-yv, xu-zw} "
         "differs from the span");
  return {Model::DP6, a, b, swap};
}

SurfaceAut SurfaceAut::identity(Model m) {
  const std::size_t n = model_dim(m);
  SurfaceAut g;
  g.model = m;
  g.a = ProjMat::identity(n);
  if (m == Model::P1xP1 || m == Model::DP6) g.b = ProjMat::identity(n);
  return g;
}

SurfaceAut SurfaceAut::inverse() const {
  SurfaceAut g = *this;
  if (!is_product()) {
    g.a = a.inverse();
  } else if (swap) {
    g.a = b.inverse();
    g.b = a.inverse();
  } else {
    g.a = a.inverse();
    g.b = b.inverse();
  }
  return g;
}

bool SurfaceAut::is_identity() const {
  return !swap && a.is_identity() && (!is_product() || b.is_identity());
}

SurfaceAut operator*(const SurfaceAut& g, const SurfaceAut& h) {
  if (g.model != h.model) fail("composition across different models");
  SurfaceAut r;
  r.model = g.model;
  if (!g.is_product()) {
    r.a = g.a * h.a;
    return r;
  }
  if (g.swap) {
    r.a = g.a * h.b;
    r.b = g.b * h.a;
    r.swap = !h.swap;
  } else {
    r.a = g.a * h.a;
    r.b = g.b * h.b;
    r.swap = h.swap;
  }
  return r;
}

std::size_t SurfaceAut::hash() const {
  std::size_t h = a.hash() * 31 + static_cast<std::size_t>(model);
  if (is_product()) h = (h * 1000003u) ^ b.hash() ^ (swap ? 0x5bd1e995u : 0u);
  return h;
}

std::string SurfaceAut::str() const {
  if (!is_product()) return a.str();
  return "(" + a.str() + ", " + b.str() + (swap ? ", swap)" : ")");
}

bool dp6_membership(const ProjMat& a, const ProjMat& b, bool swap) {
  if (a.dim() != 3 || b.dim() != 3) return false;
  Mat stacked(4, 9);
  for (int k = 0; k < 2; ++k) {
    Mat pull = swap ? b.mat().transpose() * form(k).transpose() * a.mat()
                    : a.mat().transpose() * form(k) * b.mat();
    for (std::size_t i = 0; i < 9; ++i) {
      stacked(k, i) = form(k)(i / 3, i % 3);
      stacked(2 + k, i) = pull(i / 3, i % 3);
    }
  }
  return rank(stacked) == 2;
}

// ---- points ----

SurfacePoint SurfacePoint::p1(Vec v) {
  if (v.size() != 2) fail("P1 point needs 2 coordinates");
  return {Model::P1, canonical_scale(std::move(v)), {}};
}

SurfacePoint SurfacePoint::p2(Vec v) {
  if (v.size() != 3) fail("P2 point needs 3 coordinates");
  return {Model::P2, canonical_scale(std::move(v)), {}};
}

SurfacePoint SurfacePoint::p1p1(Vec p, Vec q) {
  if (p.size() != 2 || q.size() != 2) fail("P1xP1 point needs two pairs of coordinates");
  return {Model::P1xP1, canonical_scale(std::move(p)), canonical_scale(std::move(q))};
}

SurfacePoint SurfacePoint::p1p1_affine(const CycNum& x, const CycNum& y) {
  return p1p1({1, x}, {1, y});
}

bool on_dp6(const Vec& p, const Vec& q) {
  if (p.size() != 3 || q.size() != 3) return false;
  const CycNum a = p[0] * q[0];
  return a == p[1] * q[1] && a == p[2] * q[2];
}

SurfacePoint SurfacePoint::dp6(Vec p, Vec q) {
  if (p.size() != 3 || q.size() != 3) fail("dP6 point needs two triples of coordinates");
  if (!on_dp6(p, q)) fail("point " + vec_str(p) + "x" + vec_str(q) + " is not on xu=yv=zw");
  return {Model::DP6, canonical_scale(std::move(p)), canonical_scale(std::move(q))};
}

namespace {

bool vec_less(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return structural_less(a[i], b[i]);
  }
  return false;
}

}  // namespace

bool operator<(const SurfacePoint& a, const SurfacePoint& b) {
  if (a.model != b.model) return a.model < b.model;
  if (a.x != b.x) return vec_less(a.x, b.x);
  return vec_less(a.y, b.y);
}

std::size_t SurfacePoint::hash() const { return vec_hash(x) * 131 ^ vec_hash(y); }

std::string SurfacePoint::str() const {
  if (y.empty()) return vec_str(x);
  return vec_str(x) + "x" + vec_str(y);
}

SurfacePoint act(const SurfaceAut& g, const SurfacePoint& p) {
  if (g.model != p.model) fail("model mismatch between automorphism and point");
  SurfacePoint r;
  r.model = p.model;
  if (!g.is_product()) {
    r.x = canonical_scale(g.a.mat() * p.x);
    return r;
  }
  if (g.swap) {
    r.x = canonical_scale(g.a.mat() * p.y);
    r.y = canonical_scale(g.b.mat() * p.x);
  } else {
    r.x = canonical_scale(g.a.mat() * p.x);
    r.y = canonical_scale(g.b.mat() * p.y);
  }
  return r;
}

SurfaceGroup close_surface_group(const std::vector<SurfaceAut>& gens, std::size_t cap) {
  if (gens.empty()) fail("closure needs at least one generator");
  for (const auto& g : gens)
    if (g.model != gens[0].model) fail("generators live on different models");
  return close_group<SurfaceAut>(
      SurfaceAut::identity(gens[0].model), gens,
      [](const SurfaceAut& a, const SurfaceAut& b) { return a * b; },
      [](const SurfaceAut& a) { return a.hash(); },
      [](const SurfaceAut& a, const SurfaceAut& b) { return a == b; }, cap);
}

Subgroup swap_free_part(const SurfaceGroup& g) {
  Subgroup s;
  for (Index i = 0; i < g.order(); ++i)
    if (!g.elements[i].swap) s.push_back(i);
  return s;
}

OrbitReport orbit(const SurfaceGroup& g, const SurfacePoint& p) {
  OrbitReport rep;
  rep.base = p;
  std::unordered_set<std::string> seen;
  rep.points.push_back(p);
  seen.insert(p.str());
  for (std::size_t i = 0; i < rep.points.size(); ++i)
    for (Index gen : g.group.generators()) {
      SurfacePoint q = act(g.elements[gen], rep.points[i]);
      if (seen.insert(q.str()).second) rep.points.push_back(std::move(q));
    }
  for (Index i = 0; i < g.order(); ++i)
    if (act(g.elements[i], p) == p) rep.stabilizer.push_back(i);
  return rep;
}

// ---- fixed loci ----

std::vector<std::vector<Vec>> fixed_subspaces(const std::vector<ProjMat>& gens) {
  if (gens.empty()) fail("fixed subspaces need a generator");
  const std::size_t n = gens[0].dim();
  std::vector<Mat> mats;
  for (const auto& g : gens)
    if (!g.is_identity()) mats.push_back(g.mat());
  if (mats.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(Mat::identity(n).col(i));
    return {all};
  }
  LinearGroup lift = lift_closure(mats);
  const FiniteGroup& h = lift.group;
  const std::vector<Index> sg = small_generating_set(h);
  std::size_t e = 1;
  for (std::size_t f : abelian_invariants(h)) e = std::lcm(e, f);
  std::vector<std::vector<Vec>> out;
  std::vector<std::size_t> chi(sg.size(), 0);
  std::vector<long> val(h.order());
  for (;;) {
    // consistency of the character along the generator BFS
    std::fill(val.begin(), val.end(), -1);
    val[0] = 0;
    std::vector<Index> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t j = 0; j < sg.size() && ok; ++j) {
        const Index y = h.mul(queue[i], sg[j]);
        const long v = static_cast<long>((val[queue[i]] + chi[j]) % e);
        if (val[y] < 0) {
          val[y] = v;
          queue.push_back(y);
        } else if (val[y] != v) {
          ok = false;
        }
      }
    if (ok) {
      Mat proj(n, n);
      for (Index x = 0; x < h.order(); ++x) {
        const CycNum w = CycNum::root_of_unity(static_cast<int>(e), -val[x]);
        proj = proj + lift.elements[x].scaled(w);
      }
      auto image = column_space(proj);
      if (!image.empty()) out.push_back(std::move(image));
    }
    std::size_t k = 0;
    while (k < chi.size() && ++chi[k] == e) chi[k++] = 0;
    if (k == chi.size()) break;
  }
  return out;
}

std::string FixedComponent::str() const {
  switch (kind) {
    case ComponentKind::Point:
      return "point " + point.str();
    case ComponentKind::Line: {
      std::string s = "line <";
      for (std::size_t i = 0; i < span.size(); ++i) s += (i ? ", " : "") + vec_str(span[i]);
      return s + ">";
    }
    case ComponentKind::Ruling:
      return "ruling factor" + std::to_string(factor + 1) + "=" + vec_str(coordinate);
    case ComponentKind::Graph:
      return "graph " + graph.str();
    case ComponentKind::Curve: {
      std::string s = "curve factor" + std::to_string(factor + 1) + "=" + vec_str(coordinate) + " <";
      for (std::size_t i = 0; i < span.size(); ++i) s += (i ? ", " : "") + vec_str(span[i]);
      return s + ">";
    }
    case ComponentKind::Unresolved: {
      std::string s = "unresolved <";
      for (std::size_t i = 0; i < span.size(); ++i) s += (i ? ", " : "") + vec_str(span[i]);
      return s + ">";
    }
  }
  return "?";
}

std::vector<SurfacePoint> FixedLocus::points() const {
  std::vector<SurfacePoint> out;
  for (const auto& c : components)
    if (c.kind == ComponentKind::Point) out.push_back(c.point);
  return out;
}

namespace {

SurfacePoint make_point(Model m, const Vec& x, const Vec& y) {
  switch (m) {
    case Model::P1:
      return SurfacePoint::p1(x);
    case Model::P2:
      return SurfacePoint::p2(x);
    case Model::P1xP1:
      return SurfacePoint::p1p1(x, y);
    case Model::DP6:
      return SurfacePoint::dp6(x, y);
  }
  fail("unknown model");
}

FixedComponent point_component(const SurfacePoint& p) {
  FixedComponent c;
  c.kind = ComponentKind::Point;
  c.point = p;
  return c;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Points of a 1-dimensional component at parameters 0, infinity, 1 and t.
SurfacePoint curve_point(Model m, const FixedComponent& c, const CycNum& t) {
  auto along = [&](const Vec& u, const Vec& v) {
    if (t.is_zero()) return u;
    return add(u, scale(v, t));
  };
  switch (c.kind) {
    case ComponentKind::Line:
      return make_point(m, along(c.span[0], c.span[1]), {});
    case ComponentKind::Ruling: {
      Vec free = along(unit(2, 0), unit(2, 1));
      return c.factor == 0 ? make_point(m, c.coordinate, free) : make_point(m, free, c.coordinate);
    }
    case ComponentKind::Graph: {
      Vec p = along(unit(2, 0), unit(2, 1));
      return make_point(m, p, c.graph.mat() * p);
    }
    case ComponentKind::Curve: {
      Vec free = along(c.span[0], c.span[1]);
      return c.factor == 0 ? make_point(m, c.coordinate, free) : make_point(m, free, c.coordinate);
    }
    default:
      fail("component is not a curve");
  }
}

std::vector<SurfacePoint> test_points(Model m, const FixedComponent& c) {
  if (c.kind == ComponentKind::Point) return {c.point};
  if (c.kind == ComponentKind::Unresolved) return {};
  std::vector<SurfacePoint> pts{curve_point(m, c, 0), curve_point(m, c, 1)};
  // the point at infinity of the parameter
  switch (c.kind) {
    case ComponentKind::Line:
      pts.push_back(make_point(m, c.span[1], {}));
      break;
    case ComponentKind::Ruling:
      pts.push_back(c.factor == 0 ? make_point(m, c.coordinate, unit(2, 1))
                                  : make_point(m, unit(2, 1), c.coordinate));
      break;
    case ComponentKind::Graph:
      pts.push_back(make_point(m, unit(2, 1), c.graph.mat() * unit(2, 1)));
      break;
    case ComponentKind::Curve:
      pts.push_back(c.factor == 0 ? make_point(m, c.coordinate, c.span[1])
                                  : make_point(m, c.span[1], c.coordinate));
      break;
    default:
      break;
  }
  return pts;
}

bool contains(const FixedComponent& c, const SurfacePoint& p) {
  switch (c.kind) {
    case ComponentKind::Point:
      return c.point == p;
    case ComponentKind::Line: {
      Mat m = Mat::from_rows({c.span[0], c.span[1], p.x});
      return rank(m) == 2;
    }
    case ComponentKind::Ruling:
      return (c.factor == 0 ? p.x : p.y) == c.coordinate;
    case ComponentKind::Graph:
      return p.y == canonical_scale(c.graph.mat() * p.x);
    case ComponentKind::Curve: {
      if ((c.factor == 0 ? p.x : p.y) != c.coordinate) return false;
      const Vec& free = c.factor == 0 ? p.y : p.x;
      return rank(Mat::from_rows({c.span[0], c.span[1], free})) == 2;
    }
    case ComponentKind::Unresolved:
      return false;
  }
  return false;
}

std::vector<Vec> eigen_points(const ProjMat& m) {
  std::vector<Vec> out;
  for (const auto& s : fixed_subspaces({m}))
    if (s.size() == 1) out.push_back(canonical_scale(s[0]));
  return out;
}

// Intersection of two components of a P1xP1 fixed locus.
std::vector<FixedComponent> intersect_p1p1(const FixedComponent& a, const FixedComponent& b) {
  if (a.kind == ComponentKind::Point) {
    if (contains(b, a.point)) return {a};
    return {};
  }
  if (b.kind == ComponentKind::Point) return intersect_p1p1(b, a);
  if (a.kind == ComponentKind::Ruling && b.kind == ComponentKind::Ruling) {
    if (a.factor == b.factor) {
      if (a.coordinate == b.coordinate) return {a};
      return {};
    }
    const Vec& p = a.factor == 0 ? a.coordinate : b.coordinate;
    const Vec& q = a.factor == 0 ? b.coordinate : a.coordinate;
    return {point_component(SurfacePoint::p1p1(p, q))};
  }
  if (a.kind == ComponentKind::Graph && b.kind == ComponentKind::Ruling) return intersect_p1p1(b, a);
  if (a.kind == ComponentKind::Ruling && b.kind == ComponentKind::Graph) {
    if (a.factor == 0)
      return {point_component(SurfacePoint::p1p1(a.coordinate, b.graph.mat() * a.coordinate))};
    Vec p = inverse(b.graph.mat()) * a.coordinate;
    return {point_component(SurfacePoint::p1p1(p, a.coordinate))};
  }
  // two graphs
  if (a.graph == b.graph) return {a};
  std::vector<FixedComponent> out;
  for (const Vec& p : eigen_points(b.graph.inverse() * a.graph))
    out.push_back(point_component(SurfacePoint::p1p1(p, a.graph.mat() * p)));
  return out;
}

std::vector<ProjMat> factor_mats(const SurfaceGroup& h, const Subgroup& part, bool first) {
  FiniteGroup sub = induced(h.group, part);
  std::vector<ProjMat> out;
  for (Index k : small_generating_set(sub)) out.push_back(first ? h.elements[part[k]].a
                                                                : h.elements[part[k]].b);
  if (out.empty()) out.push_back(ProjMat::identity(model_dim(h.elements[0].model)));
  return out;
}

void dedupe(std::vector<FixedComponent>& comps) {
  std::vector<FixedComponent> out;
  std::set<std::string> seen;
  for (auto& c : comps)
    if (seen.insert(c.str()).second) out.push_back(std::move(c));
  comps = std::move(out);
}

FixedLocus fixed_locus_projective(const std::vector<ProjMat>& mats, Model m) {
  FixedLocus out;
  const std::size_t n = model_dim(m);
  for (auto& s : fixed_subspaces(mats)) {
    if (s.size() == n) {
      out.whole = true;
      if (m == Model::P2)
        for (std::size_t i = 0; i < 3; ++i) {
          FixedComponent c;
          c.kind = ComponentKind::Line;
          c.span = {unit(3, (i + 1) % 3), unit(3, (i + 2) % 3)};
          std::sort(c.span.begin(), c.span.end(), [](const Vec& a, const Vec& b) {
            return a != b && !vec_less(a, b);
          });
          out.components.push_back(std::move(c));
        }
      continue;
    }
    if (s.size() == 1) {
      out.components.push_back(point_component(make_point(m, s[0], {})));
    } else {
      FixedComponent c;
      c.kind = ComponentKind::Line;
      c.span = s;
      out.components.push_back(std::move(c));
    }
  }
  return out;
}

FixedLocus fixed_locus_p1p1(const SurfaceGroup& h) {
  FixedLocus out;
  const Subgroup h0 = swap_free_part(h);
  auto f1 = fixed_subspaces(factor_mats(h, h0, true));
  auto f2 = fixed_subspaces(factor_mats(h, h0, false));
  std::vector<FixedComponent> base;
  bool whole = false;
  for (const auto& s1 : f1)
    for (const auto& s2 : f2) {
      const bool w1 = s1.size() == 2, w2 = s2.size() == 2;
      if (w1 && w2) {
        whole = true;
      } else if (!w1 && !w2) {
        base.push_back(point_component(SurfacePoint::p1p1(s1[0], s2[0])));
      } else {
        FixedComponent c;
        c.kind = ComponentKind::Ruling;
        c.factor = w1 ? 1 : 0;
        c.coordinate = canonical_scale(w1 ? s2[0] : s1[0]);
        base.push_back(std::move(c));
      }
    }
  std::optional<SurfaceAut> swap_elem;
  for (const auto& g : h.elements)
    if (g.swap) {
      swap_elem = g;
      break;
    }
  if (!swap_elem) {
    out.whole = whole;
    out.components = std::move(base);
    return out;
  }
  // Fix(g) for g = (A, B; swap): q = B p with p fixed by A B
  std::vector<FixedComponent> swap_fix;
  const ProjMat ab = swap_elem->a * swap_elem->b;
  if (ab.mat().is_identity()) {
    FixedComponent c;
    c.kind = ComponentKind::Graph;
    c.graph = swap_elem->b;
    swap_fix.push_back(std::move(c));
  } else {
    for (const Vec& p : eigen_points(ab))
      swap_fix.push_back(point_component(SurfacePoint::p1p1(p, swap_elem->b.mat() * p)));
  }
  if (whole) {
    out.components = std::move(swap_fix);
  } else {
    for (const auto& a : base)
      for (const auto& b : swap_fix)
        for (auto& c : intersect_p1p1(a, b)) out.components.push_back(std::move(c));
  }
  dedupe(out.components);
  return out;
}

// Solutions q in span(w) of p0 q0 = p1 q1 = p2 q2 (or with the roles exchanged).
std::vector<Vec> dp6_partner_space(const Vec& p, const std::vector<Vec>& w) {
  Mat eq(2, w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    eq(0, k) = p[0] * w[k][0] - p[1] * w[k][1];
    eq(1, k) = p[0] * w[k][0] - p[2] * w[k][2];
  }
  std::vector<Vec> out;
  for (const auto& c : kernel(eq)) {
    Vec v(3);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (!c[k].is_zero()) v = add(v, scale(w[k], c[k]));
    out.push_back(v);
  }
  if (out.empty()) return out;
  return column_space(Mat::from_cols(out));
}

std::vector<FixedComponent> dp6_pair(const std::vector<Vec>& u, const std::vector<Vec>& w,
                                     bool& unresolved) {
  std::vector<FixedComponent> out;
  if (u.size() == 1 || w.size() == 1) {
    const bool first_is_point = u.size() == 1;
    const Vec p = canonical_scale(first_is_point ? u[0] : w[0]);
    auto partner = dp6_partner_space(p, first_is_point ? w : u);
    if (partner.size() == 1) {
      Vec q = canonical_scale(partner[0]);
      out.push_back(point_component(first_is_point ? SurfacePoint::dp6(p, q)
                                                   : SurfacePoint::dp6(q, p)));
    } else if (partner.size() == 2) {
      FixedComponent c;
      c.kind = ComponentKind::Curve;
      c.factor = first_is_point ? 0 : 1;
      c.coordinate = p;
      c.span = partner;
      out.push_back(std::move(c));
    } else if (partner.size() == 3) {
      unresolved = true;
    }
    return out;
  }
  FixedComponent c;
  c.kind = ComponentKind::Unresolved;
  c.span = u;
  c.span.insert(c.span.end(), w.begin(), w.end());
  out.push_back(std::move(c));
  unresolved = true;
  return out;
}

FixedLocus fixed_locus_dp6(const SurfaceGroup& h) {
  FixedLocus out;
  const Subgroup h0 = swap_free_part(h);
  std::vector<FixedComponent> base;
  bool whole = h0.size() == 1;
  if (!whole) {
    auto f1 = fixed_subspaces(factor_mats(h, h0, true));
    auto f2 = fixed_subspaces(factor_mats(h, h0, false));
    for (const auto& u : f1)
      for (const auto& w : f2)
        for (auto& c : dp6_pair(u, w, out.unresolved)) base.push_back(std::move(c));
  }
  std::optional<SurfaceAut> swap_elem;
  for (const auto& g : h.elements)
    if (g.swap) {
      swap_elem = g;
      break;
    }
  if (!swap_elem) {
    out.whole = whole;
    out.components = std::move(base);
    dedupe(out.components);
    return out;
  }
  const SurfaceAut& g = *swap_elem;
  if (whole) {
    // Fix(g) = {(p, B p) : p fixed by A B} cut by the surface
    for (const auto& v : fixed_subspaces({g.a * g.b})) {
      if (v.size() == 1) {
        Vec q = g.b.mat() * v[0];
        if (on_dp6(v[0], q)) out.components.push_back(point_component(SurfacePoint::dp6(v[0], q)));
      } else {
        FixedComponent c;
        c.kind = ComponentKind::Unresolved;
        c.span = v;
        out.components.push_back(std::move(c));
        out.unresolved = true;
      }
    }
    dedupe(out.components);
    return out;
  }
  for (const auto& c : base) {
    if (c.kind == ComponentKind::Point) {
      if (act(g, c.point) == c.point) out.components.push_back(c);
    } else if (c.kind == ComponentKind::Curve) {
      // a fixed point (p, q) satisfies p = A q and q = B p
      const Vec& held = c.coordinate;
      Vec other = c.factor == 0 ? inverse(g.a.mat()) * held : inverse(g.b.mat()) * held;
      Vec p = c.factor == 0 ? held : other;
      Vec q = c.factor == 0 ? other : held;
      if (!on_dp6(p, q)) continue;
      SurfacePoint pt = SurfacePoint::dp6(p, q);
      if (contains(c, pt) && act(g, pt) == pt) out.components.push_back(point_component(pt));
    } else {
      out.components.push_back(c);
    }
  }
  dedupe(out.components);
  return out;
}

}  // namespace

bool is_fixed(const SurfaceAut& g, const FixedComponent& c) {
  for (const auto& p : test_points(g.model, c))
    if (act(g, p) != p) return false;
  return true;
}

FixedLocus fixed_locus(const std::vector<SurfaceAut>& gens, Model model) {
  if (gens.empty()) return fixed_locus({SurfaceAut::identity(model)}, model);
  for (const auto& g : gens)
    if (g.model != model) fail("model mismatch in fixed locus");
  FixedLocus out;
  if (model == Model::P1 || model == Model::P2) {
    std::vector<ProjMat> mats;
    for (const auto& g : gens) mats.push_back(g.a);
    out = fixed_locus_projective(mats, model);
  } else {
    SurfaceGroup h = close_surface_group(gens);
    out = model == Model::P1xP1 ? fixed_locus_p1p1(h) : fixed_locus_dp6(h);
  }
  for (const auto& c : out.components)
    for (const auto& g : gens)
      if (!is_fixed(g, c)) fail("internal: fixed component " + c.str() + " is not fixed");
  std::sort(out.components.begin(), out.components.end(),
            [](const FixedComponent& a, const FixedComponent& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.str() < b.str();
            });
  return out;
}

// ---- orbit lengths ----

std::vector<std::size_t> OrbitLengths::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& [len, w] : witnesses) out.push_back(len);
  return out;
}

namespace {

bool is_curve(const FixedComponent& c) {
  return c.kind == ComponentKind::Line || c.kind == ComponentKind::Ruling ||
         c.kind == ComponentKind::Graph;
}

std::vector<SurfacePoint> curve_intersection(Model m, const FixedComponent& a,
                                             const FixedComponent& b) {
  std::vector<SurfacePoint> out;
  if (m == Model::P2) {
    for (const auto& v : intersect_spans(a.span, b.span, 3))
      out.push_back(SurfacePoint::p2(v));
    return out;
  }
  for (const auto& c : intersect_p1p1(a, b))
    if (c.kind == ComponentKind::Point) out.push_back(c.point);
  return out;
}

SurfacePoint lattice_point(Model m, long k) {
  // deterministic sequence of points with small integer coordinates
  const long a = 2 + k % 11, b = 3 + (k * 7) % 17, c = 5 + (k * 13) % 19;
  switch (m) {
    case Model::P1:
      return SurfacePoint::p1({1, CycNum(a * 3 + k)});
    case Model::P2:
      return SurfacePoint::p2({1, CycNum(a + k), CycNum(b * c + 2 * k)});
    case Model::P1xP1:
      return SurfacePoint::p1p1_affine(CycNum(a + k), CycNum(b * c + 3 * k));
    default:
      fail("no lattice points for this model");
  }
}

}  // namespace

OrbitLengths minimal_orbit_lengths(const SurfaceGroup& g, std::size_t bound) {
  const Model m = g.elements[0].model;
  if (m == Model::DP6) fail("minimal_orbit_lengths does not support the dP6 model");
  if (g.order() > kMaxSearchOrder) fail("orbit search needs |G| <= 512");
  OrbitLengths out;
  std::unordered_set<std::string> covered;
  auto consider = [&](const SurfacePoint& p) {
    if (covered.count(p.str())) return;
    OrbitReport rep = orbit(g, p);
    for (const auto& q : rep.points) covered.insert(q.str());
    if (rep.length() <= bound && !out.witnesses.count(rep.length()))
      out.witnesses.emplace(rep.length(), std::move(rep));
  };
  std::vector<char> is_rep(g.order(), 0);
  for (const auto& cls : conjugacy_classes(g.group)) is_rep[cls[0]] = 1;
  std::vector<FixedComponent> curves;
  std::set<std::string> curve_keys;
  for (Index i = 1; i < g.order(); ++i) {
    FixedLocus loc = fixed_locus({g.elements[i]}, m);
    for (const auto& c : loc.components) {
      if (c.kind == ComponentKind::Point) {
        if (is_rep[i]) consider(c.point);
      } else if (is_curve(c) && curve_keys.insert(c.str()).second) {
        curves.push_back(c);
      }
    }
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      for (const auto& p : curve_intersection(m, curves[i], curves[j])) consider(p);
  for (const auto& c : curves) {
    std::size_t stab = 0;
    for (const auto& e : g.elements)
      if (is_fixed(e, c)) ++stab;
    const std::size_t generic = g.order() / stab;
    if (generic > bound || out.witnesses.count(generic)) continue;
    for (long t = 2; t < 200; ++t) {
      OrbitReport rep = orbit(g, curve_point(m, c, CycNum(t * t + 1, t)));
      if (rep.length() == generic) {
        out.witnesses.emplace(generic, std::move(rep));
        break;
      }
    }
  }
  if (g.order() <= bound && !out.witnesses.count(g.order())) {
    for (long k = 0; k < 500; ++k) {
      OrbitReport rep = orbit(g, lattice_point(m, k));
      if (rep.length() == g.order()) {
        out.witnesses.emplace(g.order(), std::move(rep));
        break;
      }
    }
  }
  return out;
}

// ---- position predicates ----

bool general_position_p1p1(const SurfacePoint& p, const SurfacePoint& q) {
  if (p.model != Model::P1xP1 || q.model != Model::P1xP1) fail("points must lie on P1xP1");
  return p.x != q.x && p.y != q.y;
}

bool in_general_position_p1p1(const std::vector<SurfacePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (!general_position_p1p1(pts[i], pts[j])) return false;
  return true;
}

bool collinear(const Vec& a, const Vec& b, const Vec& c) {
  return det(Mat::from_rows({a, b, c})).is_zero();
}

namespace {

Vec conic_monomials(const Vec& p) {
  return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

}  // namespace

std::optional<Vec> on_common_conic(const std::vector<Vec>& pts) {
  if (pts.size() < 5) fail("a conic test needs at least five points");
  std::vector<Vec> rows;
  for (const auto& p : pts) rows.push_back(conic_monomials(p));
  auto k = kernel(Mat::from_rows(rows));
  if (k.empty()) return std::nullopt;
  return canonical_scale(k[0]);
}

bool in_general_position_p2(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  if (n > 8) fail("general position is only defined here for at most eight points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(pts[i], pts[j], pts[k])) return false;
  if (n >= 6) {
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + 6, 1);
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
      std::vector<Vec> six;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) six.push_back(pts[i]);
      std::vector<Vec> rows;
      for (const auto& p : six) rows.push_back(conic_monomials(p));
      if (!kernel(Mat::from_rows(rows)).empty()) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (n == 8) {
    // cubic monomials x^a y^b z^c, a+b+c = 3
    std::vector<std::array<int, 3>> mons;
    for (int a = 3; a >= 0; --a)
      for (int b = 3 - a; b >= 0; --b) mons.push_back({a, b, 3 - a - b});
    auto eval = [&](const Vec& p, const std::array<int, 3>& e) {
      return p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]);
    };
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Vec> rows;
      for (const auto& p : pts) {
        Vec r;
        for (const auto& e : mons) r.push_back(eval(p, e));
        rows.push_back(r);
      }
      for (int v = 0; v < 3; ++v) {
        Vec r;
        for (auto e : mons) {
          if (e[v] == 0) {
            r.push_back(0);
            continue;
          }
          const int c = e[v];
          --e[v];
          r.push_back(CycNum(c) * eval(pts[s], e));
        }
        rows.push_back(r);
      }
      if (!kernel(Mat::from_rows(rows)).empty()) return false;
    }
  }
  return true;
}

std::string conic_str(const Vec& coeffs) {
  static const char* names[] = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};
  std::string s;
  for (std::size_t i = 0; i < 6; ++i) {
    const CycNum& c = coeffs[i];
    if (c.is_zero()) continue;
    if (c.is_one()) {
      s += (s.empty() ? "" : "+");
    } else if ((-c).is_one()) {
      s += "-";
    } else {
      s += (s.empty() ? "" : "+") + ("(" + c.str() + ")*");
    }
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace equisolid
