// SPDX-License-Identifier: Apache-2.0

#include "equisolid/toric.hpp"

#include <algorithm>
#include <set>

#include "equisolid/error.hpp"
#include "equisolid/picard.hpp"

namespace equisolid {

namespace {

const Vec kZero{1, 0};  // (1:0), the affine coordinate 0
const Vec kInf{0, 1};

ProjMat pm(const Mat& m) { return ProjMat(m); }

bool monomial(const Mat& m) {
  const bool diag = m(0, 1).is_zero() && m(1, 0).is_zero();
  const bool anti = m(0, 0).is_zero() && m(1, 1).is_zero();
  return diag || anti;
}

}  // namespace

const std::array<SurfacePoint, 4>& square_vertices() {
  static const std::array<SurfacePoint, 4> v{
      SurfacePoint::p1p1(kZero, kZero), SurfacePoint::p1p1(kInf, kZero),
      SurfacePoint::p1p1(kInf, kInf), SurfacePoint::p1p1(kZero, kInf)};
  return v;
}

SquareSym square_compose(const SquareSym& a, const SquareSym& b) {
  SquareSym c{};
  for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
  return c;
}

bool square_is_identity(const SquareSym& s) { return s == SquareSym{0, 1, 2, 3}; }

bool square_is_quarter_turn(const SquareSym& s) {
  return s == SquareSym{1, 2, 3, 0} || s == SquareSym{3, 0, 1, 2};
}

std::string square_str(const SquareSym& s) {
  std::string out = "[";
  for (int i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::optional<SquareSym> preserves_square(const SurfaceAut& g) {
  if (g.model != Model::P1xP1) fail("square symmetries need a P1xP1 automorphism");
  if (!monomial(g.a.mat()) || !monomial(g.b.mat())) return std::nullopt;
  const auto& vs = square_vertices();
  SquareSym s{};
  for (int i = 0; i < 4; ++i) {
    auto it = std::find(vs.begin(), vs.end(), act(g, vs[i]));
    if (it == vs.end()) return std::nullopt;
    s[i] = static_cast<int>(it - vs.begin());
  }
  return s;
}

bool is_torus_element(const SurfaceAut& g) {
  if (g.model != Model::P1xP1 || g.swap) return false;
  return g.a.mat()(0, 1).is_zero() && g.a.mat()(1, 0).is_zero() && g.b.mat()(0, 1).is_zero() &&
         g.b.mat()(1, 0).is_zero();
}

SurfaceAut torus_element(const CycNum& k, const CycNum& l) {
  return SurfaceAut::p1p1(pm(Mat{{1, 0}, {0, k}}), pm(Mat{{1, 0}, {0, l}}), false);
}

SurfaceAut standard_r() {
  return SurfaceAut::p1p1(pm(Mat{{0, 1}, {1, 0}}), ProjMat::identity(2), true);
}

SurfaceAut standard_s() {
  return SurfaceAut::p1p1(ProjMat::identity(2), ProjMat::identity(2), true);
}

SurfaceAut standard_t() { return torus_element(-1, -1); }

SurfaceAut normalize_r(const SurfaceAut& g) {
  if (g.model != Model::P1xP1 || !g.swap) fail("normalize_r needs a swap element (a/y, bx)");
  const Mat& A = g.a.mat();
  const Mat& B = g.b.mat();
  if (!A(0, 0).is_zero() || !A(1, 1).is_zero() || !B(0, 1).is_zero() || !B(1, 0).is_zero())
    fail("normalize_r: element is not of the form (a/y, bx)");
  // A = [[0, 1], [a, 0]] sends (1:y) to (1 : a/y); B = diag(1, b) sends (1:x) to (1 : b x)
  const CycNum a = A(1, 0) / A(0, 1);
  const CycNum b = B(1, 1) / B(0, 0);
  auto l = cyclo::cyc_root((a * b).inverse(), 2);
  if (!l) fail("normalize_r: no cyclotomic square root of 1/(ab)");
  const CycNum k = b * *l;
  SurfaceAut t = torus_element(k, *l);
  if (t * g * t.inverse() != standard_r()) fail("internal: normalize_r conjugation check failed");
  return t;
}

namespace {

bool has_a4_subgroup(const FiniteGroup& g) {
  if (g.order() % 12 != 0) return false;
  const FiniteGroup a4 = alternating_group(4);
  std::vector<Index> threes, twos;
  for (Index i = 0; i < g.order(); ++i) {
    const std::size_t o = g.element_order(i);
    if (o == 3) threes.push_back(i);
    if (o == 2) twos.push_back(i);
  }
  std::set<Subgroup> tried;
  for (Index a : threes)
    for (Index b : twos) {
      Subgroup s = subgroup_closure(g, {a, b});
      if (s.size() != 12 || !tried.insert(s).second) continue;
      if (is_isomorphic(induced(g, s), a4)) return true;
    }
  return false;
}

}  // namespace

ToricityReport toricity(const SurfaceGroup& g) {
  if (g.elements[0].model != Model::P1xP1) fail("toricity is decided on P1xP1 only");
  if (invariant_rank(g) != 1) fail("toricity needs invariant Picard rank 1");
  ToricityReport rep;
  rep.toric = !has_a4_subgroup(g.group);
  rep.preserves_square = std::all_of(g.elements.begin(), g.elements.end(),
                                     [](const SurfaceAut& e) { return preserves_square(e).has_value(); });
  if (rep.preserves_square && !rep.toric)
    fail("internal: a square-preserving group contains A4");
  if (rep.toric && !rep.preserves_square) rep.note = "normalization not constructed";
  return rep;
}

bool is_toric(const SurfaceGroup& g) { return toricity(g).toric; }

const SurfaceGroup& g16() {
  static const SurfaceGroup g = close_surface_group({standard_r(), standard_s(), standard_t()});
  return g;
}

bool contained_in_g16(const SurfaceGroup& g) {
  const SurfaceGroup& big = g16();
  return std::all_of(g.elements.begin(), g.elements.end(),
                     [&](const SurfaceAut& e) { return big.find(e).has_value(); });
}

SurfaceGroup conjugate(const SurfaceGroup& g, const SurfaceAut& t) {
  std::vector<SurfaceAut> gens;
  const SurfaceAut ti = t.inverse();
  for (Index k : g.group.generators()) gens.push_back(t * g.elements[k] * ti);
  return close_surface_group(gens);
}

}  // namespace equisolid
