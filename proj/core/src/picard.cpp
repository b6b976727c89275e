// SPDX-License-Identifier: Apache-2.0

#include "equisolid/picard.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "equisolid/error.hpp"

namespace equisolid {

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMatrix c(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
  return c;
}

namespace {

Vec e(int i) {
  Vec v(3);
  v[i] = 1;
  return v;
}

}  // namespace

const std::array<HexCurve, 6>& hexagon_curves() {
  static const std::array<HexCurve, 6> curves{{
      {"E1", 0, e(0), {e(1), e(2)}, {0, 1, 0, 0}},
      {"D12", 1, e(2), {e(0), e(1)}, {1, -1, -1, 0}},
      {"E2", 0, e(1), {e(0), e(2)}, {0, 0, 1, 0}},
      {"D23", 1, e(0), {e(1), e(2)}, {1, 0, -1, -1}},
      {"E3", 0, e(2), {e(0), e(1)}, {0, 0, 0, 1}},
      {"D13", 1, e(1), {e(0), e(2)}, {1, -1, 0, -1}},
  }};
  return curves;
}

const std::array<SurfacePoint, 6>& hexagon_vertices() {
  static const std::array<SurfacePoint, 6> v{
      SurfacePoint::dp6(e(0), e(2)), SurfacePoint::dp6(e(1), e(2)),
      SurfacePoint::dp6(e(1), e(0)), SurfacePoint::dp6(e(2), e(0)),
      SurfacePoint::dp6(e(2), e(1)), SurfacePoint::dp6(e(0), e(1))};
  return v;
}

namespace {

bool curve_contains(const HexCurve& c, const SurfacePoint& p) {
  const Vec& held = c.held_factor == 0 ? p.x : p.y;
  const Vec& free = c.held_factor == 0 ? p.y : p.x;
  if (held != canonical_scale(c.point)) return false;
  return rank(Mat::from_rows({c.line[0], c.line[1], free})) == 2;
}

// Points common to two curves, as a list of surface points.
std::vector<SurfacePoint> curve_meet(const HexCurve& a, const HexCurve& b) {
  std::vector<SurfacePoint> out;
  if (a.held_factor == b.held_factor) {
    if (a.point != b.point) return out;
    fail("hexagon curves coincide");
  }
  // a holds one factor, b the other: the candidate is (a.point, b.point) in order
  Vec p = a.held_factor == 0 ? a.point : b.point;
  Vec q = a.held_factor == 0 ? b.point : a.point;
  SurfacePoint pt{Model::DP6, canonical_scale(p), canonical_scale(q)};
  if (on_dp6(pt.x, pt.y) && curve_contains(a, pt) && curve_contains(b, pt)) out.push_back(pt);
  return out;
}

}  // namespace

void verify_hexagon() {
  const auto& cs = hexagon_curves();
  const auto& vs = hexagon_vertices();
  for (const auto& c : cs) {
    for (const auto& v : c.line) {
      const Vec& p = c.held_factor == 0 ? c.point : v;
      const Vec& q = c.held_factor == 0 ? v : c.point;
      if (!on_dp6(p, q)) fail("hexagon curve " + c.name + " leaves the surface");
    }
    Vec sum = add(c.line[0], c.line[1]);
    if (!on_dp6(c.held_factor == 0 ? c.point : sum, c.held_factor == 0 ? sum : c.point))
      fail("hexagon curve " + c.name + " leaves the surface");
  }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      auto meet = curve_meet(cs[i], cs[j]);
      const bool adjacent = j == i + 1 || (i == 0 && j == 5);
      if (!adjacent) {
        if (!meet.empty()) fail("hexagon curves " + cs[i].name + ", " + cs[j].name + " meet");
        continue;
      }
      const int vertex = j == i + 1 ? i : 5;
      if (meet.size() != 1 || meet[0] != vs[vertex])
        fail("hexagon curves " + cs[i].name + ", " + cs[j].name + " miss their vertex");
    }
}

PicAction pic_action(const SurfaceAut& g) {
  PicAction out;
  out.model = g.model;
  if (g.model == Model::P1xP1) {
    out.matrix = g.swap ? IntMatrix{{0, 1}, {1, 0}} : IntMatrix{{1, 0}, {0, 1}};
    return out;
  }
  if (g.model != Model::DP6) fail("Picard action needs a P1xP1 or dP6 automorphism");
  static std::once_flag checked;
  std::call_once(checked, verify_hexagon);
  const auto& vs = hexagon_vertices();
  HexPerm perm{};
  for (int i = 0; i < 6; ++i) {
    SurfacePoint img = act(g, vs[i]);
    auto it = std::find(vs.begin(), vs.end(), img);
    if (it == vs.end()) fail("not an automorphism of the model: vertex " + vs[i].str() +
                             " maps to " + img.str());
    perm[i] = static_cast<int>(it - vs.begin());
  }
  for (int i = 0; i < 6; ++i) {
    const int a = perm[i], b = perm[(i + 1) % 6];
    if ((a - b + 6) % 6 != 1 && (b - a + 6) % 6 != 1)
      fail("not an automorphism of the model: hexagon adjacency broken");
  }
  // curve i runs through vertices i-1 and i
  auto image_curve = [&](int i) {
    const int a = perm[(i + 5) % 6], b = perm[i];
    for (int k = 0; k < 6; ++k) {
      const int lo = (k + 5) % 6;
      if ((a == lo && b == k) || (a == k && b == lo)) return k;
    }
    fail("not an automorphism of the model: curve image not found");
  };
  const auto& cs = hexagon_curves();
  std::array<long, 4> h{};
  for (int i : {1, 0, 2})  // H = D12 + E1 + E2
    for (int r = 0; r < 4; ++r) h[r] += cs[image_curve(i)].cls[r];
  out.matrix.assign(4, std::vector<long>(4, 0));
  for (int r = 0; r < 4; ++r) out.matrix[r][0] = h[r];
  const int exc[3] = {0, 2, 4};
  for (int j = 0; j < 3; ++j) {
    const auto& c = cs[image_curve(exc[j])].cls;
    for (int r = 0; r < 4; ++r) out.matrix[r][j + 1] = c[r];
  }
  out.hexagon = perm;
  return out;
}

std::size_t invariant_rank(const SurfaceGroup& g) {
  const Model m = g.elements[0].model;
  if (m == Model::P2) return 1;
  if (m == Model::P1) fail("invariant rank is defined for surfaces only");
  std::vector<Vec> rows;
  std::size_t n = m == Model::P1xP1 ? 2 : 4;
  for (Index gen : g.group.generators()) {
    IntMatrix a = pic_action(g.elements[gen]).matrix;
    for (std::size_t r = 0; r < n; ++r) {
      Vec row(n);
      for (std::size_t c = 0; c < n; ++c) row[c] = CycNum(a[r][c] - (r == c ? 1 : 0));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return n;
  return n - rank(Mat::from_rows(rows));
}

std::string hexagon_kind(const HexPerm& p) {
  bool identity = true;
  for (int i = 0; i < 6; ++i) identity = identity && p[i] == i;
  if (identity) return "identity";
  const int shift = (p[0] + 6) % 6;
  bool rotation = true;
  for (int i = 0; i < 6; ++i) rotation = rotation && p[i] == (i + shift) % 6;
  if (rotation) {
    const int ord = 6 / std::gcd(shift, 6);
    return "rotation of order " + std::to_string(ord);
  }
  int fixed = 0;
  for (int i = 0; i < 6; ++i) fixed += p[i] == i;
  return fixed ? "reflection through two vertices" : "reflection fixing no vertex";
}

std::string HexagonImage::kind() const {
  if (contains_rotation6) return "contains Z6";
  if (perms.size() == 6 && transitive_on_curves) return "transitive S3";
  return "smaller";
}

HexagonImage w_image_dp6(const SurfaceGroup& g) {
  if (g.elements[0].model != Model::DP6) fail("hexagon image needs the dP6 model");
  std::set<HexPerm> seen;
  for (const auto& e : g.elements) seen.insert(*pic_action(e).hexagon);
  HexagonImage out;
  out.perms.assign(seen.begin(), seen.end());
  std::vector<std::vector<int>> gens;
  for (const auto& p : out.perms) {
    gens.emplace_back(p.begin(), p.end());
    if (hexagon_kind(p) == "rotation of order 6") out.contains_rotation6 = true;
  }
  out.name = identify_named(permutation_group(gens).group).name;
  // orbit of curve 0 under the image
  std::set<int> orbit{0};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& p : out.perms)
      for (int c : std::vector<int>(orbit.begin(), orbit.end())) {
        const int a = p[(c + 5) % 6], b = p[c];
        const int img = (a + 1) % 6 == b ? b : a;
        grew = orbit.insert(img).second || grew;
      }
  }
  out.transitive_on_curves = orbit.size() == 6;
  out.minimal_possible = out.contains_rotation6 || (out.perms.size() == 6 && out.transitive_on_curves);
  return out;
}

}  // namespace equisolid
