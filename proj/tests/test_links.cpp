// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "equisolid/error.hpp"
#include "equisolid/links.hpp"

using namespace equisolid;

namespace {

const CycNum W = CycNum::root_of_unity(3, 1);
const CycNum W2 = CycNum::root_of_unity(3, 2);
const CycNum I = CycNum::root_of_unity(4, 1);

std::set<std::string> as_set(const std::vector<Vec>& pts) {
  std::set<std::string> s;
  for (const auto& p : pts) s.insert(vec_str(canonical_scale(p)));
  return s;
}

Vec apply_p2(const SurfaceAut& g, const Vec& p) { return canonical_scale(g.a.mat() * p); }

const std::vector<Vec> kO3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
const std::vector<Vec> kO4{{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
const std::vector<Vec> kO4p{{1, W, W2}, {-1, W, W2}, {1, -W, W2}, {1, W, -W2}};
// the computed orbit of (1:w^2:w); the fourth point equals (-1:-w^2:w) up to scaling
const std::vector<Vec> kO4pp{{1, W2, W}, {-1, W2, W}, {1, -W2, W}, {1, W2, -W}};

const PlaneOrbit* find_orbit(const std::vector<PlaneOrbit>& os, const std::vector<Vec>& pts) {
  for (const auto& o : os)
    if (as_set(o.points()) == as_set(pts)) return &o;
  return nullptr;
}

}  // namespace

TEST(Cremona, Values) {
  EXPECT_EQ(cremona({1, 2, 3}), (Vec{1, CycNum(1, 2), CycNum(1, 3)}));  // (6:3:2)
  EXPECT_EQ(cremona({1, 1, 1}), (Vec{1, 1, 1}));
  EXPECT_THROW(cremona({0, 0, 1}), Error);
  EXPECT_THROW(cremona({0, 1, 0}), Error);
}

TEST(Cremona, InvolutionAndCommutation) {
  const auto pts = random_plane_points(50, 7, &cremona_map());
  for (const auto& p : pts) EXPECT_EQ(cremona(cremona(p)), p);
  const auto& s4 = octahedral_group();
  ASSERT_EQ(s4.order(), 24u);
  for (const auto& g : s4.elements)
    for (const auto& p : pts) EXPECT_EQ(apply_p2(g, cremona(p)), cremona(apply_p2(g, p)));
}

TEST(Involution, BasePoints) {
  for (const CycNum& a : {CycNum(2), CycNum(3), CycNum::root_of_unity(5, 1), CycNum(1, 3)}) {
    for (const auto& p : six_point_orbit(a)) {
      EXPECT_TRUE(ia_map(a).is_base_point(p)) << vec_str(p);
      EXPECT_THROW(involution_ia(a, p), Error);
    }
  }
  EXPECT_THROW(ia_map(0), Error);
}

TEST(Involution, IsAnInvolution) {
  for (const CycNum& a : {CycNum(2), CycNum(-3), CycNum::root_of_unity(5, 1)}) {
    const RationalMapP2 m = ia_map(a);
    for (const auto& p : random_plane_points(100, 11, &m)) EXPECT_EQ(m(m(p)), p);
  }
}

TEST(Involution, Regression) {
  // i_2(1:2:3) = (40608 : 75402 : 69156)
  EXPECT_EQ(involution_ia(2, {1, 2, 3}), (Vec{1, CycNum(4189, 2256), CycNum(1921, 1128)}));
  // with a = 1 the three quintics share the factor (x+y+z)(x+y-z)(x-y+z)(x-y-z)
  EXPECT_THROW(involution_ia(1, {1, 2, 3}), Error);
  EXPECT_EQ(ia_map(2).f[0].degree(), 5);
}

TEST(Involution, EquivarianceIsTwisted) {
  const auto& a4 = tetrahedral_group();
  const RationalMapP2 m = ia_map(2);
  const auto rep = check_equivariance(a4, m, random_plane_points(50, 5, &m));
  ASSERT_FALSE(rep.equivariant);
  ASSERT_TRUE(rep.element && rep.point && rep.lhs && rep.rhs);
  EXPECT_NE(*rep.lhs, *rep.rhs);
  ASSERT_TRUE(rep.twist);
  EXPECT_FALSE(a4.find(*rep.twist).has_value());
  for (const auto& g : a4.elements)
    for (const auto& p : random_plane_points(10, 9, &m)) {
      const Vec q = apply_p2(g.inverse(), p);
      if (m.is_base_point(q)) continue;
      EXPECT_EQ(apply_p2(g, apply_p2(*rep.twist, m(q))), apply_p2(*rep.twist, m(p)));
    }
  // the Cremona involution is equivariant for both groups
  EXPECT_TRUE(check_equivariance(octahedral_group(), cremona_map(),
                                 random_plane_points(20, 3, &cremona_map()))
                  .equivariant);
}

TEST(SmallOrbits, Octahedral) {
  const auto os = enumerate_small_orbits(octahedral_group());
  std::set<std::size_t> lengths;
  for (const auto& o : os) lengths.insert(o.length());
  EXPECT_EQ(lengths, (std::set<std::size_t>{3, 4, 6, 8}));
  // a second orbit of length 6, stabilized by <diag(-1,1,1), swap(y,z)>, with collinear triples
  const auto* mixed = find_orbit(os, {{0, 1, 1}, {0, 1, -1}, {1, 0, 1}, {1, 0, -1}, {1, 1, 0}, {1, -1, 0}});
  ASSERT_TRUE(mixed);
  EXPECT_TRUE(mixed->collinear_triple);
  EXPECT_EQ(os.size(), 5u);
  ASSERT_TRUE(find_orbit(os, kO3));
  ASSERT_TRUE(find_orbit(os, kO4));
  EXPECT_TRUE(find_orbit(os, kO4)->general_position);
  const auto* o6 = find_orbit(os, {{0, I, 1}, {0, -I, 1}, {1, 0, I}, {1, 0, -I}, {I, 1, 0}, {-I, 1, 0}});
  ASSERT_TRUE(o6);
  ASSERT_TRUE(o6->conic);
  EXPECT_EQ(conic_str(*o6->conic), "x^2+y^2+z^2");
  EXPECT_FALSE(o6->general_position);
  std::vector<Vec> o8 = kO4p;
  o8.insert(o8.end(), kO4pp.begin(), kO4pp.end());
  const auto* p8 = find_orbit(os, o8);
  ASSERT_TRUE(p8);
  ASSERT_TRUE(p8->conic);
  // independent check: every point satisfies x^2 + y^2 + z^2 = 0
  for (const auto& p : o8) EXPECT_TRUE((p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).is_zero());
  EXPECT_EQ(conic_str(*p8->conic), "x^2+y^2+z^2");
  EXPECT_FALSE(p8->general_position);
}

TEST(SmallOrbits, Tetrahedral) {
  const auto os = enumerate_small_orbits(tetrahedral_group());
  std::size_t fours = 0;
  for (const auto& o : os)
    if (o.length() == 4) {
      ++fours;
      EXPECT_TRUE(o.general_position);
    }
  EXPECT_EQ(fours, 3u);
  EXPECT_TRUE(find_orbit(os, kO3));
  EXPECT_TRUE(find_orbit(os, kO4));
  EXPECT_TRUE(find_orbit(os, kO4p));
  EXPECT_TRUE(find_orbit(os, kO4pp));
  EXPECT_EQ(as_set(kO4pp), as_set({{1, W2, W}, {-1, W2, W}, {1, -W2, W}, {-1, -W2, W}}));
  std::size_t families = 0;
  for (const auto& o : os)
    if (o.family) {
      ++families;
      EXPECT_EQ(o.length(), 6u);
      EXPECT_EQ(o.lines.size(), 3u);
      EXPECT_EQ(as_set(o.points()), as_set(six_point_orbit(2)));
    }
  EXPECT_EQ(families, 1u);
  EXPECT_EQ(os.size(), 5u);
}

TEST(SmallOrbits, WrongGroup) {
  auto z3 = close_surface_group({SurfaceAut::p2(ProjMat(Mat{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}))});
  EXPECT_THROW(enumerate_small_orbits(z3), Error);
  EXPECT_THROW(enumerate_links_p2(z3), Error);
}

TEST(Links, Octahedral) {
  const auto e = enumerate_links_p2(octahedral_group());
  ASSERT_EQ(e.links.size(), 2u);
  EXPECT_EQ(e.links[0].type, 2);
  EXPECT_EQ(e.links[0].center.length(), 3u);
  EXPECT_EQ(e.links[0].map, std::optional<std::string>("cremona"));
  EXPECT_EQ(e.links[1].type, 1);
  EXPECT_EQ(as_set(e.links[1].center.points()), as_set(kO4));
  EXPECT_EQ(e.links[1].target, "dP5 conic bundle");
  ASSERT_EQ(e.blocked.size(), 3u);
  EXPECT_EQ(e.blocked[0].reason, "three collinear points");
  EXPECT_EQ(e.blocked[1].reason, "on conic x^2+y^2+z^2");
  EXPECT_EQ(e.blocked[2].reason, "on conic x^2+y^2+z^2");
}

TEST(Links, Tetrahedral) {
  const auto e = enumerate_links_p2(tetrahedral_group());
  ASSERT_EQ(e.links.size(), 5u);
  std::size_t type1 = 0, cremona_links = 0, ia = 0;
  for (const auto& l : e.links) {
    if (l.type == 1) {
      ++type1;
      EXPECT_EQ(l.center.length(), 4u);
    }
    if (l.map == std::optional<std::string>("cremona")) ++cremona_links;
    if (l.map == std::optional<std::string>("i_a")) {
      ++ia;
      EXPECT_TRUE(l.center.family);
    }
  }
  EXPECT_EQ(type1, 3u);
  EXPECT_EQ(cremona_links, 1u);
  EXPECT_EQ(ia, 1u);
  EXPECT_TRUE(e.blocked.empty());
}

TEST(Pencil, Octahedral) {
  const auto pc = conic_pencil_check(octahedral_group(), kO4);
  // x^2 - y^2 and x^2 - z^2
  EXPECT_TRUE(same_span(pc.basis, {{1, -1, 0, 0, 0, 0}, {1, 0, -1, 0, 0, 0}}));
  EXPECT_EQ(pc.kernel.size(), 4u);
  EXPECT_EQ(pc.kernel_name, "Z2^2");
  EXPECT_TRUE(pc.fibrewise_free);
  EXPECT_EQ(pc.smooth_members, 5u);
}

TEST(Pencil, Tetrahedral) {
  const auto& a4 = tetrahedral_group();
  const auto p1 = conic_pencil_check(a4, kO4p);
  EXPECT_TRUE(same_span(p1.basis, {{W, 0, -1, 0, 0, 0}, {W + 1, 1, 0, 0, 0, 0}}));
  EXPECT_EQ(p1.kernel.size(), 4u);
  EXPECT_TRUE(p1.fibrewise_free);
  const auto p2 = conic_pencil_check(a4, kO4pp);
  EXPECT_TRUE(same_span(p2.basis, {{W, -1, 0, 0, 0, 0}, {W + 1, 0, 1, 0, 0, 0}}));
  EXPECT_TRUE(p2.fibrewise_free);
  EXPECT_TRUE(conic_pencil_check(a4, kO4).fibrewise_free);
}

TEST(Pencil, TrivialGroupAndDegenerateInput) {
  auto trivial = close_surface_group({SurfaceAut::identity(Model::P2)});
  const auto pc = conic_pencil_check(trivial, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 5}});
  EXPECT_EQ(pc.kernel.size(), 1u);
  EXPECT_FALSE(pc.fibrewise_free);
  EXPECT_EQ(pc.note, "no obstruction computed");
  EXPECT_THROW(conic_pencil_check(trivial, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 2, 5}}), Error);
  EXPECT_THROW(conic_pencil_check(octahedral_group(), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 5}}),
               Error);
}

TEST(Dp5, Constructions) {
  const CycNum z = CycNum::root_of_unity(5, 1);
  const SurfaceAut m = SurfaceAut::p2(ProjMat(Mat{{1, 0, 0}, {0, z, 0}, {0, 0, z.inverse()}}));
  const SurfaceAut n = SurfaceAut::p2(ProjMat(Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  std::vector<Vec> expected;
  for (int k = 0; k < 5; ++k)
    expected.push_back({1, CycNum::root_of_unity(5, k), CycNum::root_of_unity(5, -k)});
  for (const auto& g : {close_surface_group({m}), close_surface_group({m, n})}) {
    const auto d = dp5_construction(g);
    std::vector<Vec> pts;
    for (const auto& p : d.orbit5.points) pts.push_back(p.x);
    EXPECT_EQ(as_set(pts), as_set(expected));
    EXPECT_TRUE(d.no_three_collinear);
    ASSERT_TRUE(d.conic);
    EXPECT_EQ(conic_str(*d.conic), "x^2-yz");
    EXPECT_EQ(d.fixed_point, (Vec{1, 0, 0}));
  }
  EXPECT_THROW(dp5_construction(octahedral_group()), Error);
}
