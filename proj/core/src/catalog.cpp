// SPDX-License-Identifier: Apache-2.0

#include "equisolid/classifier.hpp"
#include "equisolid/toric.hpp"

namespace equisolid {

namespace {

CycNum mu(int n, long k = 1) { return CycNum::root_of_unity(n, k); }
ProjMat pm(const Mat& m) { return ProjMat(m); }
ProjMat diag2(const CycNum& b) { return pm(Mat{{1, 0}, {0, b}}); }

// (A q, B p) with A = diag(1, a) and B = diag(1, b): the map (a y, b x)
SurfaceAut swap_diag(const CycNum& a, const CycNum& b) {
  return SurfaceAut::p1p1(diag2(a), diag2(b), true);
}

SurfaceAut p2(const Mat& m) { return SurfaceAut::p2(pm(m)); }

SurfaceAut dp6(const Mat& a, const Mat& b, bool swap) { return SurfaceAut::dp6(pm(a), pm(b), swap); }

const Mat kCycle{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
const Mat kSwap23{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};

ClassifyInput geo(SurfaceKind k, std::string name, std::vector<SurfaceAut> gens) {
  ClassifyInput in;
  in.surface = k;
  in.name = std::move(name);
  in.generators = std::move(gens);
  return in;
}

ClassifyInput perm(std::string name, std::vector<std::vector<int>> gens) {
  ClassifyInput in;
  in.surface = SurfaceKind::DP5;
  in.name = std::move(name);
  in.permutations = std::move(gens);
  return in;
}

ClassifyInput asserted(std::string name, AssertedFacts f) {
  ClassifyInput in;
  in.surface = SurfaceKind::Asserted;
  in.name = std::move(name);
  in.facts = f;
  return in;
}

// Fibre product of two copies of <diag(1,i), [[0,1],[1,0]]> over Z2^2, with
// a(k)b(e) sent to (e, k) by the first map and to (k + e, e) by the second.
std::vector<SurfaceAut> contrex_generators() {
  const Mat a{{1, 0}, {0, mu(4)}};
  const Mat b{{0, 1}, {1, 0}};
  auto elem = [&](int k, int e) { return a.pow(k) * (e ? b : Mat::identity(2)); };
  std::vector<SurfaceAut> gens;
  for (int k = 0; k < 4; ++k)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < 4; ++j)
        for (int f = 0; f < 2; ++f) {
          if (e != (j + f) % 2 || k % 2 != f) continue;
          gens.push_back(SurfaceAut::p1p1(pm(elem(k, e)), pm(elem(j, f)), false));
        }
  gens.push_back(swap_diag(mu(8, -1), mu(8)));
  return gens;
}

std::vector<CatalogEntry> build() {
  const SurfaceAut r = standard_r(), s = standard_s(), t = standard_t();
  const SurfaceAut t1 = torus_element(-1, 1);
  const SurfaceAut h = swap_diag(-1, 1);        // (-y, x)
  const SurfaceAut mswap = swap_diag(-1, -1);   // (-y, -x)
  const SurfaceAut iswap = swap_diag(mu(4), mu(4));  // (iy, ix)
  const SurfaceAut f5 = torus_element(mu(5), mu(5, 2));
  const SurfaceAut sigma = swap_diag(1, -1);    // (y, -x)
  const SurfaceAut tau = torus_element(mu(4), mu(4));

  const CycNum z5 = mu(5);
  const SurfaceAut m5 = p2(Mat{{1, 0, 0}, {0, z5, 0}, {0, 0, z5.inverse()}});
  const SurfaceAut n5 = p2(kSwap23);

  const SurfaceAut d6r = dp6(kCycle, kCycle, true);
  const SurfaceAut d6s = dp6(kSwap23, kSwap23, false);
  const Mat shift{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const Mat anti{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const SurfaceAut t3 = dp6(Mat{{1, 0, 0}, {0, mu(3), 0}, {0, 0, mu(3, 2)}},
                            Mat{{1, 0, 0}, {0, mu(3, 2), 0}, {0, 0, mu(3)}}, false);

  std::vector<SurfaceAut> a4diag;
  for (const Mat& m : {Mat{{1, 0}, {0, -1}}, Mat{{0, 1}, {1, 0}}, Mat{{-mu(4), 1}, {mu(4), 1}}})
    a4diag.push_back(SurfaceAut::p1p1(pm(m), pm(m), false));
  a4diag.push_back(s);

  using K = SurfaceKind;
  using V = Verdict;
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string desc, ClassifyInput in, V expected) {
    in.name = name;
    c.push_back({std::move(name), std::move(desc), std::move(in), expected});
  };

  add("p2/Z5", "<M>, M = diag(1, z5, 1/z5)", geo(K::P2, "", {m5}), V::NotSolid);
  add("p2/D5", "<M, N>, N swaps y and z", geo(K::P2, "", {m5, n5}), V::NotSolid);
  add("p2/S4", "<A, B, C>", geo(K::P2, "",
      {p2(Mat{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), p2(kCycle), p2(kSwap23)}), V::NotSolid);
  add("p2/A4", "<a, b>", geo(K::P2, "", {p2(kCycle), p2(Mat{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}),
      V::NotSolid);
  add("p2/Z3xZ3", "cyclic shift and diag(1, w, w^2)",
      geo(K::P2, "", {p2(kCycle), p2(Mat{{1, 0, 0}, {0, mu(3), 0}, {0, 0, mu(3, 2)}})}), V::Solid);

  add("p1p1/Z4-r", "<r>, r = (1/y, x)", geo(K::P1xP1, "", {r}), V::NotSolid);
  add("p1p1/D4-rs", "<r, (y, x)>", geo(K::P1xP1, "", {r, s}), V::NotSolid);
  add("p1p1/D4-r-antidiag", "<r, (-y, -x)>", geo(K::P1xP1, "", {r, mswap}), V::NotSolid);
  add("p1p1/Z4xZ2-tr", "<t, r>, t = (-x, -y)", geo(K::P1xP1, "", {t, r}), V::NotSolid);
  add("p1p1/G16", "<t, r, s>", geo(K::P1xP1, "", {t, r, s}), V::NotSolid);
  add("p1p1/trh", "<t, r, h>, h = (-y, x)", geo(K::P1xP1, "", {t, r, h}), V::Solid);
  add("p1p1/r-t1", "<r, t1>, t1 = (-x, y)", geo(K::P1xP1, "", {r, t1}), V::Solid);
  add("p1p1/r-t1-s", "<r, t1, s>", geo(K::P1xP1, "", {r, t1, s}), V::Solid);
  add("p1p1/r-t1-iyix", "<r, t1, (iy, ix)>", geo(K::P1xP1, "", {r, t1, iswap}), V::Solid);
  add("p1p1/F5", "<r, (z5 x, z5^2 y)>", geo(K::P1xP1, "", {r, f5}), V::Solid);
  add("p1p1/D3-fixed", "<s, (z3 x, y/z3)>", geo(K::P1xP1, "", {s, torus_element(mu(3), mu(3, -1))}),
      V::NotSolid);
  add("p1p1/D4-fixed", "<s, (ix, -iy)>", geo(K::P1xP1, "", {s, torus_element(mu(4), mu(4, -1))}),
      V::NotSolid);
  add("p1p1/Q8-fixed", "<(y, -x), (ix, iy)>", geo(K::P1xP1, "", {sigma, tau}), V::NotSolid);
  add("p1p1/contrex", "fibre product of two D4 over Z2^2 with (y/z8, z8 x)",
      geo(K::P1xP1, "", contrex_generators()), V::Solid);
  add("p1p1/A4xZ2-nontoric", "diagonal A4 with (y, x)", geo(K::P1xP1, "", a4diag), V::Solid);
  add("p1p1/torus-only", "<t>", geo(K::P1xP1, "", {t}), V::NotMinimal);

  add("dp6/Z6", "<r>", geo(K::DP6, "", {d6r}), V::NotSolid);
  add("dp6/S3", "<(y:z:x)x(v:w:u), (w:v:u)x(z:y:x)>",
      geo(K::DP6, "", {dp6(shift, shift, false), dp6(anti, anti, true)}), V::NotSolid);
  add("dp6/D6", "<r, s>", geo(K::DP6, "", {d6r, d6s}), V::NotSolid);
  add("dp6/r-T3", "<r, diag torus element of order 3>", geo(K::DP6, "", {d6r, t3}), V::Solid);
  add("dp6/s-only", "<s>", geo(K::DP6, "", {d6s}), V::NotMinimal);

  add("dp5/Z5", "5-cycle", perm("", {{1, 2, 3, 4, 0}}), V::NotSolid);
  add("dp5/D5", "5-cycle and reflection", perm("", {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}), V::NotSolid);
  add("dp5/F5", "5-cycle and 4-cycle", perm("", {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}), V::Solid);
  add("dp5/A5", "alternating group", perm("", {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}), V::Solid);
  add("dp5/S5", "symmetric group", perm("", {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}), V::Solid);
  add("dp5/Z4", "4-cycle", perm("", {{1, 2, 3, 0, 4}}), V::NotMinimal);

  add("deg4/fixed-point", "fixes a point on no (-1)-curve", asserted("", {4, true, true}), V::NotSolid);
  add("deg4/no-fixed-point", "no such fixed point", asserted("", {4, true, false}), V::Solid);
  add("deg3/rank-one", "cubic surface", asserted("", {3, true, false}), V::Solid);
  add("deg2/rank-two", "invariant rank above one", asserted("", {2, false, false}), V::NotMinimal);
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build();
  return c;
}

}  // namespace equisolid
