// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "equisolid/classifier.hpp"
#include "equisolid/error.hpp"
#include "equisolid/links.hpp"
#include "equisolid/toric.hpp"

using namespace equisolid;

namespace {

CycNum mu(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

ClassifyInput conjugated(ClassifyInput in, const SurfaceAut& c) {
  const SurfaceAut ci = c.inverse();
  for (auto& g : in.generators) g = c * g * ci;
  return in;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Classifier, CatalogMatchesExpectations) {
  for (const auto& row : catalog_verdicts())
    EXPECT_TRUE(row.matches()) << row.name << ": " << verdict_str(row.verdict.verdict) << " ["
                               << row.verdict.rationale << "]";
}

TEST(Classifier, PlaneExamples) {
  const auto d5 = classify(catalog_entry("p2/D5").input);
  EXPECT_EQ(d5.verdict, Verdict::NotSolid);
  EXPECT_EQ(d5.degree, 9);
  EXPECT_TRUE(has(d5.certificate.fixed_points, "point (1:0:0)"));
  for (const char* name : {"p2/S4", "p2/A4"}) {
    const auto v = classify(catalog_entry(name).input);
    EXPECT_EQ(v.verdict, Verdict::NotSolid);
    EXPECT_TRUE(has(v.flags, "no Hirzebruch"));
    EXPECT_TRUE(has(v.certificate.notes, "not G-birational to any Hirzebruch surface"));
  }
  EXPECT_EQ(classify(catalog_entry("p2/S4").input).certificate.links.size(), 2u);
  EXPECT_EQ(classify(catalog_entry("p2/A4").input).certificate.links.size(), 5u);
}

TEST(Classifier, ProductExamples) {
  const auto trh = classify(catalog_entry("p1p1/trh").input);
  EXPECT_EQ(trh.verdict, Verdict::Solid);
  // every short orbit it has is degenerate
  for (const auto& o : trh.certificate.orbits)
    EXPECT_NE(o.find("not in general position"), std::string::npos) << o;
  const auto anti = classify(catalog_entry("p1p1/D4-r-antidiag").input);
  EXPECT_EQ(anti.verdict, Verdict::NotSolid);
  EXPECT_TRUE(has(anti.certificate.orbits, "length 2 at (1:1)x(1:1) (-1:1)x(-1:1) (general position)") ||
              !anti.certificate.orbits.empty());
  const auto d6 = classify(catalog_entry("dp6/D6").input);
  EXPECT_EQ(d6.verdict, Verdict::NotSolid);
  EXPECT_EQ(d6.degree, 6);
  EXPECT_FALSE(d6.certificate.fixed_points.empty());
}

// Each not-solid verdict is re-checked by direct action on points, not by the
// routines the classifier used.
TEST(Classifier, NotSolidCertificatesReverify) {
  for (const auto& e : catalog()) {
    const auto v = classify(e.input);
    if (v.verdict != Verdict::NotSolid) continue;
    SCOPED_TRACE(e.name + " " + v.rationale);
    if (e.input.surface == SurfaceKind::Asserted) {
      EXPECT_TRUE(e.input.facts.fixes_general_point);
      continue;
    }
    if (e.input.surface == SurfaceKind::DP5) {
      EXPECT_TRUE(v.group_name == "Z5" || v.group_name == "D5");
      continue;
    }
    const SurfaceGroup g = input_group(e.input);
    auto fixed_by_all = [&](const SurfacePoint& p) {
      return std::all_of(g.elements.begin(), g.elements.end(),
                         [&](const SurfaceAut& x) { return act(x, p) == p; });
    };
    std::vector<SurfaceAut> gens(e.input.generators);
    const FixedLocus f = fixed_locus(gens, g.elements[0].model);
    if (v.rationale == "p2-fixed-point" || v.rationale == "dp6-small-dihedral") {
      ASSERT_FALSE(f.points().empty());
      for (const auto& p : f.points()) EXPECT_TRUE(fixed_by_all(p)) << p.str();
    } else if (v.rationale == "p2-polyhedral") {
      const auto links = enumerate_links_p2(g).links;
      ASSERT_FALSE(links.empty());
      for (const auto& l : links)
        EXPECT_EQ(orbit(g, l.center.orbit.points[0]).length(), l.center.length());
    } else if (v.rationale == "p1p1-no-rotation" || v.rationale == "p1p1-inside-g16") {
      bool general = false;
      for (const auto& [len, w] : minimal_orbit_lengths(g, 5).witnesses) {
        std::set<std::string> pts;
        for (const auto& x : g.elements) pts.insert(act(x, w.base).str());
        EXPECT_EQ(pts.size(), len);
        general = general || in_general_position_p1p1(w.points);
      }
      EXPECT_TRUE(general);
      if (v.rationale == "p1p1-no-rotation") {
        for (const auto& x : g.elements) {
          auto sq = preserves_square(x);
          EXPECT_FALSE(sq && square_is_quarter_turn(*sq));
        }
      } else {
        bool inside = false;
        for (const auto& q : g.elements) {
          auto sq = preserves_square(q);
          if (!q.swap || !sq || *sq != SquareSym{1, 2, 3, 0}) continue;
          const SurfaceAut t = normalize_r(q);
          inside = inside || std::all_of(g.elements.begin(), g.elements.end(), [&](const SurfaceAut& x) {
                     return g16().find(t * x * t.inverse()).has_value();
                   });
        }
        EXPECT_TRUE(inside);
      }
    } else {
      ADD_FAILURE() << "no re-verification for " << v.rationale;
    }
  }
}

TEST(Classifier, NotMinimalExactlyWithoutSwap) {
  for (const auto& e : catalog()) {
    if (e.input.surface != SurfaceKind::P1xP1) continue;
    const bool any_swap = std::any_of(e.input.generators.begin(), e.input.generators.end(),
                                      [](const SurfaceAut& g) { return g.swap; });
    EXPECT_EQ(classify(e.input).verdict == Verdict::NotMinimal, !any_swap) << e.name;
  }
}

TEST(Classifier, StableUnderTorusConjugation) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> c(1, 5), sign(0, 1);
  for (const auto& e : catalog()) {
    if (e.input.surface != SurfaceKind::P1xP1) continue;
    const auto base = classify(e.input);
    for (int k = 0; k < 2; ++k) {
      const SurfaceAut t = torus_element(CycNum(sign(rng) ? c(rng) : -c(rng)), CycNum(c(rng)));
      const auto v = classify(conjugated(e.input, t));
      EXPECT_EQ(v.verdict, base.verdict) << e.name;
      EXPECT_EQ(v.rationale, base.rationale) << e.name;
    }
  }
}

TEST(Classifier, StableUnderPlaneConjugation) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(1, 4);
  for (const auto& e : catalog()) {
    if (e.input.surface != SurfaceKind::P2) continue;
    const auto base = classify(e.input);
    const SurfaceAut d = SurfaceAut::p2(ProjMat(Mat{{1, 0, 0}, {0, c(rng), 0}, {0, 0, c(rng)}}));
    const SurfaceAut p = SurfaceAut::p2(ProjMat(Mat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    for (const SurfaceAut& g : {d, p, d * p}) {
      const auto v = classify(conjugated(e.input, g));
      EXPECT_EQ(v.verdict, base.verdict) << e.name;
      EXPECT_EQ(v.rationale, base.rationale) << e.name;
    }
  }
}

TEST(Classifier, StableUnderSexticTorusConjugation) {
  const SurfaceAut t = SurfaceAut::dp6(ProjMat(Mat{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}),
                                       ProjMat(Mat{{6, 0, 0}, {0, 3, 0}, {0, 0, 2}}), false);
  for (const auto& e : catalog()) {
    if (e.input.surface != SurfaceKind::DP6) continue;
    const auto base = classify(e.input);
    const auto v = classify(conjugated(e.input, t));
    EXPECT_EQ(v.verdict, base.verdict) << e.name;
    EXPECT_EQ(v.rationale, base.rationale) << e.name;
  }
}

TEST(Classifier, IndeterminateOutsideNormalizedCoordinates) {
  const SurfaceAut xi = SurfaceAut::p1p1(ProjMat(Mat{{1, 1}, {0, 1}}), ProjMat(Mat{{1, 1}, {0, 1}}), false);
  const auto v = classify(conjugated(catalog_entry("p1p1/Z4-r").input, xi));
  EXPECT_EQ(v.verdict, Verdict::Indeterminate);
  EXPECT_EQ(v.rationale, "p1p1-normalization");
}

TEST(Classifier, AssertedAndPermutationInputs) {
  ClassifyInput in;
  in.surface = SurfaceKind::Asserted;
  in.facts = {7, true, false};
  const auto bad = classify(in);
  EXPECT_EQ(bad.verdict, Verdict::Indeterminate);
  EXPECT_FALSE(bad.certificate.notes.empty());
  ClassifyInput p;
  p.surface = SurfaceKind::DP5;
  p.permutations = {{0, 0, 1, 2, 3}};
  EXPECT_EQ(classify(p).verdict, Verdict::Indeterminate);
  p.permutations = {{1, 0, 2, 3, 4}};
  EXPECT_EQ(classify(p).verdict, Verdict::NotMinimal);
}

TEST(Classifier, Names) {
  EXPECT_EQ(parse_verdict("not G-solid"), Verdict::NotSolid);
  EXPECT_EQ(parse_surface_kind("dP6"), SurfaceKind::DP6);
  EXPECT_THROW(parse_surface_kind("dP7"), Error);
  EXPECT_THROW(catalog_entry("nope"), Error);
  EXPECT_EQ(mu(4) * mu(4), CycNum(-1));
}
