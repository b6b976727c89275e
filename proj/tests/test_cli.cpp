// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "equisolid/cli.hpp"
#include "equisolid/toric.hpp"

using namespace equisolid;
using namespace equisolid::cli;

namespace {

Options no_cache() {
  Options o;
  o.use_cache = false;
  return o;
}

}  // namespace

TEST(Spec, ParsesTheStandardRotation) {
  const GroupSpec s = parse_spec(
      "# r = (1/y, x)\n"
      "surface = \"P1xP1\"\n"
      "name = \"r\"\n"
      "gen = [[0, 1], [1, 0]], [[1, 0], [0, 1]], swap = 1\n");
  const ClassifyInput in = to_input(s);
  ASSERT_EQ(in.generators.size(), 1u);
  EXPECT_EQ(in.generators[0], standard_r());
  EXPECT_EQ(act(in.generators[0], SurfacePoint::p1p1_affine(2, 3)),
            SurfacePoint::p1p1_affine(CycNum(1, 3), 2));
}

TEST(Spec, ScalarGrammarInsideMatrices) {
  const GroupSpec s = parse_spec("surface = P2\ngen = [[1,0,0],[0,z5,0],[0,0,z5^4]]\n");
  EXPECT_EQ(s.generators[0].matrices[0](2, 2), CycNum::root_of_unity(5, 4));
  const GroupSpec t = parse_spec("surface = P2\ngen = [[(1+i)/2, 0, 0], [0, 1, 0], [0, 0, -3/7]]");
  EXPECT_EQ(t.generators[0].matrices[0](0, 0), (CycNum(1) + CycNum::root_of_unity(4, 1)) / 2);
}

TEST(Spec, MalformedScalarReportsPosition) {
  const std::string text = "surface = P2\ngen = [[1,0,0],[0,z5^^,0],[0,0,1]]\n";
  try {
    parse_spec(text);
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.position(), text.find("z5^^") + 3);
    EXPECT_NE(std::string(e.what()).find("bad scalar"), std::string::npos);
  }
}

TEST(Spec, RejectsWrongShapesAndKeys) {
  EXPECT_THROW(parse_spec("surface = P2\ngen = [[1,0],[0,1]]\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = P1xP1\ngen = [[1,0],[0,1]]\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = P2\ngen = [[1,0,0],[0,1,0],[0,0,0]]\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = P2\ncolour = blue\n"), SpecError);
  EXPECT_THROW(parse_spec("gen = [[1,0,0],[0,1,0],[0,0,1]]\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = dP5\ngen = [0, 1, 2, 3, 3]\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = asserted7\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = P2\nrank_one = true\n"), SpecError);
  EXPECT_THROW(parse_spec("surface = \"P2\n"), SpecError);
}

TEST(Spec, RejectsNonMembersOfTheSexticModel) {
  try {
    parse_spec("surface = dP6\ngen = [[1,2,0],[0,1,0],[0,0,1]], [[1,0,0],[0,1,0],[0,0,1]]\n");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("pullback of span{xu-yv, xu-zw}"), std::string::npos);
  }
  EXPECT_NO_THROW(parse_spec("surface = dP6\ngen = [[0,0,1],[1,0,0],[0,1,0]], [[0,0,1],[1,0,0],[0,1,0]], swap\n"));
}

TEST(Spec, RoundTripsEveryCatalogEntry) {
  for (const auto& e : catalog()) {
    const GroupSpec s = catalog_spec(e.name);
    EXPECT_EQ(parse_spec(render(s)), s) << e.name;
  }
}

TEST(Spec, RoundTripsRandomSpecs) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> small(-6, 6), root(0, 11), kind(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    GroupSpec s;
    const int k = kind(rng);
    s.surface = k == 0 ? SurfaceKind::P2 : k == 1 ? SurfaceKind::P1xP1 : k == 2 ? SurfaceKind::DP5
                                                                              : SurfaceKind::Asserted;
    if (trial % 3 == 0) s.name = "g" + std::to_string(trial);
    if (s.surface == SurfaceKind::Asserted) {
      s.facts = {1 + trial % 4, trial % 2 == 0, trial % 3 == 0};
    } else if (s.surface == SurfaceKind::DP5) {
      std::vector<int> p{0, 1, 2, 3, 4};
      std::shuffle(p.begin(), p.end(), rng);
      s.generators.push_back({{}, false, p});
    } else {
      const std::size_t n = s.surface == SurfaceKind::P2 ? 3 : 2;
      GeneratorSpec g;
      for (int m = 0; m < (n == 3 ? 1 : 2); ++m) {
        Mat a(n, n);
        do {
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              a(i, j) = CycNum(small(rng), 1 + std::abs(small(rng))) +
                        CycNum(small(rng)) * CycNum::root_of_unity(12, root(rng));
        } while (det(a).is_zero());
        g.matrices.push_back(a);
      }
      g.swap = n == 2 && trial % 2;
      s.generators.push_back(g);
    }
    EXPECT_EQ(parse_spec(render(s)), s) << render(s);
  }
}

TEST(Commands, ClassifyPlaneOctahedral) {
  const Outcome o = run_command("classify", catalog_spec("p2/S4"), no_cache());
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.report["schema"], kSchema);
  EXPECT_EQ(o.report["result"]["verdict"], "not G-solid");
  EXPECT_EQ(o.report["result"]["flags"], Json::array({"no Hirzebruch"}));
  EXPECT_EQ(o.report["result"]["certificate"]["links"].size(), 2u);
  EXPECT_EQ(o.report["group"]["name"], "S4");
}

TEST(Commands, IdentifyContrex) {
  const Outcome o = run_command("identify", catalog_spec("p1p1/contrex"), no_cache());
  ASSERT_EQ(o.exit_code, 0) << dump(o.report);
  const Json& f = o.report["factor_preserving"];
  EXPECT_EQ(f["order"], 16);
  EXPECT_EQ(f["name"], "Z2^2:Z4");
  for (const auto& t : f["subgroup_types"]) EXPECT_NE(t["name"], "D4");
  EXPECT_EQ(o.report["group"]["order"], 32);
}

TEST(Commands, GoursatContrex) {
  const Outcome o = run_command("goursat", catalog_spec("p1p1/contrex"), no_cache());
  const Json& g = o.report["goursat"];
  EXPECT_EQ(g["factor1"]["name"], "D4");
  EXPECT_EQ(g["factor2"]["name"], "D4");
  EXPECT_EQ(g["quotient"]["name"], "Z2^2");
  EXPECT_EQ(g["subgroup"]["order"], 16);
  EXPECT_EQ(g["kernels_equal"], true);
  EXPECT_EQ(g["kernel_complements"], 0);
}

TEST(Commands, OrbitsFixedPointsAndLinks) {
  const Outcome trh = run_command("orbits", catalog_spec("p1p1/trh"), [] {
    Options o = no_cache();
    o.max_length = 5;
    return o;
  }());
  for (const auto& e : trh.report["orbits"]) EXPECT_FALSE(e["general_position"].get<bool>());
  const Outcome anti = run_command("orbits", catalog_spec("p1p1/D4-r-antidiag"), no_cache());
  bool found = false;
  for (const auto& e : anti.report["orbits"])
    if (e["length"] == 2 && e["general_position"] == true) found = true;
  EXPECT_TRUE(found);
  const Outcome fix = run_command("fixed-points", catalog_spec("dp6/D6"), no_cache());
  EXPECT_EQ(fix.report["fixed_locus"]["components"], Json::array({"point (1:1:1)x(1:1:1)"}));
  const Outcome links = run_command("links", catalog_spec("p2/A4"), no_cache());
  EXPECT_EQ(links.report["links"].size(), 5u);
  const Outcome bad = run_command("links", catalog_spec("p1p1/trh"), no_cache());
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(bad.report.contains("error"));
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run_command("classify", catalog_spec("p1p1/torus-only"), no_cache()).exit_code, 2);
  GroupSpec odd = catalog_spec("p1p1/Z4-r");
  odd.generators[0].matrices[0] = Mat{{1, 1}, {1, -1}};
  odd.generators[0].matrices[1] = Mat{{1, 1}, {1, -1}};
  EXPECT_EQ(run_command("classify", odd, no_cache()).exit_code, 3);
  EXPECT_EQ(run_command("classify", std::nullopt, no_cache()).exit_code, 1);
  EXPECT_EQ(run_command("frobnicate", catalog_spec("p2/S4"), no_cache()).exit_code, 1);
}

TEST(Commands, CatalogIsDeterministicAndComplete) {
  const Outcome a = run_command("catalog", std::nullopt, no_cache());
  const Outcome b = run_command("catalog", std::nullopt, no_cache());
  EXPECT_EQ(dump(a.report), dump(b.report));
  EXPECT_EQ(a.report["all_match"], true);
  EXPECT_EQ(a.report["entries"].size(), catalog().size());
  EXPECT_FALSE(a.report.contains("timing"));
}

TEST(Commands, CacheReturnsTheSameReport) {
  const auto dir = std::filesystem::temp_directory_path() / "equisolid-test-cache";
  std::filesystem::remove_all(dir);
  Options o;
  o.cache_dir = dir.string();
  const Outcome first = run_command("classify", catalog_spec("p1p1/F5"), o);
  const Outcome second = run_command("classify", catalog_spec("p1p1/F5"), o);
  EXPECT_FALSE(first.from_cache);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(dump(first.report), dump(second.report));
  o.use_cache = false;
  EXPECT_FALSE(run_command("classify", catalog_spec("p1p1/F5"), o).from_cache);
  std::filesystem::remove_all(dir);
}

TEST(Commands, TimingOnlyWhenAsked) {
  Options o = no_cache();
  o.timing = true;
  EXPECT_TRUE(run_command("classify", catalog_spec("p2/Z5"), o).report.contains("timing"));
}
