// SPDX-License-Identifier: Apache-2.0

#include "equisolid/classifier.hpp"

#include <algorithm>

#include "equisolid/error.hpp"
#include "equisolid/links.hpp"
#include "equisolid/picard.hpp"
#include "equisolid/toric.hpp"

namespace equisolid {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Solid:
      return "G-solid";
    case Verdict::NotSolid:
      return "not G-solid";
    case Verdict::NotMinimal:
      return "not minimal";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Solid, Verdict::NotSolid, Verdict::NotMinimal, Verdict::Indeterminate})
    if (verdict_str(v) == s) return v;
  fail("unknown verdict: " + s);
}

std::string surface_kind_name(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2:
      return "P2";
    case SurfaceKind::P1xP1:
      return "P1xP1";
    case SurfaceKind::DP6:
      return "dP6";
    case SurfaceKind::DP5:
      return "dP5";
    case SurfaceKind::Asserted:
      return "asserted";
  }
  return "?";
}

SurfaceKind parse_surface_kind(const std::string& s) {
  for (SurfaceKind k : {SurfaceKind::P2, SurfaceKind::P1xP1, SurfaceKind::DP6, SurfaceKind::DP5,
                        SurfaceKind::Asserted})
    if (surface_kind_name(k) == s) return k;
  fail("unknown surface: " + s);
}

int ClassifyInput::degree() const {
  switch (surface) {
    case SurfaceKind::P2:
      return 9;
    case SurfaceKind::P1xP1:
      return 8;
    case SurfaceKind::DP6:
      return 6;
    case SurfaceKind::DP5:
      return 5;
    case SurfaceKind::Asserted:
      return facts.degree;
  }
  return 0;
}

namespace {

Model model_of(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::P2:
      return Model::P2;
    case SurfaceKind::P1xP1:
      return Model::P1xP1;
    case SurfaceKind::DP6:
      return Model::DP6;
    default:
      fail("no geometric model for " + surface_kind_name(k));
  }
}

struct Step {
  SolidityVerdict& v;
  void decide(Verdict verdict, std::string rationale) {
    v.verdict = verdict;
    v.rationale = std::move(rationale);
  }
};

void short_orbits(const SurfaceGroup& g, std::size_t bound, Certificate& c) {
  for (const auto& [len, rep] : minimal_orbit_lengths(g, bound).witnesses) {
    const bool gp = in_general_position_p1p1(rep.points);
    std::string s = "length " + std::to_string(len) + " at";
    for (const auto& p : rep.points) s += " " + p.str();
    s += gp ? " (general position)" : " (not in general position)";
    c.orbits.push_back(s);
  }
}

void classify_p2(const SurfaceGroup& g, SolidityVerdict& v) {
  Step step{v};
  v.invariant_rank = 1;
  v.mori_fibre_space = true;
  std::vector<SurfaceAut> gens;
  for (Index i : g.group.generators()) gens.push_back(g.elements[i]);
  if (gens.empty()) gens.push_back(SurfaceAut::identity(Model::P2));
  const FixedLocus fix = fixed_locus(gens, Model::P2);
  for (const auto& c : fix.components) v.certificate.fixed_points.push_back(c.str());
  if (fix.whole) v.certificate.fixed_points.push_back("whole plane");
  // invariant lines are the fixed points of the contragredient action
  std::vector<ProjMat> dual;
  for (const auto& e : gens) dual.push_back(ProjMat(inverse(e.a.mat()).transpose()));
  for (const auto& sub : fixed_subspaces(dual))
    if (sub.size() == 1) v.certificate.notes.push_back("invariant line with normal " + vec_str(canonical_scale(sub[0])));
  if (fix.whole || !fix.components.empty()) {
    step.decide(Verdict::NotSolid, "p2-fixed-point");
    return;
  }
  if (v.group_name == "A4" || v.group_name == "S4") {
    step.decide(Verdict::NotSolid, "p2-polyhedral");
    v.flags.push_back("no Hirzebruch");
    v.certificate.notes.push_back("not G-birational to any Hirzebruch surface");
    const LinkEnumeration links = enumerate_links_p2(g);
    for (const auto& l : links.links) v.certificate.links.push_back(l.str());
    for (const auto& b : links.blocked)
      v.certificate.orbits.push_back("blocked: " + b.center.str() + " (" + b.reason + ")");
    return;
  }
  step.decide(Verdict::Solid, "p2-transitive");
}

void classify_p1p1(const SurfaceGroup& g, SolidityVerdict& v) {
  Step step{v};
  v.invariant_rank = invariant_rank(g);
  v.mori_fibre_space = *v.invariant_rank == 1;
  if (*v.invariant_rank != 1) {
    step.decide(Verdict::NotMinimal, "p1p1-rank-two");
    return;
  }
  const ToricityReport rep = toricity(g);
  if (!rep.toric) {
    v.certificate.identifications.push_back("contains a subgroup isomorphic to A4");
    step.decide(Verdict::Solid, "p1p1-non-toric");
    return;
  }
  v.certificate.identifications.push_back("toric: no subgroup isomorphic to A4");
  if (!rep.preserves_square) {
    v.certificate.notes.push_back("toric group given outside torus-normalized coordinates");
    step.decide(Verdict::Indeterminate, "p1p1-normalization");
    return;
  }
  std::vector<SurfaceAut> rotations;
  for (const auto& e : g.elements) {
    auto sq = preserves_square(e);
    if (e.swap && sq && square_is_quarter_turn(*sq))
      rotations.push_back(*sq == SquareSym{1, 2, 3, 0} ? e : e.inverse());
  }
  if (rotations.empty()) {
    short_orbits(g, 5, v.certificate);
    v.certificate.notes.push_back("no element rotates the boundary square");
    step.decide(Verdict::NotSolid, "p1p1-no-rotation");
    return;
  }
  for (const auto& q : rotations) {
    const SurfaceAut t = normalize_r(q);
    if (contained_in_g16(conjugate(g, t))) {
      v.certificate.identifications.push_back("conjugate by " + t.str() + " lies in <r, s, t>");
      short_orbits(g, 5, v.certificate);
      step.decide(Verdict::NotSolid, "p1p1-inside-g16");
      return;
    }
  }
  v.certificate.identifications.push_back("contains a conjugate of r and is not inside <r, s, t>");
  short_orbits(g, 5, v.certificate);
  step.decide(Verdict::Solid, "p1p1-rotation-outside-g16");
}

void classify_dp6(const SurfaceGroup& g, SolidityVerdict& v) {
  Step step{v};
  v.invariant_rank = invariant_rank(g);
  v.mori_fibre_space = *v.invariant_rank == 1;
  if (*v.invariant_rank != 1) {
    step.decide(Verdict::NotMinimal, "dp6-rank");
    return;
  }
  const HexagonImage img = w_image_dp6(g);
  v.certificate.identifications.push_back("hexagon image " + img.name + " (" + img.kind() + ")");
  if (v.group_name == "Z6" || v.group_name == "S3" || v.group_name == "D6") {
    std::vector<SurfaceAut> gens;
    for (Index i : g.group.generators()) gens.push_back(g.elements[i]);
    for (const auto& c : fixed_locus(gens, Model::DP6).components)
      v.certificate.fixed_points.push_back(c.str());
    step.decide(Verdict::NotSolid, "dp6-small-dihedral");
    return;
  }
  step.decide(Verdict::Solid, "dp6-other");
}

void classify_dp5(const ClassifyInput& in, SolidityVerdict& v) {
  Step step{v};
  for (const auto& p : in.permutations) {
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    if (s != std::vector<int>{0, 1, 2, 3, 4}) fail("dP5 generators must be permutations of 0..4");
  }
  auto perms = in.permutations;
  if (perms.empty()) perms.push_back({0, 1, 2, 3, 4});
  const auto g = permutation_group(perms);
  v.group_order = g.order();
  v.group_name = identify_named(g.group).name;
  static const std::vector<std::string> minimal{"S5", "A5", "D5", "Z5", "F5"};
  if (std::find(minimal.begin(), minimal.end(), v.group_name) == minimal.end()) {
    v.invariant_rank = std::nullopt;
    step.decide(Verdict::NotMinimal, "dp5-rank");
    return;
  }
  v.invariant_rank = 1;
  v.mori_fibre_space = true;
  if (v.group_name == "Z5" || v.group_name == "D5") {
    const CycNum z = CycNum::root_of_unity(5, 1);
    std::vector<SurfaceAut> gens{SurfaceAut::p2(ProjMat(Mat{{1, 0, 0}, {0, z, 0}, {0, 0, z.inverse()}}))};
    if (v.group_name == "D5") gens.push_back(SurfaceAut::p2(ProjMat(Mat{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
    const Dp5Construction d = dp5_construction(close_surface_group(gens));
    std::string s = "plane model: orbit of (1:1:1) of length 5";
    v.certificate.orbits.push_back(s);
    v.certificate.fixed_points.push_back("plane model fixes " + vec_str(d.fixed_point));
    step.decide(Verdict::NotSolid, "dp5-cyclic-dihedral");
    return;
  }
  step.decide(Verdict::Solid, "dp5-other");
}

void classify_asserted(const AssertedFacts& f, SolidityVerdict& v) {
  Step step{v};
  if (f.degree < 1 || f.degree > 4) fail("asserted facts cover degrees 1 to 4");
  v.invariant_rank = f.rank_one ? std::optional<std::size_t>(1) : std::nullopt;
  v.mori_fibre_space = f.rank_one;
  if (!f.rank_one) {
    step.decide(Verdict::NotMinimal, "asserted-rank");
    return;
  }
  if (f.degree == 4) {
    v.certificate.notes.push_back("a point in general position means a point on no (-1)-curve");
    if (f.fixes_general_point) step.decide(Verdict::NotSolid, "deg4-fixed-point");
    else step.decide(Verdict::Solid, "deg4-no-fixed-point");
    return;
  }
  step.decide(Verdict::Solid, "deg3-or-less");
}

}  // namespace

SurfaceGroup input_group(const ClassifyInput& input) {
  const Model m = model_of(input.surface);
  for (const auto& g : input.generators)
    if (g.model != m) fail("generator " + g.str() + " does not act on " + model_name(m));
  if (input.generators.empty()) return close_surface_group({SurfaceAut::identity(m)});
  return close_surface_group(input.generators);
}

SolidityVerdict classify(const ClassifyInput& input) {
  SolidityVerdict v;
  v.degree = input.degree();
  std::string step = "setup";
  try {
    switch (input.surface) {
      case SurfaceKind::DP5:
        step = "dP5 rules";
        classify_dp5(input, v);
        return v;
      case SurfaceKind::Asserted:
        step = "asserted facts";
        classify_asserted(input.facts, v);
        return v;
      default:
        break;
    }
    step = "group closure";
    const SurfaceGroup g = input_group(input);
    v.group_order = g.order();
    step = "identification";
    v.group_name = identify_named(g.group).name;
    step = surface_kind_name(input.surface) + " rules";
    if (input.surface == SurfaceKind::P2) classify_p2(g, v);
    if (input.surface == SurfaceKind::P1xP1) classify_p1p1(g, v);
    if (input.surface == SurfaceKind::DP6) classify_dp6(g, v);
  } catch (const Error& e) {
    v.verdict = Verdict::Indeterminate;
    v.rationale = "failed-step";
    v.certificate.notes.push_back(step + ": " + e.what());
  }
  return v;
}

std::vector<CatalogRow> catalog_verdicts() {
  std::vector<CatalogRow> rows;
  for (const auto& e : catalog()) rows.push_back({e.name, classify(e.input), e.expected});
  return rows;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  fail("unknown catalog entry: " + name);
}

}  // namespace equisolid
