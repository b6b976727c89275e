// SPDX-License-Identifier: Apache-2.0
//
// Solidity verdicts for del Pezzo surfaces with a finite group action, and
// the built-in catalog of example groups.

#ifndef EQUISOLID_CLASSIFIER_HPP_
#define EQUISOLID_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "equisolid/surfaces.hpp"

namespace equisolid {

enum class Verdict { Solid, NotSolid, NotMinimal, Indeterminate };

std::string verdict_str(Verdict v);  // "G-solid", "not G-solid", "not minimal", "indeterminate"
Verdict parse_verdict(const std::string& s);

/// Facts taken on trust for surfaces of degree at most 4.
struct AssertedFacts {
  int degree = 4;
  bool rank_one = true;
  /// Degree 4: the group fixes a point lying on no (-1)-curve.
  bool fixes_general_point = false;

  friend bool operator==(const AssertedFacts&, const AssertedFacts&) = default;
};

enum class SurfaceKind { P2, P1xP1, DP6, DP5, Asserted };

std::string surface_kind_name(SurfaceKind k);  // "P2", "P1xP1", "dP6", "dP5", "asserted"
SurfaceKind parse_surface_kind(const std::string& s);

struct ClassifyInput {
  SurfaceKind surface = SurfaceKind::P2;
  std::vector<SurfaceAut> generators;          // P2, P1xP1, dP6
  std::vector<std::vector<int>> permutations;  // dP5: images of 0..4
  AssertedFacts facts;                         // degree <= 4
  std::string name;

  int degree() const;
};

struct Certificate {
  std::vector<std::string> fixed_points;
  std::vector<std::string> orbits;
  std::vector<std::string> links;
  std::vector<std::string> identifications;
  std::vector<std::string> notes;
};

struct SolidityVerdict {
  int degree = 0;
  std::optional<std::size_t> invariant_rank;
  bool mori_fibre_space = false;
  Verdict verdict = Verdict::Indeterminate;
  /// Which case of the classification decided the verdict.
  std::string rationale;
  std::string group_name;
  std::size_t group_order = 0;
  std::vector<std::string> flags;
  Certificate certificate;
};

SolidityVerdict classify(const ClassifyInput& input);

struct CatalogEntry {
  std::string name;
  std::string description;
  ClassifyInput input;
  Verdict expected;
};

const std::vector<CatalogEntry>& catalog();
/// Throws for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

struct CatalogRow {
  std::string name;
  SolidityVerdict verdict;
  Verdict expected;
  bool matches() const { return verdict.verdict == expected; }
};

std::vector<CatalogRow> catalog_verdicts();

/// Surface group generated by a geometric input.
SurfaceGroup input_group(const ClassifyInput& input);

}  // namespace equisolid

#endif  // EQUISOLID_CLASSIFIER_HPP_
