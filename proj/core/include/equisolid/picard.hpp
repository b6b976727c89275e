// SPDX-License-Identifier: Apache-2.0
//
// Induced actions on Picard lattices of P1xP1 and the sextic del Pezzo
// model, invariant ranks, and the hexagon of (-1)-curves.

#ifndef EQUISOLID_PICARD_HPP_
#define EQUISOLID_PICARD_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equisolid/surfaces.hpp"

namespace equisolid {

using IntMatrix = std::vector<std::vector<long>>;
/// Vertex images under a hexagon symmetry: vertex i goes to perm[i].
using HexPerm = std::array<int, 6>;

struct PicAction {
  Model model = Model::P1xP1;
  /// Action on classes; column j is the image of basis class j. The basis is
  /// the two rulings for P1xP1 and (H, E1, E2, E3) for the sextic model.
  IntMatrix matrix;
  std::optional<HexPerm> hexagon;
};

IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b);

/// Six (-1)-curves in hexagonal order E1, D12, E2, D23, E3, D13. Curve i
/// passes through vertices i-1 and i (mod 6).
struct HexCurve {
  std::string name;
  int held_factor;  // factor on which the curve is a single point
  Vec point;        // that point
  std::vector<Vec> line;  // basis of the moving line on the other factor
  std::array<long, 4> cls;  // class in the basis (H, E1, E2, E3)
};

const std::array<HexCurve, 6>& hexagon_curves();
const std::array<SurfacePoint, 6>& hexagon_vertices();
/// Exact check of the incidence pattern; throws on failure.
void verify_hexagon();

/// Throws "not an automorphism of the model" if a vertex leaves the hexagon.
PicAction pic_action(const SurfaceAut& g);

/// Rank of the invariant part of the Picard lattice.
std::size_t invariant_rank(const SurfaceGroup& g);

std::string hexagon_kind(const HexPerm& p);

struct HexagonImage {
  std::vector<HexPerm> perms;  // sorted
  std::string name;            // abstract type of the image
  bool contains_rotation6 = false;
  bool transitive_on_curves = false;
  /// The image contains the rotation group of order 6 or a subgroup of
  /// order 6 acting transitively on the curves.
  bool minimal_possible = false;
  std::string kind() const;
};

HexagonImage w_image_dp6(const SurfaceGroup& g);

}  // namespace equisolid

#endif  // EQUISOLID_PICARD_HPP_
