// SPDX-License-Identifier: Apache-2.0
//
// The torus normalizer on P1xP1: symmetries of the boundary square, the
// normal form of rotation elements, and toricity tests.

#ifndef EQUISOLID_TORIC_HPP_
#define EQUISOLID_TORIC_HPP_

#include <array>
#include <optional>
#include <string>

#include "equisolid/surfaces.hpp"

namespace equisolid {

/// Symmetry of the square, as images of the vertices (0,0), (inf,0),
/// (inf,inf), (0,inf) in that cyclic order.
using SquareSym = std::array<int, 4>;

const std::array<SurfacePoint, 4>& square_vertices();
SquareSym square_compose(const SquareSym& a, const SquareSym& b);  // a after b
bool square_is_identity(const SquareSym& s);
/// Rotation by a quarter turn in either direction.
bool square_is_quarter_turn(const SquareSym& s);
std::string square_str(const SquareSym& s);

/// The induced symmetry when g permutes the four boundary curves; empty
/// when g is outside the torus normalizer.
std::optional<SquareSym> preserves_square(const SurfaceAut& g);

/// Diagonal and without swap.
bool is_torus_element(const SurfaceAut& g);

SurfaceAut torus_element(const CycNum& k, const CycNum& l);  // (kx, ly)
SurfaceAut standard_r();  // (1/y, x)
SurfaceAut standard_s();  // (y, x)
SurfaceAut standard_t();  // (-x, -y)

/// For g = (a/y, bx) returns t = (kx, ly) with t g t^-1 = r, l^2 = 1/(ab) and
/// k = b l. Throws if g has another shape or the root is not constructible.
SurfaceAut normalize_r(const SurfaceAut& g);

struct ToricityReport {
  bool toric = false;
  bool preserves_square = false;  // every element normalizes the torus
  std::string note;
};

/// Requires invariant rank 1. Toric exactly when no subgroup is A4;
/// cross-checked against square preservation.
ToricityReport toricity(const SurfaceGroup& g);
bool is_toric(const SurfaceGroup& g);

/// The group <r, s, t> of order 16.
const SurfaceGroup& g16();
bool contained_in_g16(const SurfaceGroup& g);

SurfaceGroup conjugate(const SurfaceGroup& g, const SurfaceAut& t);  // t g t^-1

}  // namespace equisolid

#endif  // EQUISOLID_TORIC_HPP_
