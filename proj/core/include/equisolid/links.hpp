// SPDX-License-Identifier: Apache-2.0
//
// Sarkisov links from the projective plane for the tetrahedral and
// octahedral groups, the quadratic and quintic involutions, conic pencils
// through orbits of four points, and the quintic del Pezzo constructions.

#ifndef EQUISOLID_LINKS_HPP_
#define EQUISOLID_LINKS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equisolid/surfaces.hpp"

namespace equisolid {

struct Term {
  CycNum coeff;
  std::array<int, 3> exp{};  // powers of x, y, z
};

/// Homogeneous polynomial in x, y, z.
struct HomPoly {
  std::vector<Term> terms;
  CycNum eval(const Vec& p) const;
  int degree() const;
  std::string str() const;
};

struct RationalMapP2 {
  std::string name;
  std::array<HomPoly, 3> f;
  std::vector<Vec> base_points;  // recorded part of the base locus
  /// Throws "base point" when all three polynomials vanish.
  Vec operator()(const Vec& p) const;
  bool is_base_point(const Vec& p) const;
};

/// (x:y:z) -> (yz:xz:xy).
const RationalMapP2& cremona_map();
Vec cremona(const Vec& p);

/// The quintic involution attached to the orbit O6(a) of the tetrahedral
/// group; a must be nonzero.
RationalMapP2 ia_map(const CycNum& a);
Vec involution_ia(const CycNum& a, const Vec& p);
/// {(0:1:a),(a:0:1),(1:a:0),(0:-1:a),(a:0:-1),(-1:a:0)}
std::vector<Vec> six_point_orbit(const CycNum& a);

/// Result of testing g i g^-1 = i on sample points for every g in G.
struct EquivarianceReport {
  bool equivariant = true;
  std::size_t checked = 0;
  // first failure
  std::optional<SurfaceAut> element;
  std::optional<Vec> point, lhs, rhs;
  /// When not equivariant: an element c of the normalizing signed
  /// permutation group, outside G, for which c i commutes with G.
  std::optional<SurfaceAut> twist;
};

EquivarianceReport check_equivariance(const SurfaceGroup& g, const RationalMapP2& map,
                                      const std::vector<Vec>& samples);

/// Random points with small integer coordinates avoiding the base points.
std::vector<Vec> random_plane_points(std::size_t n, std::uint32_t seed,
                                     const RationalMapP2* avoid = nullptr);

// ---- orbits of the tetrahedral and octahedral groups ----

struct PlaneOrbit {
  OrbitReport orbit;
  bool general_position = false;
  bool collinear_triple = false;
  std::optional<Vec> conic;  // conic through all points, for five or more
  /// Representative of a one-parameter family of orbits swept along
  /// pointwise fixed lines; `lines` holds their equations.
  bool family = false;
  std::vector<Vec> lines;
  std::size_t length() const { return orbit.length(); }
  std::vector<Vec> points() const;
  std::string str() const;
};

/// Orbits of length <= bound on P2 for a group identified as A4 or S4,
/// sorted by length and then by points. Families appear once.
std::vector<PlaneOrbit> enumerate_small_orbits(const SurfaceGroup& g, std::size_t bound = 8);

struct SarkisovLink {
  int type = 1;  // I or II
  PlaneOrbit center;
  std::string target;
  std::optional<std::string> map;  // "cremona" or "i_a"
  std::string str() const;
};

struct BlockedCenter {
  PlaneOrbit center;
  std::string reason;
};

struct LinkEnumeration {
  std::vector<SarkisovLink> links;
  std::vector<BlockedCenter> blocked;
};

LinkEnumeration enumerate_links_p2(const SurfaceGroup& g);

// ---- conic pencils ----

struct PencilCheck {
  std::vector<Vec> basis;      // two conics, coefficients of x^2, y^2, z^2, xy, xz, yz
  Subgroup kernel;             // elements acting trivially on the pencil
  std::string kernel_name;
  bool fibrewise_free = false;
  std::size_t smooth_members = 0;
  std::string note;
};

PencilCheck conic_pencil_check(const SurfaceGroup& g, const std::vector<Vec>& orbit4);

/// Both lists span the same space of conics.
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b);

// ---- quintic del Pezzo constructions ----

struct Dp5Construction {
  OrbitReport orbit5;
  bool no_three_collinear = false;
  std::optional<Vec> conic;
  Vec fixed_point;
};

/// For the cyclic group of order 5 generated by diag(1, z, 1/z) and its
/// extension by the swap of the last two coordinates.
Dp5Construction dp5_construction(const SurfaceGroup& g);

const SurfaceGroup& octahedral_group();   // <A, B, C>
const SurfaceGroup& tetrahedral_group();  // <a, b>

}  // namespace equisolid

#endif  // EQUISOLID_LINKS_HPP_
