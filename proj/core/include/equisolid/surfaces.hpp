// SPDX-License-Identifier: Apache-2.0
//
// Automorphisms of P1, P2, P1xP1 and the degree 6 del Pezzo surface
// (xu = yv = zw inside P2xP2), with orbits and fixed loci.

#ifndef EQUISOLID_SURFACES_HPP_
#define EQUISOLID_SURFACES_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equisolid/finite_group.hpp"
#include "equisolid/matrix_group.hpp"

namespace equisolid {

enum class Model { P1, P2, P1xP1, DP6 };

std::string model_name(Model m);

/// For product models the first matrix acts on the first factor. With the
/// swap bit set, (p, q) maps to (a q, b p); otherwise to (a p, b q).
struct SurfaceAut {
  Model model = Model::P2;
  ProjMat a;
  ProjMat b;
  bool swap = false;

  static SurfaceAut p1(const ProjMat& m);
  static SurfaceAut p2(const ProjMat& m);
  static SurfaceAut p1p1(const ProjMat& a, const ProjMat& b, bool swap);
  /// Throws unless the pair preserves the surface xu = yv = zw.
  static SurfaceAut dp6(const ProjMat& a, const ProjMat& b, bool swap);
  static SurfaceAut identity(Model m);

  bool is_product() const { return model == Model::P1xP1 || model == Model::DP6; }
  SurfaceAut inverse() const;
  bool is_identity() const;

  /// Composition: (g * h) applies h first.
  friend SurfaceAut operator*(const SurfaceAut& g, const SurfaceAut& h);
  friend bool operator==(const SurfaceAut& g, const SurfaceAut& h) {
    return g.model == h.model && g.swap == h.swap && g.a == h.a &&
           (!g.is_product() || g.b == h.b);
  }
  friend bool operator!=(const SurfaceAut& g, const SurfaceAut& h) { return !(g == h); }
  std::size_t hash() const;
  std::string str() const;
};

/// The pullback test for the span of the forms xu - yv, xu - zw.
bool dp6_membership(const ProjMat& a, const ProjMat& b, bool swap);

struct SurfacePoint {
  Model model = Model::P2;
  Vec x;  // first (or only) factor, canonically scaled
  Vec y;  // second factor for product models

  static SurfacePoint p1(Vec v);
  static SurfacePoint p2(Vec v);
  static SurfacePoint p1p1(Vec p, Vec q);
  /// Affine chart (1:x) x (1:y).
  static SurfacePoint p1p1_affine(const CycNum& x, const CycNum& y);
  /// Throws unless the point satisfies xu = yv = zw.
  static SurfacePoint dp6(Vec p, Vec q);

  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
    return a.model == b.model && a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const SurfacePoint& a, const SurfacePoint& b) { return !(a == b); }
  friend bool operator<(const SurfacePoint& a, const SurfacePoint& b);
  std::size_t hash() const;
  std::string str() const;
};

bool on_dp6(const Vec& p, const Vec& q);

SurfacePoint act(const SurfaceAut& g, const SurfacePoint& p);

using SurfaceGroup = ConcreteGroup<SurfaceAut>;

SurfaceGroup close_surface_group(const std::vector<SurfaceAut>& gens,
                                 std::size_t cap = kDefaultCap);

/// Elements without the swap bit.
Subgroup swap_free_part(const SurfaceGroup& g);

struct OrbitReport {
  SurfacePoint base;
  std::vector<SurfacePoint> points;  // generator BFS order
  Subgroup stabilizer;
  std::size_t length() const { return points.size(); }
};

OrbitReport orbit(const SurfaceGroup& g, const SurfacePoint& p);

// ---- fixed loci ----

enum class ComponentKind {
  Point,       // an isolated point
  Line,        // projective line in P2 spanned by two vectors
  Ruling,      // P1xP1: points whose factor `factor` equals `coordinate`
  Graph,       // P1xP1: {(p, B p)}
  Curve,       // DP6: {p} x L or L x {q} cut by the surface, exactly linear
  Unresolved,  // DP6: a component the factor-wise analysis cannot cut down
};

struct FixedComponent {
  ComponentKind kind = ComponentKind::Point;
  SurfacePoint point;       // Point
  std::vector<Vec> span;    // Line / Curve: basis of the moving factor
  int factor = 0;           // Ruling / Curve: the factor that is held fixed
  Vec coordinate;           // Ruling / Curve: the fixed value on that factor
  ProjMat graph;            // Graph
  std::string str() const;
};

struct FixedLocus {
  std::vector<FixedComponent> components;
  /// The group acts trivially (the whole surface is fixed).
  bool whole = false;
  /// Some component was left unresolved (DP6 only).
  bool unresolved = false;

  std::vector<SurfacePoint> points() const;
};

/// Fixed locus of the group generated by gens.
FixedLocus fixed_locus(const std::vector<SurfaceAut>& gens, Model model);

/// Projective fixed subspaces of a finite group of matrices, via
/// linear-character projectors of a finite lift; each entry is a basis.
std::vector<std::vector<Vec>> fixed_subspaces(const std::vector<ProjMat>& gens);

bool is_fixed(const SurfaceAut& g, const FixedComponent& c);

struct OrbitLengths {
  std::map<std::size_t, OrbitReport> witnesses;  // length -> witness
  std::vector<std::size_t> lengths() const;
};

/// Every orbit length not exceeding bound, each with a witness orbit.
OrbitLengths minimal_orbit_lengths(const SurfaceGroup& g, std::size_t bound);

// ---- position predicates ----

bool general_position_p1p1(const SurfacePoint& p, const SurfacePoint& q);
/// Pairwise general position of a P1xP1 point set.
bool in_general_position_p1p1(const std::vector<SurfacePoint>& pts);
bool collinear(const Vec& a, const Vec& b, const Vec& c);
/// Coefficients of (x^2, y^2, z^2, xy, xz, yz) of a conic through the points.
std::optional<Vec> on_common_conic(const std::vector<Vec>& pts);
/// Plane points in general position for blowing up (at most 8 points):
/// no three collinear, no six on a conic, no eight on a cubic singular at one.
bool in_general_position_p2(const std::vector<Vec>& pts);
std::string conic_str(const Vec& coeffs);

}  // namespace equisolid

template <>
struct std::hash<equisolid::SurfaceAut> {
  std::size_t operator()(const equisolid::SurfaceAut& g) const noexcept { return g.hash(); }
};

#endif  // EQUISOLID_SURFACES_HPP_
