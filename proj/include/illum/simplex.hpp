// Simplex geometry: facet normals/areas, volume, incenter, exact inradius;
// the lattice simplex with vertices 0, t*a_1, ..., t*a_n; the scale rule
// t*; and the regular simplex used by the diameter-only construction.
#pragma once

#include <vector>

#include "illum/lattice.hpp"
#include "illum/types.hpp"

namespace illum {

struct Facet {
  Vec normal;     // outward unit normal
  double offset;  // <normal, x> == offset on the facet hyperplane
  double area;    // (n-1)-volume
  int opposite;   // index of the vertex not on this facet
};

struct SimplexGeometry {
  std::vector<Vec> vertices;  // n+1 points
  std::vector<Facet> facets;  // facets[i] is opposite vertices[i]
  double volume = 0.0;
  double surface_area = 0.0;
  Vec incenter;
  double inradius = 0.0;  // n * volume / surface_area

  /// Smallest signed distance from p to a facet plane (positive inside).
  double clearance(const Vec& p) const;
  /// Max pairwise vertex distance.
  double diameter() const;
};

/// Builds full facet data for n+1 affinely independent points in R^n.
SimplexGeometry simplex_from_points(const std::vector<Vec>& points);

struct LatticeSimplex {
  LatticeBasis generators;
  long t = 1;
  SimplexGeometry geom;
};

/// Simplex with vertices 0, t*a_1, ..., t*a_n. Facet i (i >= 1) is the
/// hull of the remaining vertices including 0; facet 0 is the hull of all
/// t*a_i.
LatticeSimplex build_simplex(const LatticeBasis& basis, long t);

/// t * min||a_i|| / (n (n + 2^{n-1}) delta(A)); never exceeds the exact
/// inradius of the simplex at scale t.
double inradius_lower_bound(const LatticeBasis& basis, long t);

/// Integer part of n (n + 2^{n-1}) R delta / minA + 1. The inradius lower
/// bound at this scale strictly exceeds R.
long t_star(int n, double circumradius, double delta, double min_norm);

/// Smallest integer t with exact inradius strictly above R, via the exact
/// linearity r(t) = t * r(1), rechecked against facet clearances.
long minimal_t_oracle(const LatticeBasis& basis, double circumradius);

/// n+1 points in R^n, pairwise distance `side`, centroid at the origin.
std::vector<Vec> regular_simplex(int n, double side);

/// n (n + 2^{n-1}), the dimensional factor in the scale and bound formulas.
double scale_constant(int n);

}  // namespace illum
