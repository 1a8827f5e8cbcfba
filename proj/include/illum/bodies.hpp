// Smooth convex body descriptors (balls and ellipsoids): diameter,
// circumball, boundary sampling with exact outward normals, and the
// pointwise half-space illumination test.
#pragma once

#include <cstdint>
#include <vector>

#include "illum/types.hpp"

namespace illum {

class SmoothBody {
 public:
  enum class Kind { Ball, Ellipsoid };

  static SmoothBody make_ball(Vec center, double radius);
  /// axes: columns are pairwise orthonormal semi-axis directions;
  /// lengths: the positive semi-axis lengths.
  static SmoothBody make_ellipsoid(Vec center, Mat axes, Vec lengths);

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(center_.size()); }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  const Mat& axes() const { return axes_; }
  const Vec& lengths() const { return lengths_; }

  /// Symmetric positive definite M with body = center + M * unit ball.
  Mat shape_matrix() const;

  SmoothBody translated(const Vec& t) const;

 private:
  SmoothBody() = default;
  Kind kind_ = Kind::Ball;
  Vec center_;
  double radius_ = 0.0;  // ball only
  Mat axes_;             // ellipsoid only
  Vec lengths_;          // ellipsoid only
};

struct BodyProfile {
  double diameter = 0.0;
  double circumradius = 0.0;
  Vec circumcenter;
};

double diameter(const SmoothBody& body);

/// Smallest enclosing ball (exact for balls and ellipsoids).
BodyProfile circumball(const SmoothBody& body);

/// sqrt(n / (2(n+1))) * D; upper bound for any circumradius at diameter D.
double jung_bound(int n, double diam);

struct BoundaryPoint {
  Vec point;
  Vec normal;  // outward unit normal
};

/// m boundary points with exact outward normals, deterministic per seed.
std::vector<BoundaryPoint> sample_boundary(const SmoothBody& body, int m,
                                           std::uint64_t seed);

struct IlluminationTest {
  bool illuminated = false;
  double margin = 0.0;  // <normal, x - point>; must be strictly positive
};

IlluminationTest illuminates(const Vec& x, const BoundaryPoint& bp);

}  // namespace illum
