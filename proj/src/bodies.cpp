#include "illum/bodies.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "illum/errors.hpp"

namespace illum {

SmoothBody SmoothBody::make_ball(Vec center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  SmoothBody b;
  b.kind_ = Kind::Ball;
  b.center_ = std::move(center);
  b.radius_ = radius;
  return b;
}

SmoothBody SmoothBody::make_ellipsoid(Vec center, Mat axes, Vec lengths) {
  const auto n = center.size();
  if (axes.rows() != n || axes.cols() != n || lengths.size() != n) {
    throw std::invalid_argument("ellipsoid axes/lengths dimension mismatch");
  }
  if (!(lengths.minCoeff() > 0.0)) {
    throw std::invalid_argument("ellipsoid semi-axis lengths must be positive");
  }
  Mat gram = axes.transpose() * axes;
  if ((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("ellipsoid axes must be orthonormal");
  }
  SmoothBody b;
  b.kind_ = Kind::Ellipsoid;
  b.center_ = std::move(center);
  b.axes_ = std::move(axes);
  b.lengths_ = std::move(lengths);
  return b;
}

Mat SmoothBody::shape_matrix() const {
  const int n = dim();
  if (kind_ == Kind::Ball) return radius_ * Mat::Identity(n, n);
  return axes_ * lengths_.asDiagonal() * axes_.transpose();
}

SmoothBody SmoothBody::translated(const Vec& t) const {
  SmoothBody b = *this;
  b.center_ += t;
  return b;
}

double diameter(const SmoothBody& body) {
  if (body.kind() == SmoothBody::Kind::Ball) return 2.0 * body.radius();
  return 2.0 * body.lengths().maxCoeff();
}

BodyProfile circumball(const SmoothBody& body) {
  BodyProfile p;
  p.diameter = diameter(body);
  p.circumcenter = body.center();
  p.circumradius = body.kind() == SmoothBody::Kind::Ball
                       ? body.radius()
                       : body.lengths().maxCoeff();
  return p;
}

double jung_bound(int n, double diam) {
  return std::sqrt(n / (2.0 * (n + 1))) * diam;
}

std::vector<BoundaryPoint> sample_boundary(const SmoothBody& body, int m,
                                           std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sample_boundary: m must be >= 1");
  const int n = body.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Mat shape;
  Mat shape_inv;
  if (body.kind() == SmoothBody::Kind::Ellipsoid) {
    shape = body.shape_matrix();
    shape_inv = body.axes() * body.lengths().cwiseInverse().asDiagonal() *
                body.axes().transpose();
  }

  std::vector<BoundaryPoint> points;
  points.reserve(m);
  while (static_cast<int>(points.size()) < m) {
    Vec u(n);
    for (int i = 0; i < n; ++i) u(i) = gauss(rng);
    double len = u.norm();
    if (len < 1e-12) continue;
    u /= len;
    BoundaryPoint bp;
    if (body.kind() == SmoothBody::Kind::Ball) {
      bp.point = body.center() + body.radius() * u;
      bp.normal = u;
    } else {
      bp.point = body.center() + shape * u;
      Vec g = shape_inv * u;
      bp.normal = g / g.norm();
    }
    points.push_back(std::move(bp));
  }
  return points;
}

IlluminationTest illuminates(const Vec& x, const BoundaryPoint& bp) {
  IlluminationTest t;
  t.margin = bp.normal.dot(x - bp.point);
  t.illuminated = t.margin > 0.0;
  return t;
}

}  // namespace illum
