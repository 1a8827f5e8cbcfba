#include "illum/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "illum/errors.hpp"

namespace illum {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

Facet facet_from(const std::vector<Vec>& pts, int opposite) {
  const int n = static_cast<int>(pts.size()) - 1;
  // Facet vertices: all points except pts[opposite].
  std::vector<int> on_facet;
  for (int i = 0; i <= n; ++i)
    if (i != opposite) on_facet.push_back(i);

  const Vec& w0 = pts[on_facet[0]];
  Mat dirs(n, n - 1);
  for (int k = 1; k < n; ++k) dirs.col(k - 1) = pts[on_facet[k]] - w0;

  Facet f;
  f.opposite = opposite;
  if (n == 1) {
    f.normal = Vec::Ones(1);
    f.area = 1.0;  // 0-dimensional facet (a point)
  } else {
    Eigen::HouseholderQR<Mat> qr(dirs);
    Mat q = qr.householderQ();
    f.normal = q.col(n - 1);
    f.area = std::sqrt((dirs.transpose() * dirs).determinant()) / factorial(n - 1);
  }
  f.offset = f.normal.dot(w0);
  // Outward: the opposite vertex lies strictly on the interior side.
  if (f.normal.dot(pts[opposite]) > f.offset) {
    f.normal = -f.normal;
    f.offset = -f.offset;
  }
  return f;
}

}  // namespace

double SimplexGeometry::clearance(const Vec& p) const {
  double c = std::numeric_limits<double>::infinity();
  for (const Facet& f : facets) c = std::min(c, f.offset - f.normal.dot(p));
  return c;
}

double SimplexGeometry::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      d = std::max(d, (vertices[i] - vertices[j]).norm());
  return d;
}

SimplexGeometry simplex_from_points(const std::vector<Vec>& points) {
  const int n = static_cast<int>(points.size()) - 1;
  if (n < 1) throw std::invalid_argument("simplex needs at least 2 points");
  for (const Vec& p : points) {
    if (p.size() != n) throw std::invalid_argument("simplex point dimension mismatch");
  }
  SimplexGeometry s;
  s.vertices = points;

  Mat edges(n, n);
  for (int i = 1; i <= n; ++i) edges.col(i - 1) = points[i] - points[0];
  s.volume = edges.householderQr().absDeterminant() / factorial(n);
  if (s.volume <= 0.0) throw NearSingularError("degenerate simplex");

  s.facets.reserve(n + 1);
  for (int i = 0; i <= n; ++i) s.facets.push_back(facet_from(points, i));
  s.surface_area = 0.0;
  for (const Facet& f : s.facets) s.surface_area += f.area;

  // Incenter: facet areas weight their opposite vertices.
  s.incenter = Vec::Zero(n);
  for (const Facet& f : s.facets) s.incenter += f.area * points[f.opposite];
  s.incenter /= s.surface_area;
  s.inradius = n * s.volume / s.surface_area;
  return s;
}

LatticeSimplex build_simplex(const LatticeBasis& basis, long t) {
  if (t < 1) throw std::invalid_argument("simplex scale t must be >= 1");
  const int n = basis.n();
  std::vector<Vec> pts;
  pts.reserve(n + 1);
  pts.push_back(Vec::Zero(n));
  for (int i = 0; i < n; ++i)
    pts.push_back(static_cast<double>(t) * basis.columns().col(i));
  return LatticeSimplex{basis, t, simplex_from_points(pts)};
}

double scale_constant(int n) {
  return n * (n + std::ldexp(1.0, n - 1));
}

double inradius_lower_bound(const LatticeBasis& basis, long t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  return static_cast<double>(t) * basis.min_column_norm() /
         (scale_constant(basis.n()) * orthogonality_defect(basis));
}

long t_star(int n, double circumradius, double delta, double min_norm) {
  if (!(circumradius > 0.0) || !(delta >= 1.0 - 1e-12) || !(min_norm > 0.0)) {
    throw std::invalid_argument("t_star: arguments must be positive, delta >= 1");
  }
  double value = scale_constant(n) * circumradius * delta / min_norm + 1.0;
  return static_cast<long>(std::floor(value));
}

long minimal_t_oracle(const LatticeBasis& basis, double circumradius) {
  if (!(circumradius > 0.0)) throw std::invalid_argument("R must be positive");
  double r1 = build_simplex(basis, 1).geom.inradius;
  long t = static_cast<long>(std::floor(circumradius / r1)) + 1;
  // Facet-clearance recheck at the candidate scale: r(t) = t * r(1) is
  // exact, but guard against fp edges near the threshold.
  while (true) {
    LatticeSimplex s = build_simplex(basis, t);
    if (s.geom.clearance(s.geom.incenter) > circumradius) break;
    ++t;
  }
  return t;
}

std::vector<Vec> regular_simplex(int n, double side) {
  if (n < 1) throw std::invalid_argument("regular_simplex: n must be >= 1");
  if (!(side > 0.0)) throw std::invalid_argument("regular_simplex: side must be positive");
  // Vertices e_i of R^{n+1} lie at pairwise distance sqrt(2) in the
  // hyperplane orthogonal to (1,...,1); map them down isometrically.
  Vec ones = Vec::Ones(n + 1);
  Mat ones_col = ones;
  Eigen::HouseholderQR<Mat> qr(ones_col);
  Mat q = qr.householderQ();  // columns 1..n span the hyperplane
  Mat frame = q.rightCols(n);

  std::vector<Vec> pts;
  pts.reserve(n + 1);
  double scale = side / std::sqrt(2.0);
  Vec centroid = ones / (n + 1.0);
  for (int i = 0; i <= n; ++i) {
    Vec e = Vec::Zero(n + 1);
    e(i) = 1.0;
    pts.push_back(scale * (frame.transpose() * (e - centroid)));
  }
  return pts;
}

}  // namespace illum
