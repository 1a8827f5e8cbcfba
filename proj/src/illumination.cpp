#include "illum/illumination.hpp"

#include <cmath>
#include <limits>

#include "illum/errors.hpp"
#include "illum/reduction.hpp"

namespace illum {

Vec place_body(const SmoothBody& body, const SimplexGeometry& simplex) {
  BodyProfile profile = circumball(body);
  double slack = simplex.inradius - profile.circumradius;
  if (!(slack > 1e-12 * (1.0 + profile.circumradius))) {
    throw DoesNotFitError("body circumball does not fit inside the simplex");
  }
  return simplex.incenter - profile.circumcenter;
}

Certificate verify_illumination(const std::vector<Vec>& s,
                                const SmoothBody& placed_body, int m,
                                std::uint64_t seed) {
  Certificate cert;
  cert.samples = m;
  cert.seed = seed;
  cert.min_margin = std::numeric_limits<double>::infinity();
  for (const BoundaryPoint& bp : sample_boundary(placed_body, m, seed)) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec& x : s) best = std::max(best, illuminates(x, bp).margin);
    if (best <= 0.0) {
      cert.verified = false;
      cert.min_margin = best;
      cert.counterexample = bp;
      return cert;
    }
    cert.min_margin = std::min(cert.min_margin, best);
  }
  cert.verified = true;
  return cert;
}

DistanceEstimate illumination_distance(const std::vector<Vec>& s,
                                       const SmoothBody& placed_body,
                                       int samples, std::uint64_t seed) {
  DistanceEstimate d;
  BodyProfile profile = circumball(placed_body);
  double max_center = 0.0;
  for (const Vec& x : s)
    max_center = std::max(max_center, (x - profile.circumcenter).norm());

  if (placed_body.kind() == SmoothBody::Kind::Ball) {
    d.upper = d.lower = max_center + placed_body.radius();
    d.exact = true;
    return d;
  }
  d.upper = max_center + profile.circumradius;
  d.lower = 0.0;
  for (const BoundaryPoint& bp : sample_boundary(placed_body, samples, seed)) {
    for (const Vec& x : s) d.lower = std::max(d.lower, (x - bp.point).norm());
  }
  d.exact = false;
  return d;
}

namespace {

std::vector<double> facet_clearances(const SimplexGeometry& geom,
                                     const Vec& center, double radius) {
  std::vector<double> out;
  out.reserve(geom.facets.size());
  for (const Facet& f : geom.facets) {
    out.push_back(f.offset - f.normal.dot(center) - radius);
  }
  return out;
}

}  // namespace

IlluminationResult illuminate_lattice(const LatticeBasis& lattice,
                                      const SmoothBody& body, int samples,
                                      std::uint64_t seed,
                                      std::optional<long> t_override) {
  const int n = lattice.n();
  if (body.dim() != n) throw ParseError("body and lattice dimension mismatch");

  ReductionResult hkz = hkz_reduce(lattice);
  LatticeBasis a = hkz.reduced.sorted();
  LatticeProfile prof = profile(a);

  double min_a = a.min_column_norm();
  if (std::abs(min_a - prof.min_norm) > 1e-9 * (1.0 + prof.min_norm)) {
    throw Error("HKZ first vector does not attain the minimal norm");
  }
  double delta = prof.defect;
  double det = prof.det;

  BodyProfile bp = circumball(body);
  long t = t_star(n, bp.circumradius, delta, min_a);
  long t_min = minimal_t_oracle(a, bp.circumradius);
  if (t_override) {
    if (*t_override < t_min) {
      throw DoesNotFitError("t override below the minimal sufficient scale");
    }
    t = *t_override;
  }

  LatticeSimplex simplex = build_simplex(a, t);
  Vec translation = place_body(body, simplex.geom);
  SmoothBody placed = body.translated(translation);

  IlluminationResult res;
  res.construction = RunSummary::Construction::Lattice;
  res.n = n;
  res.t = t;
  res.t_oracle = t_min;
  res.vertices = simplex.geom.vertices;
  res.translation = translation;
  res.clearances =
      facet_clearances(simplex.geom, simplex.geom.incenter, bp.circumradius);
  res.certificate = verify_illumination(res.vertices, placed, samples, seed);
  res.distance =
      illumination_distance(res.vertices, placed, samples, seed + 1);
  res.profile = prof;
  res.has_profile = true;

  res.intermediate_bound = 2.0 * static_cast<double>(t) * delta * det /
                           std::pow(min_a, n - 1);
  res.intermediate_ok = res.intermediate_bound >= res.distance.upper - 1e-9;

  RunSummary run;
  run.construction = RunSummary::Construction::Lattice;
  run.n = n;
  run.body_diameter = bp.diameter;
  run.body_circumradius = bp.circumradius;
  run.measured_d = res.distance.upper;
  run.det_lattice = det;
  run.min_norm_lattice = prof.min_norm;
  run.well_rounded = prof.well_rounded;
  run.nearly_orth = prof.weakly_pi3_orthogonal;
  run.delta_basis = delta;
  run.det_basis = det;
  run.min_basis = min_a;
  res.summary = run;
  res.ladder = ::illum::compare_report(run);
  return res;
}

IlluminationResult illuminate_regular(const SmoothBody& body, double epsilon,
                                      int samples, std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const int n = body.dim();
  BodyProfile bp = circumball(body);

  double side = bp.circumradius * std::sqrt(2.0 * n * (n + 1)) +
                epsilon * std::sqrt(2.0 * n / (n + 1.0));
  std::vector<Vec> pts = regular_simplex(n, side);
  SimplexGeometry geom = simplex_from_points(pts);

  Vec translation = place_body(body, geom);
  SmoothBody placed = body.translated(translation);

  IlluminationResult res;
  res.construction = RunSummary::Construction::Regular;
  res.n = n;
  res.side = side;
  res.epsilon = epsilon;
  res.vertices = geom.vertices;
  res.translation = translation;
  res.clearances = facet_clearances(geom, geom.incenter, bp.circumradius);
  res.certificate = verify_illumination(res.vertices, placed, samples, seed);
  res.distance =
      illumination_distance(res.vertices, placed, samples, seed + 1);

  RunSummary run;
  run.construction = RunSummary::Construction::Regular;
  run.n = n;
  run.body_diameter = bp.diameter;
  run.body_circumradius = bp.circumradius;
  run.measured_d = res.distance.upper;
  run.epsilon = epsilon;
  res.summary = run;
  res.ladder = ::illum::compare_report(run);
  return res;
}

BoundLadder compare_report(const IlluminationResult& result,
                           const LatticeProfile& prof) {
  RunSummary run = result.summary;
  run.det_lattice = prof.det;
  run.min_norm_lattice = prof.min_norm;
  run.well_rounded = prof.well_rounded;
  run.nearly_orth = prof.weakly_pi3_orthogonal;
  return ::illum::compare_report(run);
}

}  // namespace illum
