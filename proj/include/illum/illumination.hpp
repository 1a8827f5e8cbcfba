// End-to-end constructions: place a body inside a simplex, verify that the
// vertex set illuminates it, measure the illumination distance, and attach
// the ladder of applicable bounds.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "illum/bodies.hpp"
#include "illum/bounds.hpp"
#include "illum/lattice.hpp"
#include "illum/simplex.hpp"
#include "illum/types.hpp"

namespace illum {

struct Certificate {
  bool verified = false;
  double min_margin = 0.0;  // over samples, of the best vertex margin
  std::optional<BoundaryPoint> counterexample;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Translation moving the body's circumcenter to the simplex incenter.
/// Throws DoesNotFitError unless the inradius strictly exceeds the
/// circumradius (with a 1e-12-scale safety margin).
Vec place_body(const SmoothBody& body, const SimplexGeometry& simplex);

/// Samples m boundary points of the placed body; each must be strictly
/// illuminated by some point of S. A failing sample is returned as a
/// counterexample, not an error.
Certificate verify_illumination(const std::vector<Vec>& s,
                                const SmoothBody& placed_body, int m,
                                std::uint64_t seed);

struct DistanceEstimate {
  double upper = 0.0;
  double lower = 0.0;
  bool exact = false;  // balls: upper == lower == d(S, K)
};

/// Ball: exact max_x ||x - center|| + R. Ellipsoid: certified upper bound
/// through the circumball plus a sampled lower bound.
DistanceEstimate illumination_distance(const std::vector<Vec>& s,
                                       const SmoothBody& placed_body,
                                       int samples = 2048,
                                       std::uint64_t seed = 99);

struct IlluminationResult {
  RunSummary::Construction construction = RunSummary::Construction::Lattice;
  int n = 0;
  long t = 0;         // simplex scale (lattice constructions)
  long t_oracle = 0;  // minimal sufficient scale
  double side = 0.0;  // regular-simplex side length
  double epsilon = 0.0;
  std::vector<Vec> vertices;  // the illuminating set S
  Vec translation;
  std::vector<double> clearances;  // per facet, incenter distance minus R
  DistanceEstimate distance;
  Certificate certificate;
  double intermediate_bound = 0.0;  // 2 t delta Delta / minA^{n-1}
  bool intermediate_ok = true;
  LatticeProfile profile;  // of the construction basis (lattice runs)
  bool has_profile = false;
  BoundLadder ladder;
  RunSummary summary;
};

/// Full pipeline: HKZ-reduce, scale by t*, place, verify, measure, and
/// compare against every applicable closed-form bound.
IlluminationResult illuminate_lattice(const LatticeBasis& lattice,
                                      const SmoothBody& body,
                                      int samples = 10000,
                                      std::uint64_t seed = 1,
                                      std::optional<long> t_override = {});

/// Regular-simplex construction at side R*sqrt(2n(n+1)) + eps-controlled
/// slack; only the diameter-based bounds apply.
IlluminationResult illuminate_regular(const SmoothBody& body, double epsilon,
                                      int samples = 10000,
                                      std::uint64_t seed = 1);

/// Ladder assembly from a finished result (spec-shaped convenience).
BoundLadder compare_report(const IlluminationResult& result,
                           const LatticeProfile& prof);

}  // namespace illum
