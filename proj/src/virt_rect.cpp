#include "illum/virt_rect.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "illum/errors.hpp"
#include "illum/intexact.hpp"
#include "illum/reduction.hpp"

namespace illum {

RectangularForm RectangularForm::create(Vec c, IntMat b,
                                        std::optional<Mat> u) {
  const auto n = c.size();
  if (b.rows() != n || b.cols() != n) {
    throw ParseError("rectangular form: B must be n x n");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (c(i) == 0.0) throw ParseError("rectangular form: diagonal entries must be nonzero");
  }
  if (det_int(b) == 0) {
    throw NearSingularError("rectangular form: B is singular");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    std::int64_t g = 0;
    for (Eigen::Index j = 0; j < n; ++j) g = std::gcd(g, b(i, j));
    if (g != 1) {
      throw CoprimalityError("rectangular form: row " + std::to_string(i) +
                             " of B has gcd " + std::to_string(g));
    }
  }
  Mat uu = u.value_or(Mat::Identity(n, n));
  if (uu.rows() != n || uu.cols() != n ||
      (uu.transpose() * uu - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9) {
    throw ParseError("rectangular form: U must be orthogonal");
  }
  return RectangularForm{std::move(c), std::move(b), std::move(uu)};
}

LatticeBasis construct(const RectangularForm& form) {
  Mat columns = form.u * form.c.asDiagonal() * form.b.cast<double>();
  return LatticeBasis::from_columns(std::move(columns));
}

OrthogonalSublattice orthogonal_sublattice(const RectangularForm& form) {
  const auto n = form.c.size();
  IntMat adj = adjugate_int(form.b);
  std::int64_t det_b = det_int(form.b);
  std::int64_t abs_det = std::abs(det_b);

  OrthogonalSublattice sub{construct(form), IntVec(n), 0, 0, 1.0};
  Mat columns(n, n);
  __int128 k_product = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    std::int64_t col_gcd = 0;
    for (Eigen::Index j = 0; j < n; ++j) col_gcd = std::gcd(col_gcd, adj(j, i));
    std::int64_t k = abs_det / std::gcd(abs_det, col_gcd);
    // Membership witness: k * B^{-1} e_i == k * adj e_i / det must be integral.
    for (Eigen::Index j = 0; j < n; ++j) {
      if ((static_cast<__int128>(k) * adj(j, i)) % det_b != 0) {
        throw Error("orthogonal sublattice multiplier is not integral");
      }
    }
    sub.multipliers(i) = k;
    k_product *= k;
    columns.col(i) = static_cast<double>(k) * form.c(i) * form.u.col(i);
    sub.det *= std::abs(static_cast<double>(k) * form.c(i));
  }
  if (k_product % abs_det != 0) {
    throw Error("orthogonal sublattice index is not integral");
  }
  sub.index = static_cast<std::int64_t>(k_product / abs_det);
  __int128 model = 1;
  for (Eigen::Index i = 0; i + 1 < n; ++i) model *= abs_det;
  sub.model_index = static_cast<std::int64_t>(model);
  sub.basis = LatticeBasis::from_columns(std::move(columns), /*sort=*/true);
  return sub;
}

IlluminationResult illuminate_virt_rect(const RectangularForm& form,
                                        const SmoothBody& body, int samples,
                                        std::uint64_t seed) {
  const int n = static_cast<int>(form.c.size());
  if (body.dim() != n) throw ParseError("body and form dimension mismatch");

  LatticeBasis full = construct(form);
  OrthogonalSublattice sub = orthogonal_sublattice(form);
  const LatticeBasis& a = sub.basis;

  double delta = orthogonality_defect(a);
  if (std::abs(delta - 1.0) > 1e-12) {
    throw Error("orthogonal sublattice basis has defect away from 1");
  }
  double det_a = determinant(a);
  double min_a = a.min_column_norm();

  // Invariants of the full lattice feed the closed-form bound.
  LatticeProfile full_prof = profile(hkz_reduce(full).reduced.sorted());
  if (sub.basis.min_column_norm() < full_prof.min_norm * (1.0 - 1e-9)) {
    throw Error("sublattice minimal norm fell below the lattice minimal norm");
  }

  BodyProfile bp = circumball(body);
  long t = t_star(n, bp.circumradius, 1.0, min_a);
  long t_min = minimal_t_oracle(a, bp.circumradius);

  LatticeSimplex simplex = build_simplex(a, t);
  Vec translation = place_body(body, simplex.geom);
  SmoothBody placed = body.translated(translation);

  IlluminationResult res;
  res.construction = RunSummary::Construction::VirtRect;
  res.n = n;
  res.t = t;
  res.t_oracle = t_min;
  res.vertices = simplex.geom.vertices;
  res.translation = translation;
  for (const Facet& f : simplex.geom.facets) {
    res.clearances.push_back(f.offset - f.normal.dot(simplex.geom.incenter) -
                             bp.circumradius);
  }
  res.certificate = verify_illumination(res.vertices, placed, samples, seed);
  res.distance =
      illumination_distance(res.vertices, placed, samples, seed + 1);
  res.profile = full_prof;
  res.has_profile = true;
  res.intermediate_bound = 2.0 * static_cast<double>(t) * delta * det_a /
                           std::pow(min_a, n - 1);
  res.intermediate_ok = res.intermediate_bound >= res.distance.upper - 1e-9;

  double c_abs = 1.0;
  for (Eigen::Index i = 0; i < form.c.size(); ++i) c_abs *= std::abs(form.c(i));

  RunSummary run;
  run.construction = RunSummary::Construction::VirtRect;
  run.n = n;
  run.body_diameter = bp.diameter;
  run.body_circumradius = bp.circumradius;
  run.measured_d = res.distance.upper;
  run.det_lattice = full_prof.det;
  run.min_norm_lattice = full_prof.min_norm;
  run.well_rounded = full_prof.well_rounded;
  run.nearly_orth = full_prof.weakly_pi3_orthogonal;
  run.delta_basis = delta;
  run.det_basis = det_a;
  run.min_basis = min_a;
  run.c_abs = c_abs;
  res.summary = run;
  res.ladder = compare_report(run);
  return res;
}

}  // namespace illum
