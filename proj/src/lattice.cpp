#include "illum/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "illum/enumeration.hpp"
#include "illum/errors.hpp"
#include "illum/intexact.hpp"
#include "illum/reduction.hpp"

namespace illum {

int enumeration_cap() {
  if (const char* env = std::getenv("ILLUM_ENUM_CAP")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 10;
}

namespace {

void require_enumerable(int n) {
  if (n > enumeration_cap()) {
    throw DimensionTooLargeError("dimension " + std::to_string(n) +
                                 " exceeds enumeration cap " +
                                 std::to_string(enumeration_cap()));
  }
}

struct ShortestSearch {
  double min_norm = 0.0;
  std::vector<Vec> vectors;  // sign-normalized representatives
};

ShortestSearch enumerate_minimal(const LatticeBasis& basis, bool collect) {
  require_enumerable(basis.n());
  ReductionResult pre = lll_reduce(basis);
  const Mat& b = pre.reduced.columns();
  GramSchmidtData gs = gram_schmidt_columns(b);

  const bool exact = basis.integral() && pre.reduced.integral();
  IntMat bi;
  if (exact) bi = round_to_int(b);

  // Phase 1: shrink to the minimal squared norm. The shortest reduced
  // column is itself a lattice vector, so it seeds the bound.
  double best2 = std::pow(pre.reduced.min_column_norm(), 2);
  std::int64_t best2_int = 0;
  if (exact) {
    best2_int = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i < basis.n(); ++i)
      best2_int = std::min(best2_int, int_norm2(IntVec(bi.col(i))));
    best2 = static_cast<double>(best2_int);
  }
  double bound2 = best2 * (1.0 + 1e-12);
  enumerate_coeffs(gs, &bound2, [&](const IntVec& x, double n2) {
    if (exact) {
      std::int64_t v2 = int_norm2(IntVec(bi * x));
      if (v2 < best2_int) {
        best2_int = v2;
        best2 = static_cast<double>(v2);
        bound2 = best2 * (1.0 + 1e-12);
      }
    } else if (n2 < best2) {
      best2 = n2;
      bound2 = best2 * (1.0 + 1e-12);
    }
  });

  ShortestSearch out;
  out.min_norm = std::sqrt(best2);
  if (!collect) return out;

  // Phase 2: gather everything at the minimum (relative tolerance 1e-9;
  // exact integer comparison for integer lattices).
  double gather2 = best2 * (1.0 + 4e-9);
  std::vector<Vec> found;
  enumerate_coeffs(gs, &gather2, [&](const IntVec& x, double n2) {
    if (exact) {
      IntVec vi = bi * x;
      if (int_norm2(vi) != best2_int) return;
      found.push_back(normalize_sign(vi.cast<double>()));
    } else {
      if (std::sqrt(n2) > out.min_norm * (1.0 + 1e-9)) return;
      found.push_back(normalize_sign(Vec(b * x.cast<double>())));
    }
  });

  // Each +/- pair arrives twice under sign normalization; distinct
  // minimal vectors are at least ||L|| apart, so dedup is robust.
  double tol = 0.25 * out.min_norm;
  std::sort(found.begin(), found.end(),
            [&](const Vec& a, const Vec& c) { return lex_less(a, c, 1e-9 * (1.0 + out.min_norm)); });
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (out.vectors.empty() || (found[i] - out.vectors.back()).norm() > tol) {
      out.vectors.push_back(found[i]);
    }
  }
  return out;
}

WellRoundedVerdict wr_from_minimal(const MinimalVectors& mv, int n) {
  WellRoundedVerdict verdict;
  Mat witness(n, 0);
  for (const Vec& v : mv.reps) {
    Mat trial(n, witness.cols() + 1);
    trial << witness, v;
    Eigen::ColPivHouseholderQR<Mat> qr(trial);
    qr.setThreshold(1e-9);
    if (qr.rank() == trial.cols()) witness = trial;
    if (witness.cols() == n) break;
  }
  verdict.well_rounded = witness.cols() == n;
  if (verdict.well_rounded) verdict.witness = witness;
  return verdict;
}

}  // namespace

LatticeBasis LatticeBasis::from_columns(Mat columns, bool sort_by_norm) {
  if (columns.rows() == 0 || columns.rows() != columns.cols()) {
    throw ParseError("basis must be a nonempty square matrix");
  }
  if (!columns.allFinite()) throw ParseError("basis has non-finite entries");

  double norm_product = 1.0;
  for (Eigen::Index i = 0; i < columns.cols(); ++i)
    norm_product *= columns.col(i).norm();
  double det = columns.householderQr().absDeterminant();
  if (!(det > 1e-12 * norm_product)) {
    throw NearSingularError("basis columns are linearly dependent");
  }

  if (sort_by_norm) {
    std::vector<int> idx(columns.cols());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return columns.col(a).norm() < columns.col(b).norm();
    });
    Mat sorted(columns.rows(), columns.cols());
    for (std::size_t k = 0; k < idx.size(); ++k) sorted.col(k) = columns.col(idx[k]);
    columns = std::move(sorted);
  }
  bool nondecreasing = true;
  for (Eigen::Index i = 0; i + 1 < columns.cols(); ++i) {
    if (columns.col(i).norm() > columns.col(i + 1).norm() * (1.0 + 1e-12)) {
      nondecreasing = false;
      break;
    }
  }
  return LatticeBasis(std::move(columns), nondecreasing);
}

LatticeBasis LatticeBasis::sorted() const {
  return from_columns(columns_, true);
}

double LatticeBasis::min_column_norm() const {
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < columns_.cols(); ++i)
    m = std::min(m, columns_.col(i).norm());
  return m;
}

double LatticeBasis::max_column_norm() const {
  double m = 0.0;
  for (Eigen::Index i = 0; i < columns_.cols(); ++i)
    m = std::max(m, columns_.col(i).norm());
  return m;
}

bool LatticeBasis::integral(double tol) const {
  return is_integral(columns_, tol);
}

GramSchmidtData gram_schmidt(const LatticeBasis& basis) {
  return gram_schmidt_columns(basis.columns());
}

double determinant(const LatticeBasis& basis) {
  return basis.columns().householderQr().absDeterminant();
}

double minimal_norm(const LatticeBasis& basis) {
  return enumerate_minimal(basis, false).min_norm;
}

MinimalVectors minimal_vectors(const LatticeBasis& basis) {
  ShortestSearch search = enumerate_minimal(basis, true);
  MinimalVectors mv;
  mv.reps = std::move(search.vectors);
  mv.full_count = 2 * static_cast<int>(mv.reps.size());
  mv.norm = search.min_norm;
  return mv;
}

WellRoundedVerdict is_well_rounded(const LatticeBasis& basis) {
  return wr_from_minimal(minimal_vectors(basis), basis.n());
}

double orthogonality_defect(const LatticeBasis& basis) {
  double norm_product = 1.0;
  for (int i = 0; i < basis.n(); ++i) norm_product *= basis.column_norm(i);
  return norm_product / determinant(basis);
}

Vec angle_sequence(const LatticeBasis& ordered_basis) {
  GramSchmidtData gs = gram_schmidt(ordered_basis);
  const int n = ordered_basis.n();
  Vec angles(std::max(0, n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    double ratio = gs.bstar_norm(i + 1) / ordered_basis.column_norm(i + 1);
    angles(i) = std::asin(std::clamp(ratio, 0.0, 1.0));
  }
  return angles;
}

ThetaVerdict theta_orthogonality(const LatticeBasis& basis, double theta,
                                 bool strong) {
  if (!(theta > 0.0 && theta <= std::numbers::pi / 2 + 1e-12)) {
    throw Error("theta must lie in (0, pi/2]");
  }
  ThetaVerdict verdict;
  verdict.theta = theta;
  Vec angles = angle_sequence(basis);
  verdict.weak = (angles.size() == 0) || (angles.minCoeff() >= theta - 1e-9);

  if (strong) {
    const int n = basis.n();
    if (n > kStrongThetaCap) {
      throw DimensionTooLargeError("strong theta-orthogonality capped at n <= " +
                                   std::to_string(kStrongThetaCap));
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    bool all_ok = true;
    do {
      Mat permuted(n, n);
      for (int k = 0; k < n; ++k) permuted.col(k) = basis.columns().col(order[k]);
      Vec a = angle_sequence(LatticeBasis::from_columns(permuted));
      if (a.size() > 0 && a.minCoeff() < theta - 1e-9) {
        all_ok = false;
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    verdict.strong = all_ok;
  }
  return verdict;
}

bool nearly_orthogonal(const LatticeBasis& basis) {
  return theta_orthogonality(basis, std::numbers::pi / 3, false).weak;
}

LatticeProfile profile(const LatticeBasis& basis) {
  LatticeProfile p;
  p.det = determinant(basis);
  p.sigma = minimal_vectors(basis);
  p.min_norm = p.sigma.norm;
  p.defect = orthogonality_defect(basis);
  WellRoundedVerdict wr = wr_from_minimal(p.sigma, basis.n());
  p.well_rounded = wr.well_rounded;
  p.wr_witness = std::move(wr.witness);
  p.angles = angle_sequence(basis);
  p.weakly_pi3_orthogonal = nearly_orthogonal(basis);
  return p;
}

}  // namespace illum
