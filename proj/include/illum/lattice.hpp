// Lattice bases and their enumerated invariants: determinant, minimal
// norm and minimal vectors, orthogonality defect, well-roundedness,
// Gram-Schmidt angle sequences and theta-orthogonality verdicts.
#pragma once

#include <optional>
#include <vector>

#include "illum/types.hpp"

namespace illum {

/// Ordered collection of n linearly independent real n-vectors (the
/// columns of the basis matrix).
class LatticeBasis {
 public:
  /// Validates linear independence: |det| must exceed 1e-12 times the
  /// product of column norms. Throws NearSingularError otherwise.
  static LatticeBasis from_columns(Mat columns, bool sort_by_norm = false);

  const Mat& columns() const { return columns_; }
  int n() const { return static_cast<int>(columns_.cols()); }
  bool sorted_by_norm() const { return sorted_; }

  /// Copy with columns stably reordered by nondecreasing norm.
  LatticeBasis sorted() const;

  double column_norm(int i) const { return columns_.col(i).norm(); }
  double min_column_norm() const;
  double max_column_norm() const;

  /// All entries within tol of integers.
  bool integral(double tol = 1e-9) const;

 private:
  LatticeBasis(Mat columns, bool sorted)
      : columns_(std::move(columns)), sorted_(sorted) {}
  Mat columns_;
  bool sorted_;
};

/// Unnormalized Gram-Schmidt data: orthogonal component norms and
/// projection coefficients mu(i,j) = <a_i, b*_j>/<b*_j, b*_j> for j < i.
struct GramSchmidtData {
  Vec bstar_norm;  // ||b*_i||
  Mat mu;          // strictly lower triangular
};

GramSchmidtData gram_schmidt(const LatticeBasis& basis);

/// Delta = |det(A)|.
double determinant(const LatticeBasis& basis);

struct MinimalVectors {
  std::vector<Vec> reps;  // one representative per +/- pair, first
                          // nonzero coordinate positive, sorted lex
  int full_count = 0;     // including negatives
  double norm = 0.0;      // common norm = ||L||
};

/// ||L||, by exhaustive enumeration after LLL preprocessing.
/// Exact for integer bases. Throws DimensionTooLargeError above the cap.
double minimal_norm(const LatticeBasis& basis);

/// Sigma(L): all lattice vectors of norm ||L||.
MinimalVectors minimal_vectors(const LatticeBasis& basis);

struct WellRoundedVerdict {
  bool well_rounded = false;
  std::optional<Mat> witness;  // n linearly independent minimal vectors
};

WellRoundedVerdict is_well_rounded(const LatticeBasis& basis);

/// delta(A) = (prod ||a_i||) / |det A| >= 1, with equality iff orthogonal.
double orthogonality_defect(const LatticeBasis& basis);

/// theta_i = asin(||b*_{i+1}|| / ||a_{i+1}||), i = 1..n-1, in (0, pi/2].
Vec angle_sequence(const LatticeBasis& ordered_basis);

struct ThetaVerdict {
  double theta = 0.0;
  bool weak = false;                 // all theta_i >= theta, given order
  std::optional<bool> strong;        // same for every reordering
};

/// Weak check for the given ordering; strong additionally loops over all
/// n! reorderings (n <= 8). The inequality direction follows the usage
/// in the near-orthogonality bound: sin(theta_i) >= sin(theta).
ThetaVerdict theta_orthogonality(const LatticeBasis& basis, double theta,
                                 bool strong = false);

/// Convenience predicate: weakly pi/3-orthogonal.
bool nearly_orthogonal(const LatticeBasis& basis);

/// Computed invariants of a basis and of the lattice it generates.
struct LatticeProfile {
  double det = 0.0;
  double min_norm = 0.0;
  MinimalVectors sigma;
  double defect = 1.0;
  bool well_rounded = false;
  std::optional<Mat> wr_witness;
  Vec angles;                        // of the basis as given
  bool weakly_pi3_orthogonal = false;
};

LatticeProfile profile(const LatticeBasis& basis);

}  // namespace illum
