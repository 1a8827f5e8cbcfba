// Virtually rectangular lattices in U*C*B*Z^n normal form: construction,
// exact extraction of an axis-aligned orthogonal sublattice, and the
// illumination pipeline seeded with that orthogonal basis (defect 1).
#pragma once

#include <cstdint>
#include <optional>

#include "illum/illumination.hpp"
#include "illum/lattice.hpp"
#include "illum/types.hpp"

namespace illum {

struct RectangularForm {
  Vec c;    // diagonal of C, all entries nonzero
  IntMat b;  // nonsingular integer matrix, coprime entries in each row
  Mat u;    // orthogonal; identity when omitted

  /// Validates the invariants: det(B) != 0 (exact), row gcds 1,
  /// U orthogonal within 1e-9.
  static RectangularForm create(Vec c, IntMat b, std::optional<Mat> u = {});
};

/// Basis with columns U * C * (columns of B).
LatticeBasis construct(const RectangularForm& form);

struct OrthogonalSublattice {
  LatticeBasis basis;        // columns k_i * c_i * U e_i
  IntVec multipliers;        // k_i, minimal with k_i * B^{-1} e_i integral
  std::int64_t index;        // det(sublattice) / det(L), exact integer
  std::int64_t model_index;  // |det B|^{n-1}; reported for comparison
  double det;                // prod |k_i c_i|
};

/// Axis-aligned orthogonal sublattice with exact integer membership
/// witness (adjugate arithmetic).
OrthogonalSublattice orthogonal_sublattice(const RectangularForm& form);

/// Pipeline with the orthogonal sublattice basis as the generator set;
/// its defect is 1 and the Corollary-style closed form applies.
IlluminationResult illuminate_virt_rect(const RectangularForm& form,
                                        const SmoothBody& body,
                                        int samples = 10000,
                                        std::uint64_t seed = 1);

}  // namespace illum
