// Exact integer linear algebra helpers (determinants, adjugates,
// unimodular completions) used by reduction and virt_rect.
#pragma once

#include <cstdint>

#include "illum/types.hpp"

namespace illum {

struct ExtGcd {
  std::int64_t g;  // gcd >= 0
  std::int64_t u;
  std::int64_t v;  // u*a + v*b == g
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

/// Exact determinant via fraction-free (Bareiss) elimination.
/// Throws Error on intermediate overflow.
std::int64_t det_int(const IntMat& m);

/// Adjugate matrix: adj(m) * m == det(m) * I, all entries exact.
IntMat adjugate_int(const IntMat& m);

/// Unimodular matrix whose first column is the primitive vector x
/// (gcd of entries must be 1). det == +/-1 exactly.
IntMat unimodular_completion(const IntVec& x);

/// True when every entry of m is within tol of an integer.
bool is_integral(const Mat& m, double tol = 1e-9);

/// Entrywise nearest-integer matrix.
IntMat round_to_int(const Mat& m);

}  // namespace illum
