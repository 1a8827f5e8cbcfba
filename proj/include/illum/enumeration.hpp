// Shared Fincke-Pohst coefficient enumeration over Gram-Schmidt data.
// Plumbing for minimal-vector search and HKZ reduction.
#pragma once

#include <functional>

#include "illum/lattice.hpp"
#include "illum/types.hpp"

namespace illum {

/// Gram-Schmidt of raw columns; throws NearSingularError when an
/// orthogonal component collapses below 1e-12 of its column norm.
GramSchmidtData gram_schmidt_columns(const Mat& columns);

/// Visits every nonzero integer coefficient vector x whose lattice vector
/// has squared norm <= *bound2 (plus a relative fp guard). The visitor may
/// shrink *bound2 to prune the remaining search. Deterministic order.
void enumerate_coeffs(const GramSchmidtData& gs, double* bound2,
                      const std::function<void(const IntVec&, double)>& visit);

/// Exact squared norm of an integer vector; throws on int64 overflow.
std::int64_t int_norm2(const IntVec& v);

/// First significant coordinate made positive.
Vec normalize_sign(const Vec& v);

/// Coordinatewise comparison with tolerance.
bool lex_less(const Vec& a, const Vec& b, double tol);

}  // namespace illum
