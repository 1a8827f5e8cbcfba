// LLL and HKZ basis reduction with exact unimodular transform tracking.
#pragma once

#include "illum/lattice.hpp"
#include "illum/types.hpp"

namespace illum {

enum class ReductionAlgo { LLL, HKZ };

struct ReductionResult {
  LatticeBasis reduced;
  IntMat transform;  // reduced columns == original columns * transform
  ReductionAlgo algo = ReductionAlgo::LLL;
  double defect = 1.0;      // orthogonality defect of the reduced basis
  double first_norm = 0.0;  // norm of the first reduced vector
};

/// Size-reduction (|mu| <= 1/2) plus the Lovasz condition at delta_param.
/// Requires 1/4 < delta_param < 1.
ReductionResult lll_reduce(const LatticeBasis& basis,
                           double delta_param = 0.99);

/// Hermite-Korkin-Zolotarev reduction: first vector attains ||L|| and each
/// projected basis is recursively reduced. Dimension-capped.
ReductionResult hkz_reduce(const LatticeBasis& basis);

/// (4/3)^{n(n-1)/2}.
double hermite_defect_bound(int n);

/// defect(reduced) <= hermite_defect_bound(n) + 1e-9.
bool hermite_defect_check(const ReductionResult& result);

}  // namespace illum
