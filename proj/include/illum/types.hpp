// Shared scalar/matrix aliases and global tolerances.
#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace illum {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Relative tolerance for floating-point equality throughout the library.
inline constexpr double kRelTol = 1e-9;

/// Dimension cap for exhaustive enumeration (shortest vectors, HKZ).
/// Default 10; override with the ILLUM_ENUM_CAP environment variable.
int enumeration_cap();

/// Dimension cap for the strong theta-orthogonality check (all n! orderings).
inline constexpr int kStrongThetaCap = 8;

}  // namespace illum
