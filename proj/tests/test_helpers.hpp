// Shared generators and small oracles for the test suites.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "illum/lattice.hpp"
#include "illum/types.hpp"

namespace illum::testing {

inline LatticeBasis basis2(double a1x, double a1y, double a2x, double a2y) {
  Mat m(2, 2);
  m.col(0) << a1x, a1y;
  m.col(1) << a2x, a2y;
  return LatticeBasis::from_columns(m);
}

inline LatticeBasis hexagonal() {
  return basis2(1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0);
}

inline LatticeBasis identity_basis(int n) {
  return LatticeBasis::from_columns(Mat::Identity(n, n));
}

inline LatticeBasis random_integer_basis(int n, int bound,
                                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    Mat m(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = entry(rng);
    try {
      return LatticeBasis::from_columns(std::move(m));
    } catch (const std::exception&) {
      continue;
    }
  }
}

/// Random unimodular matrix built from bounded elementary column ops.
inline IntMat random_unimodular(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> pick(0, n - 1);
  IntMat u = IntMat::Identity(n, n);
  for (int step = 0; step < 4 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      if (coeff(rng) < 0) u.col(i) = -u.col(i);
      continue;
    }
    u.col(i) += static_cast<std::int64_t>(coeff(rng)) * u.col(j);
  }
  return u;
}

inline Mat random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  return q;
}

/// Brute-force minimal norm over coefficients in [-range, range]^n.
inline double brute_force_min_norm(const LatticeBasis& basis, int range) {
  const int n = basis.n();
  std::vector<int> x(n, -range);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    bool zero = true;
    for (int v : x) {
      if (v != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) {
      Vec v = Vec::Zero(n);
      for (int i = 0; i < n; ++i) v += double(x[i]) * basis.columns().col(i);
      best = std::min(best, v.norm());
    }
    int i = 0;
    while (i < n && x[i] == range) x[i++] = -range;
    if (i == n) break;
    ++x[i];
  }
  return best;
}

}  // namespace illum::testing
