#include "illum/enumeration.hpp"

#include <cmath>
#include <limits>

#include "illum/errors.hpp"

namespace illum {

std::int64_t int_norm2(const IntVec& v) {
  __int128 acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    acc += static_cast<__int128>(v(i)) * v(i);
  if (acc > std::numeric_limits<std::int64_t>::max())
    throw Error("integer norm overflow");
  return static_cast<std::int64_t>(acc);
}

Vec normalize_sign(const Vec& v) {
  double scale = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9 * scale) return v(i) > 0 ? v : Vec(-v);
  }
  return v;
}

bool lex_less(const Vec& a, const Vec& b, double tol) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i) - tol) return true;
    if (a(i) > b(i) + tol) return false;
  }
  return false;
}

GramSchmidtData gram_schmidt_columns(const Mat& columns) {
  const auto n = columns.cols();
  Mat bstar = columns;
  Mat mu = Mat::Zero(n, n);
  Vec norm2(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      mu(i, j) = columns.col(i).dot(bstar.col(j)) / norm2(j);
      bstar.col(i) -= mu(i, j) * bstar.col(j);
    }
    norm2(i) = bstar.col(i).squaredNorm();
    if (std::sqrt(norm2(i)) < 1e-12 * columns.col(i).norm()) {
      throw NearSingularError("gram_schmidt: orthogonal component vanished");
    }
  }
  GramSchmidtData out;
  out.bstar_norm = norm2.array().sqrt();
  out.mu = mu;
  return out;
}

void enumerate_coeffs(const GramSchmidtData& gs, double* bound2,
                      const std::function<void(const IntVec&, double)>& visit) {
  const int n = static_cast<int>(gs.bstar_norm.size());
  const Vec bstar2 = gs.bstar_norm.array().square();
  IntVec x = IntVec::Zero(n);

  // Depth-first from the last coordinate; rho accumulates the squared
  // norm contribution of levels > i.
  std::function<void(int, double)> descend = [&](int i, double rho) {
    double cap = *bound2 * (1.0 + 1e-12);
    double rem = cap - rho;
    if (rem < 0.0) return;
    double center = 0.0;
    for (int j = i + 1; j < n; ++j) center -= gs.mu(j, i) * double(x(j));
    double half = std::sqrt(rem / bstar2(i));
    auto lo = static_cast<long long>(std::ceil(center - half - 1e-9));
    auto hi = static_cast<long long>(std::floor(center + half + 1e-9));
    for (long long xi = lo; xi <= hi; ++xi) {
      double d = double(xi) - center;
      double rho_i = rho + d * d * bstar2(i);
      if (rho_i > *bound2 * (1.0 + 1e-12)) continue;
      x(i) = xi;
      if (i == 0) {
        if (!x.isZero()) visit(x, rho_i);
      } else {
        descend(i - 1, rho_i);
      }
    }
    x(i) = 0;
  };
  descend(n - 1, 0.0);
}

}  // namespace illum
