#include "illum/intexact.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "illum/errors.hpp"

namespace illum {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(std::string("integer overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  // Invariant: u*a0 + v*b0 == r for each remainder r in the chain.
  std::int64_t old_r = a, r = b;
  std::int64_t old_u = 1, u = 0;
  std::int64_t old_v = 0, v = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * u;
    old_u = u;
    u = t;
    t = old_v - q * v;
    old_v = v;
    v = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

std::int64_t det_int(const IntMat& m) {
  const auto n = m.rows();
  if (n != m.cols()) throw Error("det_int: matrix not square");
  if (n == 0) return 1;

  Eigen::Matrix<i128, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);

  // Bareiss: every division below is exact.
  i128 prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return narrow(sign * a(n - 1, n - 1), "det_int");
}

IntMat adjugate_int(const IntMat& m) {
  const auto n = m.rows();
  if (n != m.cols()) throw Error("adjugate_int: matrix not square");
  IntMat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMat minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index r = 0;
      for (Eigen::Index ii = 0; ii < n; ++ii) {
        if (ii == i) continue;
        Eigen::Index c = 0;
        for (Eigen::Index jj = 0; jj < n; ++jj) {
          if (jj == j) continue;
          minor(r, c) = m(ii, jj);
          ++c;
        }
        ++r;
      }
      std::int64_t cof = det_int(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

IntMat unimodular_completion(const IntVec& x) {
  const auto n = x.size();
  IntMat u = IntMat::Identity(n, n);
  IntVec w = x;
  // Row-reduce w to (g,0,...,0) with 2x2 unimodular blocks, accumulating
  // the inverse operations on the columns of u so that u * e1 == x.
  for (Eigen::Index i = n - 1; i >= 1; --i) {
    std::int64_t a = w(i - 1), b = w(i);
    if (a == 0 && b == 0) continue;
    ExtGcd e = ext_gcd(a, b);
    // Inverse block [[a/g, -v], [b/g, u]] applied to columns (i-1, i).
    IntVec c0 = u.col(i - 1), c1 = u.col(i);
    u.col(i - 1) = c0 * (a / e.g) + c1 * (b / e.g);
    u.col(i) = c0 * (-e.v) + c1 * e.u;
    w(i - 1) = e.g;
    w(i) = 0;
  }
  if (w(0) != 1 && w(0) != -1) {
    throw Error("unimodular_completion: vector is not primitive");
  }
  if (w(0) == -1) u.col(0) = -u.col(0);
  return u;
}

bool is_integral(const Mat& m, double tol) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j) - std::round(m(i, j))) > tol) return false;
  return true;
}

IntMat round_to_int(const Mat& m) {
  IntMat out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      out(i, j) = static_cast<std::int64_t>(std::llround(m(i, j)));
  return out;
}

}  // namespace illum
