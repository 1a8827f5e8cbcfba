#include "illum/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "illum/enumeration.hpp"
#include "illum/errors.hpp"
#include "illum/intexact.hpp"

namespace illum {

namespace {

// Boundary slack keeps |mu| == 1/2 stable (no flip-flopping between
// equivalent size-reduced forms), which makes reduction idempotent.
constexpr double kMuSlack = 1e-9;

void size_reduce_column(Mat& b, IntMat& t, int k) {
  for (int j = k - 1; j >= 0; --j) {
    GramSchmidtData gs = gram_schmidt_columns(b);
    double mu = gs.mu(k, j);
    if (std::abs(mu) <= 0.5 + kMuSlack) continue;
    auto q = std::llround(mu);
    b.col(k) -= static_cast<double>(q) * b.col(j);
    t.col(k) -= q * t.col(j);
  }
}

ReductionResult finish(Mat b, IntMat t, ReductionAlgo algo) {
  ReductionResult res{LatticeBasis::from_columns(std::move(b)), std::move(t),
                      algo, 1.0, 0.0};
  res.defect = orthogonality_defect(res.reduced);
  res.first_norm = res.reduced.column_norm(0);
  return res;
}

}  // namespace

ReductionResult lll_reduce(const LatticeBasis& basis, double delta_param) {
  if (!(delta_param > 0.25 && delta_param < 1.0)) {
    throw Error("lll_reduce: delta_param must lie in (1/4, 1)");
  }
  const int n = basis.n();
  Mat b = basis.columns();
  IntMat t = IntMat::Identity(n, n);

  int k = 1;
  long guard = 0;
  while (k < n) {
    if (++guard > 1000000) throw Error("lll_reduce: iteration guard tripped");
    size_reduce_column(b, t, k);
    GramSchmidtData gs = gram_schmidt_columns(b);
    double lhs = gs.bstar_norm(k) * gs.bstar_norm(k);
    double mu = gs.mu(k, k - 1);
    double rhs =
        (delta_param - mu * mu) * gs.bstar_norm(k - 1) * gs.bstar_norm(k - 1);
    if (lhs >= rhs) {
      ++k;
    } else {
      b.col(k).swap(b.col(k - 1));
      t.col(k).swap(t.col(k - 1));
      k = std::max(k - 1, 1);
    }
  }
  return finish(std::move(b), std::move(t), ReductionAlgo::LLL);
}

ReductionResult hkz_reduce(const LatticeBasis& basis) {
  const int n = basis.n();
  if (n > enumeration_cap()) {
    throw DimensionTooLargeError("hkz_reduce: dimension " + std::to_string(n) +
                                 " exceeds enumeration cap " +
                                 std::to_string(enumeration_cap()));
  }
  ReductionResult pre = lll_reduce(basis);
  Mat b = pre.reduced.columns();
  IntMat t = pre.transform;
  const bool exact = basis.integral() && is_integral(b);
  IntMat bi;
  if (exact) bi = round_to_int(b);

  for (int level = 0; level + 1 < n; ++level) {
    const int m = n - level;

    // Gram-Schmidt data of the projected block, read off the R factor.
    Mat r = Mat(b.householderQr().matrixQR().triangularView<Eigen::Upper>());
    GramSchmidtData gs;
    gs.bstar_norm = Vec(m);
    gs.mu = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      gs.bstar_norm(i) = std::abs(r(level + i, level + i));
      for (int j = 0; j < i; ++j)
        gs.mu(i, j) = r(level + j, level + i) / r(level + j, level + j);
    }

    double best2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      double col2 = 0.0;
      for (int j = 0; j <= i; ++j) col2 += r(level + j, level + i) * r(level + j, level + i);
      best2 = std::min(best2, col2);
    }
    double bound2 = best2 * (1.0 + 1e-12);
    enumerate_coeffs(gs, &bound2, [&](const IntVec&, double n2) {
      if (n2 < best2) {
        best2 = n2;
        bound2 = best2 * (1.0 + 1e-12);
      }
    });

    // Gather everything at the minimum, then pick deterministically: the
    // lexicographically smallest sign-normalized lattice vector.
    double gather2 = best2 * (1.0 + 4e-9);
    std::vector<std::pair<IntVec, double>> candidates;
    enumerate_coeffs(gs, &gather2, [&](const IntVec& x, double n2) {
      if (n2 <= best2 * (1.0 + 2e-9)) candidates.emplace_back(x, n2);
    });

    if (level == 0 && exact) {
      std::int64_t min2 = std::numeric_limits<std::int64_t>::max();
      std::vector<std::pair<IntVec, std::int64_t>> scored;
      for (auto& [x, n2] : candidates) {
        std::int64_t v2 = int_norm2(IntVec(bi * x));
        scored.emplace_back(x, v2);
        min2 = std::min(min2, v2);
      }
      candidates.clear();
      for (auto& [x, v2] : scored)
        if (v2 == min2) candidates.emplace_back(x, static_cast<double>(v2));
    } else {
      double min2 = std::numeric_limits<double>::infinity();
      for (auto& [x, n2] : candidates) min2 = std::min(min2, n2);
      std::erase_if(candidates, [&](const auto& c) {
        return c.second > min2 * (1.0 + 2e-9);
      });
    }

    IntVec chosen;
    Vec chosen_w;
    for (auto& [x, n2] : candidates) {
      Vec w = b.middleCols(level, m) * x.cast<double>();
      Vec wn = normalize_sign(w);
      if (chosen.size() == 0 || lex_less(wn, chosen_w, 1e-9 * (1.0 + wn.norm()))) {
        chosen = (wn - w).norm() < (wn + w).norm() ? x : IntVec(-x);
        chosen_w = wn;
      }
    }

    IntMat u = unimodular_completion(chosen);
    b.middleCols(level, m) = (b.middleCols(level, m) * u.cast<double>()).eval();
    t.middleCols(level, m) = (t.middleCols(level, m) * u).eval();
    if (exact) bi = round_to_int(b);
  }

  for (int k = 1; k < n; ++k) size_reduce_column(b, t, k);
  // Column signs carry no reduction information; normalize them so the
  // output is canonical (first significant coordinate positive).
  for (int k = 0; k < n; ++k) {
    Vec col = b.col(k);
    if ((normalize_sign(col) - col).norm() > 1e-9 * col.norm()) {
      b.col(k) = -b.col(k);
      t.col(k) = -t.col(k);
    }
  }
  return finish(std::move(b), std::move(t), ReductionAlgo::HKZ);
}

double hermite_defect_bound(int n) {
  return std::pow(4.0 / 3.0, n * (n - 1) / 2.0);
}

bool hermite_defect_check(const ReductionResult& result) {
  return result.defect <= hermite_defect_bound(result.reduced.n()) + 1e-9;
}

}  // namespace illum
