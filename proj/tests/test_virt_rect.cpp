#include <doctest.h>

#include <cmath>

#include "illum/errors.hpp"
#include "illum/lattice.hpp"
#include "illum/virt_rect.hpp"
#include "test_helpers.hpp"

using namespace illum;
using namespace illum::testing;

namespace {

RectangularForm example_form() {
  Vec c(2);
  c << 1.0, 2.0;
  IntMat b(2, 2);
  b << 2, 1, 1, 2;
  return RectangularForm::create(c, b);
}

}  // namespace

TEST_CASE("construct the trivial form") {
  Vec c = Vec::Ones(3);
  RectangularForm form = RectangularForm::create(c, IntMat::Identity(3, 3));
  LatticeBasis basis = construct(form);
  CHECK((basis.columns() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("construct the worked 2x2 form") {
  LatticeBasis basis = construct(example_form());
  CHECK(basis.columns()(0, 0) == doctest::Approx(2.0));
  CHECK(basis.columns()(1, 0) == doctest::Approx(2.0));
  CHECK(basis.columns()(0, 1) == doctest::Approx(1.0));
  CHECK(basis.columns()(1, 1) == doctest::Approx(4.0));
  CHECK(determinant(basis) == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("row coprimality is enforced") {
  Vec c = Vec::Ones(2);
  IntMat b(2, 2);
  b << 1, 1, 0, 3;  // second row gcd 3
  CHECK_THROWS_AS(RectangularForm::create(c, b), CoprimalityError);
}

TEST_CASE("singular forms are rejected") {
  Vec c = Vec::Ones(2);
  IntMat b(2, 2);
  b << 2, 1, 2, 1;
  CHECK_THROWS_AS(RectangularForm::create(c, b), NearSingularError);
}

TEST_CASE("orthogonality of U is validated") {
  Vec c = Vec::Ones(2);
  Mat u(2, 2);
  u << 1, 1, 0, 1;
  CHECK_THROWS_AS(RectangularForm::create(c, IntMat::Identity(2, 2), u), ParseError);
}

TEST_CASE("orthogonal sublattice of the trivial form") {
  Vec c = Vec::Ones(2);
  RectangularForm form = RectangularForm::create(c, IntMat::Identity(2, 2));
  OrthogonalSublattice sub = orthogonal_sublattice(form);
  CHECK(sub.multipliers(0) == 1);
  CHECK(sub.multipliers(1) == 1);
  CHECK(sub.index == 1);
  CHECK(sub.det == doctest::Approx(1.0));
}

TEST_CASE("orthogonal sublattice of the worked form") {
  OrthogonalSublattice sub = orthogonal_sublattice(example_form());
  CHECK(sub.multipliers(0) == 3);
  CHECK(sub.multipliers(1) == 3);
  CHECK(sub.index == 3);
  CHECK(sub.model_index == 3);  // |det B|^{n-1}
  CHECK(sub.det == doctest::Approx(18.0));

  // Sorted basis {(3,0),(0,6)}.
  CHECK(sub.basis.column_norm(0) == doctest::Approx(3.0));
  CHECK(sub.basis.column_norm(1) == doctest::Approx(6.0));

  // det(sublattice) = det(L)^n / |c|^{n-1}: 6^2 / 2 = 18.
  LatticeBasis full = construct(example_form());
  double det_l = determinant(full);
  CHECK(sub.det == doctest::Approx(det_l * det_l / 2.0).epsilon(1e-9));
  CHECK(sub.index == doctest::Approx(sub.det / det_l).epsilon(1e-9));
}

TEST_CASE("sublattice membership has an exact integer witness") {
  OrthogonalSublattice sub = orthogonal_sublattice(example_form());
  LatticeBasis full = construct(example_form());
  // Coordinates of each sublattice vector in the full basis are integers.
  Mat coords = full.columns().fullPivLu().solve(sub.basis.columns());
  for (int i = 0; i < coords.rows(); ++i) {
    for (int j = 0; j < coords.cols(); ++j) {
      CHECK(std::abs(coords(i, j) - std::round(coords(i, j))) < 1e-9);
    }
  }
}

TEST_CASE("sublattice minimal norm dominates the lattice minimal norm") {
  OrthogonalSublattice sub = orthogonal_sublattice(example_form());
  LatticeBasis full = construct(example_form());
  CHECK(minimal_norm(full) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
  CHECK(minimal_norm(sub.basis) >= minimal_norm(full) - 1e-9);
}

TEST_CASE("index identity across further forms") {
  std::vector<IntMat> mats;
  IntMat b1(2, 2);
  b1 << 3, 1, 1, 2;
  mats.push_back(b1);
  IntMat b2(3, 3);
  b2 << 1, 0, 1, 0, 1, 1, 1, 1, 0;
  mats.push_back(b2);
  for (const IntMat& b : mats) {
    Vec c = Vec::Ones(b.rows());
    OrthogonalSublattice sub =
        orthogonal_sublattice(RectangularForm::create(c, b));
    CHECK(sub.index == sub.model_index);
  }
}

TEST_CASE("trivial form reproduces the standard-lattice pipeline") {
  Vec c = Vec::Ones(2);
  RectangularForm form = RectangularForm::create(c, IntMat::Identity(2, 2));
  SmoothBody disk = SmoothBody::make_ball(Vec::Zero(2), 1.0);
  IlluminationResult res = illuminate_virt_rect(form, disk, 4000, 1);
  CHECK(res.t == 9);
  CHECK(res.distance.upper == doctest::Approx(7.8883017826).epsilon(1e-9));
  CHECK(res.certificate.verified);
  CHECK(res.ladder.virt_rect.applicable);
  CHECK(res.ladder.virt_rect.value ==
        doctest::Approx(res.ladder.generic.value).epsilon(1e-12));
}

TEST_CASE("worked form pipeline hits the published chain") {
  SmoothBody disk = SmoothBody::make_ball(Vec::Zero(2), 1.0);
  IlluminationResult res = illuminate_virt_rect(example_form(), disk, 10000, 1);
  CHECK(res.t == 3);
  CHECK(res.certificate.verified);
  CHECK(res.intermediate_bound == doctest::Approx(36.0).epsilon(1e-9));
  CHECK(res.distance.upper <= 36.0 + 1e-9);
  // Corollary-style closed form at detL = 6, |det C| = 2, ||L|| = sqrt(5).
  CHECK(res.ladder.virt_rect.value == doctest::Approx(162.9174024).epsilon(1e-7));
  CHECK(res.ladder.virt_rect.satisfied);
  CHECK(res.ladder.generic.applicable);
  CHECK(res.ladder.all_satisfied());
}
