#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "illum/errors.hpp"
#include "illum/lattice.hpp"
#include "test_helpers.hpp"

using namespace illum;
using namespace illum::testing;
using std::numbers::pi;

namespace {

LatticeBasis skew() { return basis2(1, 0, 1, 1); }
LatticeBasis tall() { return basis2(2, 0, 1, 3); }

}  // namespace

TEST_CASE("gram_schmidt on hand-checked bases") {
  GramSchmidtData id = gram_schmidt(identity_basis(2));
  CHECK(id.bstar_norm(0) == doctest::Approx(1.0));
  CHECK(id.bstar_norm(1) == doctest::Approx(1.0));
  CHECK(id.mu(1, 0) == doctest::Approx(0.0));

  GramSchmidtData sk = gram_schmidt(skew());
  CHECK(sk.bstar_norm(0) == doctest::Approx(1.0));
  CHECK(sk.bstar_norm(1) == doctest::Approx(1.0));
  CHECK(sk.mu(1, 0) == doctest::Approx(1.0));

  GramSchmidtData hex = gram_schmidt(hexagonal());
  CHECK(hex.bstar_norm(1) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(hex.mu(1, 0) == doctest::Approx(0.5));
}

TEST_CASE("gram_schmidt product reproduces the determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 4;
    LatticeBasis b = random_integer_basis(n, 9, rng);
    GramSchmidtData gs = gram_schmidt(b);
    double prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= gs.bstar_norm(i);
    CHECK(prod == doctest::Approx(determinant(b)).epsilon(1e-9));
  }
}

TEST_CASE("determinant examples") {
  CHECK(determinant(identity_basis(2)) == doctest::Approx(1.0));
  CHECK(determinant(hexagonal()) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(determinant(tall()) == doctest::Approx(6.0));
}

TEST_CASE("near-singular input rejected") {
  Mat m(2, 2);
  m << 1, 2, 2, 4;
  CHECK_THROWS_AS(LatticeBasis::from_columns(m), NearSingularError);
}

TEST_CASE("minimal norm examples") {
  CHECK(minimal_norm(identity_basis(3)) == doctest::Approx(1.0));
  CHECK(minimal_norm(tall()) == doctest::Approx(2.0));
  CHECK(minimal_norm(hexagonal()) == doctest::Approx(1.0));
}

TEST_CASE("minimal vectors examples") {
  MinimalVectors z2 = minimal_vectors(identity_basis(2));
  CHECK(z2.full_count == 4);
  REQUIRE(z2.reps.size() == 2);

  MinimalVectors hex = minimal_vectors(hexagonal());
  CHECK(hex.full_count == 6);
  REQUIRE(hex.reps.size() == 3);
  for (const Vec& v : hex.reps) CHECK(v.norm() == doctest::Approx(1.0));

  MinimalVectors t = minimal_vectors(tall());
  CHECK(t.full_count == 2);
  REQUIRE(t.reps.size() == 1);
  CHECK(t.reps[0](0) == doctest::Approx(2.0));
  CHECK(t.reps[0](1) == doctest::Approx(0.0));
}

TEST_CASE("well-roundedness") {
  WellRoundedVerdict z3 = is_well_rounded(identity_basis(3));
  CHECK(z3.well_rounded);
  REQUIRE(z3.witness.has_value());
  CHECK(z3.witness->cols() == 3);

  CHECK(is_well_rounded(hexagonal()).well_rounded);
  CHECK_FALSE(is_well_rounded(tall()).well_rounded);
}

TEST_CASE("orthogonality defect examples and Hadamard floor") {
  CHECK(orthogonality_defect(identity_basis(2)) == doctest::Approx(1.0));
  CHECK(orthogonality_defect(hexagonal()) ==
        doctest::Approx(2.0 / std::sqrt(3.0)));
  CHECK(orthogonality_defect(skew()) == doctest::Approx(std::sqrt(2.0)));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeBasis b = random_integer_basis(2 + trial % 4, 12, rng);
    CHECK(orthogonality_defect(b) >= 1.0 - 1e-12);
  }
}

TEST_CASE("angle sequences") {
  Vec id = angle_sequence(identity_basis(3));
  for (int i = 0; i < id.size(); ++i) CHECK(id(i) == doctest::Approx(pi / 2));
  CHECK(angle_sequence(skew())(0) == doctest::Approx(pi / 4));
  CHECK(angle_sequence(hexagonal())(0) == doctest::Approx(pi / 3));
}

TEST_CASE("theta orthogonality verdicts") {
  ThetaVerdict ortho = theta_orthogonality(identity_basis(3), pi / 3, true);
  CHECK(ortho.weak);
  REQUIRE(ortho.strong.has_value());
  CHECK(*ortho.strong);

  // Boundary case: the hexagonal angle equals pi/3 exactly.
  ThetaVerdict hex = theta_orthogonality(hexagonal(), pi / 3, true);
  CHECK(hex.weak);
  CHECK(*hex.strong);

  CHECK_FALSE(theta_orthogonality(skew(), pi / 3).weak);
  CHECK(nearly_orthogonal(hexagonal()));
  CHECK_FALSE(nearly_orthogonal(skew()));
}

TEST_CASE("strong theta check respects the permutation cap") {
  CHECK_THROWS_AS(theta_orthogonality(identity_basis(9), pi / 3, true),
                  DimensionTooLargeError);
}

TEST_CASE("enumeration cap guards minimal-norm search") {
  CHECK_THROWS_AS(minimal_norm(identity_basis(11)), DimensionTooLargeError);
}

TEST_CASE("unimodular invariance of lattice invariants") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 3;
    LatticeBasis b = random_integer_basis(n, 6, rng);
    IntMat u = random_unimodular(n, rng);
    Mat recombined = b.columns() * u.cast<double>();
    LatticeBasis c = LatticeBasis::from_columns(recombined);

    CHECK(determinant(c) == doctest::Approx(determinant(b)).epsilon(1e-9));
    CHECK(minimal_norm(c) == doctest::Approx(minimal_norm(b)).epsilon(1e-9));
    CHECK(is_well_rounded(c).well_rounded == is_well_rounded(b).well_rounded);

    MinimalVectors mb = minimal_vectors(b);
    MinimalVectors mc = minimal_vectors(c);
    REQUIRE(mb.full_count == mc.full_count);
    for (std::size_t i = 0; i < mb.reps.size(); ++i) {
      CHECK((mb.reps[i] - mc.reps[i]).norm() < 1e-9 * (1.0 + mb.norm));
    }
  }
}

TEST_CASE("rotation invariance of profile scalars") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 3;
    LatticeBasis b = random_integer_basis(n, 8, rng);
    Mat q = random_orthogonal(n, rng);
    LatticeBasis rotated = LatticeBasis::from_columns(q * b.columns());

    CHECK(determinant(rotated) ==
          doctest::Approx(determinant(b)).epsilon(1e-8));
    CHECK(minimal_norm(rotated) ==
          doctest::Approx(minimal_norm(b)).epsilon(1e-8));
    CHECK(orthogonality_defect(rotated) ==
          doctest::Approx(orthogonality_defect(b)).epsilon(1e-8));
    Vec ab = angle_sequence(b);
    Vec ar = angle_sequence(rotated);
    for (int i = 0; i < ab.size(); ++i)
      CHECK(ar(i) == doctest::Approx(ab(i)).epsilon(1e-8));
  }
}

TEST_CASE("determinant equals norm product times sine product") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 4;
    LatticeBasis b = random_integer_basis(n, 10, rng);
    Vec angles = angle_sequence(b);
    double rhs = 1.0;
    for (int i = 0; i < n; ++i) rhs *= b.column_norm(i);
    for (int i = 0; i < angles.size(); ++i) rhs *= std::sin(angles(i));
    CHECK(determinant(b) == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("enumeration agrees with a dense brute-force grid") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + trial % 3;  // n <= 4
    LatticeBasis b = random_integer_basis(n, 5, rng);
    double enumerated = minimal_norm(b);
    double brute = brute_force_min_norm(b, 6);
    // Enumeration is complete, so it can never beat an exhaustive subset;
    // on these small bases the grid covers the true minimum.
    CHECK(enumerated <= brute + 1e-12);
    CHECK(enumerated == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("minimal vector representatives are sign-normalized and sorted") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    LatticeBasis b = random_integer_basis(3, 6, rng);
    MinimalVectors mv = minimal_vectors(b);
    CHECK(mv.full_count == 2 * static_cast<int>(mv.reps.size()));
    for (const Vec& v : mv.reps) {
      CHECK(v.norm() == doctest::Approx(mv.norm).epsilon(1e-9));
      for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-9 * mv.norm) {
          CHECK(v(i) > 0);
          break;
        }
      }
    }
  }
}

TEST_CASE("profile bundles the invariants consistently") {
  LatticeProfile hex = profile(hexagonal());
  CHECK(hex.det == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(hex.min_norm == doctest::Approx(1.0));
  CHECK(hex.sigma.full_count == 6);
  CHECK(hex.defect == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(hex.well_rounded);
  CHECK(hex.weakly_pi3_orthogonal);
  CHECK(hex.angles(0) == doctest::Approx(pi / 3).epsilon(1e-12));
}
