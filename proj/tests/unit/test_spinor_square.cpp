#include <gtest/gtest.h>

#include <cmath>

#include "kaspin/errors.hpp"
#include "kaspin/ka_core/random.hpp"
#include "kaspin/lowdim/lowdim.hpp"
#include "kaspin/spinor_square/square.hpp"
#include "test_util.hpp"

namespace kaspin {
namespace {

using test::e;

Vector random_spinor(int n, SplitMix64& rng) {
  Vector xi(n);
  for (int i = 0; i < n; ++i) xi(i) = rng.normal();
  return xi;
}

double sign_match(const Vector& a, const Vector& b) {
  return std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff());
}

TEST(Square, EuclideanPlaneExplicitBilinears) {
  const PairedRep pr = build_paired_rep({2, 0});
  SplitMix64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const Vector xi = random_spinor(2, rng);
    const Matrix& b = pr.Bplus;
    const Multivector a = square(pr, Pairing::plus, 1, xi).alpha;
    EXPECT_NEAR(2.0 * a[0], xi.dot(b * xi), 1e-12);
    for (int i = 0; i < 2; ++i)
      EXPECT_NEAR(2.0 * a[1u << i], (pr.rep.gammas[i] * xi).dot(b * xi), 1e-12);
    EXPECT_EQ(a[3], 0.0);
    const double h11 = a[1] * a[1] + a[2] * a[2];
    EXPECT_NEAR(a[0] * a[0], h11, 1e-12);
    EXPECT_LE(two_dim_normal_form_residual(a), 1e-12);
  }
}

TEST(Square, MinkowskiMinusIsParabolic) {
  const PairedRep pr = build_paired_rep(kMinkowski);
  SplitMix64 rng(22);
  for (int t = 0; t < 20; ++t) {
    const Multivector a = square(pr, Pairing::minus, 1, random_spinor(4, rng)).alpha;
    for (int k : {0, 3, 4}) EXPECT_LE(a.grade(k).max_abs(), 1e-12);
    const ParabolicPair pp = polyform_to_pair(a);
    EXPECT_LE(parabolic_defect(pp), 1e-9);
  }
}

TEST(Square, ZeroAndSignInvariance) {
  const PairedRep pr = build_paired_rep({3, 1});
  EXPECT_EQ(square(pr, Pairing::plus, 1, Vector::Zero(4)).alpha, Multivector({3, 1}));
  SplitMix64 rng(23);
  const Vector xi = random_spinor(4, rng);
  EXPECT_EQ(square(pr, Pairing::plus, 1, xi).alpha, square(pr, Pairing::plus, 1, -xi).alpha);
  EXPECT_THROW(square(pr, Pairing::plus, 2, xi), PreconditionError);
  EXPECT_THROW(square(pr, Pairing::plus, 1, Vector::Zero(3)), PreconditionError);
}

TEST(Square, ResultTags) {
  const PairedRep pr = build_paired_rep({2, 2});
  const SquareResult r = square(pr, Pairing::minus, -1, Vector::Ones(4));
  EXPECT_EQ(r.kappa, -1);
  EXPECT_EQ(r.pairing, Pairing::minus);
  EXPECT_EQ(r.s, -1);
  EXPECT_EQ(r.sigma, pr.sigma_minus);
}

TEST(Square, DegreeFilterExhaustive) {
  for (const Signature& sig : test::rep_signatures()) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(24);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      const int s = adjoint_type(tag);
      const int sigma = pr.sigma(tag);
      for (int t = 0; t < 10; ++t) {
        const Multivector a = square(pr, tag, 1, random_spinor(pr.n(), rng)).alpha;
        for (int k = 0; k <= sig.d(); ++k)
          if (grade_vanishes(k, s, sigma)) EXPECT_LE(a.grade(k).max_abs(), 1e-12) << sig.str();
      }
    }
  }
}

TEST(Square, SurvivingGradesAreGenericallyNonzero) {
  // The filter only predicts zeros; a grade it allows should actually appear.
  const PairedRep pr = build_paired_rep({2, 2});
  SplitMix64 rng(25);
  const Multivector a = square(pr, Pairing::plus, 1, random_spinor(4, rng)).alpha;
  for (int k = 0; k <= 4; ++k)
    if (!grade_vanishes(k, 1, pr.sigma_plus)) EXPECT_GT(a.grade(k).max_abs(), 1e-6);
}

TEST(Admissible, SquaresAreInTheCone) {
  for (const Signature& sig : test::rep_signatures()) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(26);
    const auto probes = default_probes(pr, 10, rng);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      const Matrix e = square_endomorphism(pr, tag, 1, random_spinor(pr.n(), rng));
      const AdmissibilityReport r = check_admissible(pr, tag, e, probes);
      EXPECT_TRUE(r.admissible) << sig.str();
      EXPECT_EQ(r.rank_witness, 1);
      EXPECT_GE(r.residual_idempotent, 0.0);
      EXPECT_LE(r.residual_sandwich, 1e-9);
    }
  }
}

TEST(Admissible, IdentityFails) {
  const PairedRep pr = build_paired_rep({3, 1});
  SplitMix64 rng(27);
  const AdmissibilityReport r =
      check_admissible(pr, Pairing::plus, Matrix::Identity(4, 4), default_probes(pr, 2, rng));
  EXPECT_FALSE(r.admissible);
  EXPECT_GT(r.residual_idempotent, 0.1);
}

TEST(Admissible, SplitPlaneExampleWithOrthonormalPairing) {
  const Matrix b = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  const std::vector<Matrix> probes{Matrix::Identity(2, 2), b};
  // b^2 = -k1 k2 with k1 = 4, k2 = -1, b = 2.
  Matrix e(2, 2);
  e << 4.0, -2.0, 2.0, -1.0;
  EXPECT_TRUE(check_admissible(b, 1, e, probes).admissible);
  // The explicit spinor of that example: kappa = 1, xi = (2, 1).
  const Eigen::Vector2d xi(2.0, 1.0);
  EXPECT_LE((e - xi * (b * xi).transpose()).norm(), 1e-15);
  Matrix bad(2, 2);
  bad << 4.0, -3.0, 3.0, -1.0;
  EXPECT_FALSE(check_admissible(b, 1, bad, probes).admissible);
}

TEST(Admissible, EmptyProbesThrow) {
  EXPECT_THROW(check_admissible(Matrix::Identity(2, 2), 1, Matrix::Identity(2, 2), {}),
               PreconditionError);
}

TEST(Conditions, RandomSquaresPassIn22) {
  const PairedRep pr = build_paired_rep(kSplit22);
  SplitMix64 rng(28);
  for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
    for (int t = 0; t < 20; ++t) {
      const Multivector a = square(pr, tag, t % 2 == 0 ? 1 : -1, random_spinor(4, rng)).alpha;
      const ConditionReport r = verify_square_conditions(pr, tag, a, 10, t);
      EXPECT_TRUE(r.is_square) << r.reason;
      EXPECT_LE(std::max({r.symmetry, r.idempotent, r.sandwich_max}), 1e-9);
    }
  }
}

TEST(Conditions, ScalarOneIsNotAMinkowskiMinusSquare) {
  const PairedRep pr = build_paired_rep(kMinkowski);
  const ConditionReport r =
      verify_square_conditions(pr, Pairing::minus, Multivector::scalar(kMinkowski, 1.0));
  EXPECT_FALSE(r.is_square);
  EXPECT_GT(r.symmetry, 1.0);
}

TEST(Conditions, NonNullGradeOneIsRejected) {
  const PairedRep pr = build_paired_rep(kMinkowski);
  const Multivector a = e(kMinkowski, {1}) + e(kMinkowski, {1, 2}) + e(kMinkowski, {1, 3});
  EXPECT_FALSE(verify_square_conditions(pr, Pairing::minus, a).is_square);
  EXPECT_THROW(polyform_to_pair(a), PreconditionError);
}

TEST(Conditions, RankTwoSymmetricElementsAreRejected) {
  for (const Signature& sig : test::rep_signatures()) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(29);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      const Multivector a = square(pr, tag, 1, random_spinor(pr.n(), rng)).alpha +
                            square(pr, tag, 1, random_spinor(pr.n(), rng)).alpha;
      const ConditionReport r = verify_square_conditions(pr, tag, a);
      EXPECT_LE(r.symmetry, 1e-12);
      EXPECT_FALSE(r.is_square) << sig.str();
    }
  }
}

TEST(Conditions, SandwichOverAllMonomials) {
  for (const Signature& sig : test::rep_signatures()) {
    const PairedRep pr = build_paired_rep(sig);
    Vector xi(pr.n());
    for (int i = 0; i < pr.n(); ++i) xi(i) = 1.0 + 0.25 * i - 0.1 * i * i;
    xi /= xi.norm();
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      const Multivector a = square(pr, tag, 1, xi).alpha;
      for (unsigned m = 0; m < sig.blade_count(); ++m) {
        const Multivector beta = Multivector::basis(sig, m);
        const Multivector ab = geometric_product(a, beta);
        const Multivector lhs = geometric_product(ab, a);
        ASSERT_LE((lhs - ka_trace(ab) * a).max_abs(), 1e-9) << sig.str() << " mask " << m;
      }
    }
  }
}

TEST(Reconstruct, RoundTripAndKappa) {
  for (const Signature& sig : test::rep_signatures()) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(30);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      for (int t = 0; t < 25; ++t) {
        const Vector xi = random_spinor(pr.n(), rng);
        const int kappa = t % 2 == 0 ? 1 : -1;
        const Reconstruction rec = reconstruct(pr, tag, square(pr, tag, kappa, xi).alpha);
        ASSERT_LE(sign_match(rec.xi, xi), 1e-8) << sig.str();
        ASSERT_EQ(rec.kappa, kappa);
      }
    }
  }
}

TEST(Reconstruct, ZeroGivesZero) {
  const PairedRep pr = build_paired_rep({3, 1});
  const Reconstruction rec = reconstruct(pr, Pairing::minus, Multivector({3, 1}));
  EXPECT_EQ(rec.kappa, 0);
  EXPECT_EQ(rec.xi, Vector::Zero(4));
}

TEST(Reconstruct, RankTwoThrows) {
  const PairedRep pr = build_paired_rep({3, 1});
  const Multivector a = square(pr, Pairing::minus, 1, Vector::Unit(4, 0)).alpha +
                        square(pr, Pairing::minus, 1, Vector::Unit(4, 2)).alpha;
  EXPECT_THROW(reconstruct(pr, Pairing::minus, a), PreconditionError);
}

TEST(Reconstruct, FromExplicitParabolicPair) {
  const PairedRep pr = build_paired_rep(kMinkowski);
  const ParabolicPair pp{Vec4(1, 0, 0, 1), Vec4(0, 1, 0, 0)};
  const Multivector a = pair_to_polyform(pp);
  const Reconstruction rec = reconstruct(pr, Pairing::minus, a);
  EXPECT_LE(test::max_diff(square(pr, Pairing::minus, rec.kappa, rec.xi).alpha, a), 1e-12);
}

TEST(Chirality, OneOneNullOneForm) {
  const PairedRep pr = build_paired_rep({1, 1});
  const Multivector a = e({1, 1}, {1}) + e({1, 1}, {2});
  EXPECT_EQ(hodge_star(a), a);
  EXPECT_TRUE(check_chirality(pr, a, -1));
  EXPECT_FALSE(check_chirality(pr, a, 1));
}

TEST(Chirality, SplitSignatureSelfDualNullTwoForm) {
  const PairedRep pr = build_paired_rep(kSplit22);
  const Multivector a = self_dual_combination_22(1.0, 1.0, 0.0);
  EXPECT_TRUE(check_chirality(pr, a, -1));
}

TEST(Chirality, ProjectedSpinors) {
  for (const Signature sig : {Signature{1, 1}, Signature{2, 2}, Signature{3, 3}, Signature{4, 4}}) {
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(31);
    for (const int mu : {1, -1}) {
      const Vector xi = chiral_projection(pr, random_spinor(pr.n(), rng), mu);
      for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
        const Multivector a = square(pr, tag, 1, xi).alpha;
        if (a.norm() < 1e-12) continue;
        EXPECT_TRUE(check_chirality(pr, a, mu)) << sig.str();
        EXPECT_LE((geometric_product(Multivector::volume(sig), a) - mu * a).max_abs(), 1e-9);
      }
    }
  }
}

TEST(Chirality, WrongSignatureThrows) {
  const PairedRep pr = build_paired_rep({3, 1});
  EXPECT_THROW(check_chirality(pr, Multivector::scalar({3, 1}, 1.0), 1), SignatureError);
}

TEST(ConstraintTransfer, Examples) {
  const PairedRep pr = build_paired_rep({3, 1});
  SplitMix64 rng(32);
  Vector xi = random_spinor(4, rng);
  xi /= xi.norm();
  const Multivector a = square(pr, Pairing::minus, 1, xi).alpha;
  EXPECT_EQ(constraint_transfer(pr, Matrix::Zero(4, 4), a), 0.0);
  const Matrix q = Matrix::Identity(4, 4) - xi * xi.transpose();
  EXPECT_LE(constraint_transfer(pr, q, a), 1e-9);
  EXPECT_GT(constraint_transfer(pr, Matrix::Identity(4, 4), a), 0.1);
}

TEST(SpinEquivariance, RotationConjugatesTheSquare) {
  for (const Signature& sig : test::rep_signatures()) {
    if (sig.p < 2) continue;
    const PairedRep pr = build_paired_rep(sig);
    SplitMix64 rng(33);
    const double t = 0.7;
    const Multivector x = Multivector::scalar(sig, std::cos(t)) +
                          Multivector::basis(sig, 0b11u, std::sin(t));
    const Matrix gx = quantize(pr.rep, x);
    const Vector xi = random_spinor(pr.n(), rng);
    for (const Pairing tag : {Pairing::plus, Pairing::minus}) {
      EXPECT_LE((gx.transpose() * pr.B(tag) * gx - pr.B(tag)).norm(), 1e-12);
      const Matrix lhs = quantize(pr.rep, square(pr, tag, 1, gx * xi).alpha);
      const Matrix rhs = gx * quantize(pr.rep, square(pr, tag, 1, xi).alpha) * gx.inverse();
      EXPECT_LE((lhs - rhs).norm(), 1e-8) << sig.str();
    }
  }
}

TEST(VerdictJson, Shape) {
  const PairedRep pr = build_paired_rep({3, 1});
  const Multivector a = square(pr, Pairing::minus, 1, Vector::Unit(4, 0)).alpha;
  const ConditionReport r = verify_square_conditions(pr, Pairing::minus, a);
  const Reconstruction rec = reconstruct(pr, Pairing::minus, a);
  const Json j = verdict_to_json(r, &rec);
  EXPECT_TRUE(j["is_square"].get<bool>());
  EXPECT_EQ(j["kappa"], 1);
  EXPECT_TRUE(j["residuals"].contains("symmetry"));
  EXPECT_TRUE(j["residuals"].contains("idempotent"));
  EXPECT_TRUE(j["residuals"].contains("sandwich_max"));
  EXPECT_EQ(j["spinor"].size(), 4u);
  EXPECT_THROW(spinor_from_json(Json::parse("[1,2]"), 4), ParseError);
  EXPECT_THROW(spinor_from_json(Json::parse(R"([1,2,"a",4])"), 4), ParseError);
}

}  // namespace
}  // namespace kaspin
