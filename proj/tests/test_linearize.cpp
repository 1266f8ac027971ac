// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <cmath>
#include "gfplin/linearize.hpp"
#include "gfplin/recover.hpp"
#include "gfplin/solve.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace gfplin
{
namespace
{

using test::cubic;
using test::max_coeff_norm_or_one;

Matrix mat3(std::initializer_list<double> v)
{
  Matrix M(3, 3);
  auto it = v.begin();
  for (int i = 0; i < 3; i++)
  {
    for (int j = 0; j < 3; j++)
    {
      M(i, j) = *it++;
    }
  }
  return M;
}

// Delta(z) assembled block by block from Horner shifts.
Matrix delta_by_blocks(const MatrixPolynomial &P, Complex z)
{
  const int n = P.dim(), k = P.grade();
  Matrix D = Matrix::Zero(n * k, n);
  const Matrix I = Matrix::Identity(n, n);
  for (int j = 0; j < (k - 1) / 2; j++)
  {
    const Complex zp = std::pow(z, (k - 1) / 2 - j);
    D.block(2 * j * n, 0, n, n) = zp * I;
    D.block((2 * j + 1) * n, 0, n, n) = zp * horner_shift(P, 2 * j + 1, z);
  }
  D.block((k - 1) * n, 0, n, n) = I;
  return D;
}

Matrix ek_kron(const Matrix &B, int k)
{
  const int n = static_cast<int>(B.rows());
  Matrix out = Matrix::Zero(n * k, B.cols());
  out.block((k - 1) * n, 0, n, B.cols()) = B;
  return out;
}

TEST(BuildT, ScalarCubicBlocks)
{
  const auto L = build_T(cubic());
  EXPECT_EQ(L.kind, LinearizationKind::T);
  EXPECT_EQ(L.L1, mat3({1, 0, 0, 0, 0, 1, 0, 1, 0}));
  EXPECT_EQ(L.L0, mat3({0, 1, 0, 1, 0, 0, 0, 0, 1}));
  const Vector r = pencil_eval(L, 2.0) * delta_by_blocks(cubic(), 2.0);
  EXPECT_NEAR(std::abs(r(0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r(1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r(2) - 7.0), 0.0, 1e-15);
}

TEST(BuildT, RejectsEvenOrLowGrade)
{
  try
  {
    build_T(oracle::random_complex_polynomial(2, 4, 1));
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::EvenDegree);
  }
  try
  {
    build_R(oracle::random_complex_polynomial(2, 1, 1));
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLow);
  }
  EXPECT_THROW(build_D1(oracle::random_complex_polynomial(2, 1, 1)), Error);
  EXPECT_THROW(build_Dk(oracle::random_complex_polynomial(2, 1, 1)), Error);
  EXPECT_THROW(build_C1(oracle::random_complex_polynomial(2, 1, 1)), Error);
}

TEST(Build, HermitianPolynomialGivesHermitianPencils)
{
  for (int k : {3, 5})
  {
    const auto P = oracle::random_complex_polynomial(4, k, 31 + k, true);
    for (auto kind : {LinearizationKind::T, LinearizationKind::R, LinearizationKind::D1,
                      LinearizationKind::Dk})
    {
      const auto L = build(P, kind);
      EXPECT_LE(spectral_norm(L.L1 - L.L1.adjoint()), 1e-14 * spectral_norm(L.L1));
      EXPECT_LE(spectral_norm(L.L0 - L.L0.adjoint()), 1e-14 * spectral_norm(L.L0));
    }
  }
}

TEST(StructuralMatrices, Examples)
{
  const auto s3 = structural_matrices(3, 1);
  EXPECT_EQ(s3.R, mat3({0, 0, 1, 0, 1, 0, 1, 0, 0}));
  const auto s5 = structural_matrices(5, 1);
  const double d5[] = {1, -1, 1, -1, 1};
  for (int i = 0; i < 5; i++)
  {
    EXPECT_EQ(s5.D(i, i), Complex(d5[i]));
  }
  const auto s7 = structural_matrices(7, 1);
  const double sg[] = {-1, 1, 1, -1, -1, 1, 1};
  for (int i = 0; i < 7; i++)
  {
    EXPECT_EQ(s7.S(i, i), Complex(sg[i]));
    EXPECT_EQ(s_block_sign(i + 1), static_cast<int>(sg[i]));
  }
  for (int k : {3, 5, 7})
  {
    const auto s = structural_matrices(k, 2);
    const Matrix I = Matrix::Identity(2 * k, 2 * k);
    EXPECT_EQ(s.R * s.R, I);
    EXPECT_EQ(s.S * s.S, I);
    EXPECT_EQ(s.D * s.D, I);
  }
  EXPECT_THROW(structural_matrices(4, 1), Error);
}

TEST(BuildR, DefinitionAndSpectrum)
{
  for (std::uint64_t seed = 1; seed <= 10; seed++)
  {
    const int k = seed % 2 ? 3 : 5;
    const auto P = oracle::random_complex_polynomial(3, k, seed);
    const auto T = build_T(P);
    const auto R = build_R(P);
    const auto s = structural_matrices(k, 3);
    const Matrix SR = s.S * s.R, RS = s.R * s.S;
    EXPECT_EQ(R.L1, SR * T.L1 * RS);
    EXPECT_EQ(R.L0, SR * T.L0 * RS);
    // Applying the transform twice conjugates by (SR)^2.
    EXPECT_LE((SR * R.L1 * RS - SR * SR * T.L1 * RS * RS).norm(), 0.0);
    std::vector<Complex> eT, eR;
    for (const auto &e : solve_pencil(T).finite)
    {
      eT.push_back(e.delta);
    }
    for (const auto &e : solve_pencil(R).finite)
    {
      eR.push_back(e.delta);
    }
    EXPECT_LE(oracle::multiset_distance(eR, eT), 1e-10);
  }
}

TEST(BuildD1, ScalarCubicLayoutAndDeterminant)
{
  const auto L = build_D1(cubic());
  SplitMix64 rng(4);
  for (int i = 0; i < 5; i++)
  {
    const Complex z = oracle::random_point(rng);
    Matrix expected(3, 3);
    expected << z, 0.0, -1.0, 0.0, -1.0, z, -1.0, z, 0.0;
    EXPECT_LE((pencil_eval(L, z) - expected).norm(), 1e-15 * std::abs(z));
    const Complex p = std::pow(z, 3) - 1.0;
    EXPECT_LE(std::abs(pencil_eval(L, z).determinant() + p), 1e-12 * std::abs(p));
  }
}

TEST(BuildDk, DeterminantProportionalToP)
{
  for (std::uint64_t seed = 1; seed <= 10; seed++)
  {
    const auto P = oracle::random_complex_polynomial(2, 2 + seed % 4, seed);
    const auto rep = verify_strong_linearization(build_Dk(P), P, 0, seed);
    EXPECT_TRUE(rep.forward_pass) << rep.message;
  }
}

TEST(BuildC1, ScalarCubicDeterminant)
{
  const auto L = build_C1(cubic());
  SplitMix64 rng(6);
  for (int i = 0; i < 5; i++)
  {
    const Complex z = oracle::random_point(rng);
    const Complex p = std::pow(z, 3) - 1.0;
    EXPECT_LE(std::abs(pencil_eval(L, z).determinant() - p), 1e-12 * std::abs(p));
  }
}

TEST(BuildC1, CoefficientNormIdentities)
{
  for (std::uint64_t seed = 1; seed <= 30; seed++)
  {
    const int k = 2 + seed % 5;
    auto P = oracle::random_complex_polynomial(3, k, seed);
    P.coeff(k) *= seed % 2 ? 0.3 : 4.0;
    const auto L = build_C1(P);
    EXPECT_NEAR(spectral_norm(L.L1), std::max(1.0, spectral_norm(P.coeff(k))),
                1e-14 * spectral_norm(L.L1));
    double mx = 1.0;
    for (int i = 0; i < k; i++)
    {
      mx = std::max(mx, spectral_norm(P.coeff(i)));
    }
    const double y1 = spectral_norm(L.L0);
    EXPECT_GE(y1, mx * (1 - 1e-14));
    EXPECT_LE(y1, k * mx * (1 + 1e-14));
  }
}

TEST(PencilEval, Basics)
{
  const auto P = oracle::random_complex_polynomial(3, 3, 8);
  const auto L = build_T(P);
  EXPECT_EQ(pencil_eval(L, 0.0), -L.L0);
  EXPECT_EQ(pencil_eval(L, 1.0), L.L1 - L.L0);
  const Complex z(0.3, -2.0);
  EXPECT_LE(test::rel_err(pencil_eval(L, z), oracle::naive_eval(as_polynomial(L).coeffs(), z)),
            1e-15);
}

TEST(LemmaGFPans, ColumnAndRowIdentities)
{
  SplitMix64 rng(10);
  for (std::uint64_t seed = 1; seed <= 60; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto P = oracle::random_complex_polynomial(3, k, seed);
    const Complex z = oracle::random_point(rng, 0.1, 2.5);
    const double tol = 1e-12 * std::pow(1 + std::abs(z), k) * std::pow(max_coeff_norm_or_one(P), 2);
    const Matrix Tz = pencil_eval(build_T(P), z);
    const Matrix D = delta_by_blocks(P, z);
    EXPECT_LE((delta_matrix(P, z) - D).norm(), 1e-14 * D.norm());
    const Matrix Pz = oracle::naive_eval(P.coeffs(), z);
    EXPECT_LE(spectral_norm(Tz * D - ek_kron(Pz, k)), tol);
    // Block transpose of Delta times T_P(z).
    Matrix DB(P.dim(), P.dim() * k);
    for (int b = 0; b < k; b++)
    {
      DB.block(0, b * P.dim(), P.dim(), P.dim()) = D.block(b * P.dim(), 0, P.dim(), P.dim());
    }
    EXPECT_LE(spectral_norm(DB * Tz - ek_kron(Pz.transpose(), k).transpose()), tol);
    EXPECT_LE((delta_left_matrix(P, z).adjoint() - DB).norm(), 1e-14 * DB.norm());
  }
}

TEST(RAns, LiftedIdentity)
{
  SplitMix64 rng(12);
  for (std::uint64_t seed = 1; seed <= 50; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto P = oracle::random_complex_polynomial(2, k, seed + 500);
    const Complex z = oracle::random_point(rng, 0.1, 2.5);
    const auto s = structural_matrices(k, 2);
    const Matrix SR = s.S * s.R;
    const Matrix lhs = pencil_eval(build_R(P), z) * (SR * delta_by_blocks(P, z));
    const Matrix rhs = SR * ek_kron(oracle::naive_eval(P.coeffs(), z), k);
    EXPECT_LE(spectral_norm(lhs - rhs),
              1e-12 * std::pow(1 + std::abs(z), k) * std::pow(max_coeff_norm_or_one(P), 2));
  }
}

TEST(LemmaLTrevP, ReversalConjugation)
{
  SplitMix64 rng(14);
  for (std::uint64_t seed = 1; seed <= 50; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto P = oracle::random_complex_polynomial(3, k, seed + 900);
    const Complex z = oracle::random_point(rng, 0.2, 3.0);
    const auto s = structural_matrices(k, 3);
    const Matrix lhs = pencil_eval(build_T(P), z);
    const Matrix rhs = z * s.D * s.R * pencil_eval(build_T(reversal(P)), 1.0 / z) * s.R * s.D;
    EXPECT_LE(spectral_norm(lhs - rhs), 1e-12 * (1 + std::abs(z)) * max_coeff_norm_or_one(P));
  }
}

TEST(PropositionBoundTp, CoefficientNormBounds)
{
  for (std::uint64_t seed = 1; seed <= 50; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    auto P = oracle::random_complex_polynomial(3, k, seed + 1300);
    for (int i = 0; i <= k; i++)
    {
      P.coeff(i) *= std::pow(10.0, static_cast<double>((seed + i) % 5) - 2.0);
    }
    const auto L = build_T(P);
    const double cap = 2.0 * max_coeff_norm_or_one(P) * (1 + 1e-14);
    EXPECT_LE(spectral_norm(L.L1), cap);
    EXPECT_LE(spectral_norm(L.L0), cap);
    for (const Matrix *B : {&L.L1, &L.L0})
    {
      double mb = 0.0;
      for (int r = 0; r < k; r++)
      {
        for (int c = 0; c < k; c++)
        {
          mb = std::max(mb, spectral_norm(B->block(r * 3, c * 3, 3, 3)));
        }
      }
      EXPECT_LE(mb, spectral_norm(*B) * (1 + 1e-14));
      EXPECT_LE(spectral_norm(*B), k * mb * (1 + 1e-14));
    }
  }
}

TEST(VerifyStrong, ScalarCubicExamples)
{
  const auto rT = verify_strong_linearization(build_T(cubic()), cubic(), 0, 3);
  EXPECT_TRUE(rT.pass) << rT.message;
  EXPECT_NEAR(std::abs(rT.constant - Complex(-1.0)), 0.0, 1e-10);
  const auto rC = verify_strong_linearization(build_C1(cubic()), cubic(), 0, 3);
  EXPECT_TRUE(rC.pass) << rC.message;
  EXPECT_NEAR(std::abs(rC.constant - Complex(1.0)), 0.0, 1e-10);
  EXPECT_GE(rC.samples, 4);
}

TEST(VerifyStrong, D1WithSingularA0FailsOnReversal)
{
  auto P = oracle::random_complex_polynomial(3, 3, 77);
  P.coeff(0).row(0).setZero();
  P.coeff(0).col(0).setZero();
  const auto rep = verify_strong_linearization(build_D1(P), P, 0, 5);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.reversal_pass);
}

TEST(VerifyStrong, SizeMismatchRejected)
{
  const auto P = oracle::random_complex_polynomial(2, 3, 1);
  const auto Q = oracle::random_complex_polynomial(3, 3, 1);
  EXPECT_THROW(verify_strong_linearization(build_T(P), Q), Error);
}

TEST(LogDeterminant, MatchesEigenDeterminant)
{
  SplitMix64 rng(15);
  for (int t = 0; t < 20; t++)
  {
    const Matrix A = oracle::random_matrix(6, rng);
    const Complex d = A.determinant();
    const auto ld = log_determinant(A);
    EXPECT_NEAR(ld.log_abs, std::log(std::abs(d)), 1e-12);
    EXPECT_LE(std::abs(ld.phase - d / std::abs(d)), 1e-12);
  }
  EXPECT_TRUE(log_determinant(Matrix::Zero(3, 3)).singular);
}

TEST(EigenvalueAgreement, AllLinearizationsMatchCompanionOracle)
{
  for (std::uint64_t seed = 1; seed <= 20; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto P = oracle::random_complex_polynomial(3, k, seed + 2000);
    const auto ref = oracle::companion_spectrum(P.coeffs());
    for (auto kind : {LinearizationKind::T, LinearizationKind::R, LinearizationKind::D1,
                      LinearizationKind::Dk, LinearizationKind::C1})
    {
      std::vector<Complex> got;
      const auto res = solve_pencil(build(P, kind));
      for (const auto &e : res.finite)
      {
        got.push_back(e.delta);
      }
      EXPECT_EQ(res.infinite_count, 0);
      EXPECT_LE(oracle::multiset_distance(got, ref), 1e-8) << to_string(kind);
    }
  }
}

TEST(BuildD1, EigenvectorsHaveKroneckerStructure)
{
  SplitMix64 rng(16);
  std::vector<Complex> roots;
  for (int i = 0; i < 9; i++)
  {
    roots.push_back(oracle::random_point(rng, 0.5, 2.0));
  }
  const auto op = oracle_problem(3, 3, roots, 44);
  const auto res = solve_pencil(build_D1(op.P));
  ASSERT_EQ(res.finite.size(), 9u);
  for (const auto &t : op.triples)
  {
    const auto it = std::min_element(res.finite.begin(), res.finite.end(),
                                      [&](const auto &a, const auto &b)
                                      { return std::abs(a.delta - t.delta) < std::abs(b.delta - t.delta); });
    const Vector expected = lift_to_DL(op.P, t).first;
    EXPECT_LE(oracle::projective_angle(it->z_right, expected), 1e-8);
  }
}

}  // namespace
}  // namespace gfplin
