// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <cmath>
#include "gfplin/linearize.hpp"
#include "gfplin/metrics.hpp"
#include "gfplin/recover.hpp"
#include "gfplin/solve.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace gfplin
{
namespace
{

using test::cubic;

EigenTriple scalar_triple(Complex delta)
{
  EigenTriple t;
  t.delta = delta;
  t.x = Vector::Ones(1);
  t.y = Vector::Ones(1);
  return t;
}

std::vector<Complex> random_roots(int count, std::uint64_t seed, double rmin, double rmax)
{
  SplitMix64 rng(seed);
  std::vector<Complex> r;
  for (int i = 0; i < count; i++)
  {
    r.push_back(oracle::random_point(rng, rmin, rmax));
  }
  return r;
}

void expect_vec(const Vector &v, std::initializer_list<Complex> want, double tol = 1e-15)
{
  ASSERT_EQ(v.size(), static_cast<Eigen::Index>(want.size()));
  int i = 0;
  for (const auto &w : want)
  {
    EXPECT_NEAR(std::abs(v(i++) - w), 0.0, tol);
  }
}

TEST(DeltaMatrix, ScalarCubic)
{
  const Matrix D = delta_matrix(cubic(), 2.0);
  expect_vec(D.col(0), {2.0, 4.0, 1.0});
  const auto P = oracle::random_complex_polynomial(2, 3, 3);
  const Matrix D0 = delta_matrix(P, 0.0);
  EXPECT_EQ(D0.topRows(4).norm(), 0.0);
  EXPECT_EQ(D0.bottomRows(2), Matrix::Identity(2, 2));
  EXPECT_THROW(delta_matrix(oracle::random_complex_polynomial(2, 4, 3), 1.0), Error);
}

TEST(DeltaMatrix, LemmaDeltaxNormBound)
{
  SplitMix64 rng(3);
  for (std::uint64_t seed = 1; seed <= 50; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 4);
    const auto P = oracle::random_complex_polynomial(3, k, seed);
    const Complex z = oracle::random_point(rng, 0.05, 3.0);
    EXPECT_LE(spectral_norm(delta_matrix(P, z)),
              std::sqrt(d1(z, k)) * test::max_coeff_norm_or_one(P) * (1 + 1e-13));
  }
}

TEST(DeltaMatrix, BottomBlockIsIdentity)
{
  SplitMix64 rng(4);
  for (std::uint64_t seed = 1; seed <= 50; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto P = oracle::random_complex_polynomial(2, k, seed);
    const Matrix D = delta_matrix(P, oracle::random_point(rng));
    EXPECT_EQ(D.bottomRows(2), Matrix::Identity(2, 2));
  }
}

TEST(LambdaVector, Examples)
{
  expect_vec(lambda_vector(0.0, 3), {0.0, 0.0, 1.0});
  expect_vec(lambda_vector(1.0, 4), {1.0, 1.0, 1.0, 1.0});
  expect_vec(lambda_vector(2.0, 3), {4.0, 2.0, 1.0});
}

TEST(LiftToT, ScalarCubicAtOne)
{
  const auto [z, w] = lift_to_T(cubic(), scalar_triple(1.0));
  expect_vec(z, {1.0, 1.0, 1.0});
  EXPECT_LE((pencil_eval(build_T(cubic()), 1.0) * z).norm(), 1e-15);
  EXPECT_LE((w.adjoint() * pencil_eval(build_T(cubic()), 1.0)).norm(), 1e-15);
}

TEST(LiftToT, ZeroEigenvalueUsesBottomBlock)
{
  auto P = oracle::random_complex_polynomial(2, 3, 5);
  EigenTriple t;
  t.delta = 0.0;
  t.x = Vector::Random(2);
  t.y = Vector::Random(2);
  const auto [z, w] = lift_to_T(P, t);
  EXPECT_EQ(z.head(4).norm(), 0.0);
  EXPECT_EQ(z.tail(2), t.x);
}

TEST(LiftToT, LeftVectorsOfOracleProblems)
{
  for (std::uint64_t seed = 1; seed <= 10; seed++)
  {
    const auto op = oracle_problem(3, 3, random_roots(9, seed, 0.3, 3.0), seed);
    const auto L = build_T(op.P);
    for (const auto &t : op.triples)
    {
      const auto [z, w] = lift_to_T(op.P, t);
      const double scale = spectral_norm(pencil_eval(L, t.delta));
      EXPECT_LE((pencil_eval(L, t.delta) * z).norm(), 1e-12 * scale * z.norm());
      EXPECT_LE((w.adjoint() * pencil_eval(L, t.delta)).norm(), 1e-12 * scale * w.norm());
    }
  }
}

TEST(LiftToT, HermitianLeftVectorsFromSolver)
{
  for (std::uint64_t seed = 1; seed <= 5; seed++)
  {
    const auto P = oracle::random_complex_polynomial(3, 3, seed, true);
    const auto L = build_T(P);
    for (const auto &t : polyeig(P, LinearizationKind::C1))
    {
      const auto [z, w] = lift_to_T(P, t);
      const Matrix Ld = pencil_eval(L, t.delta);
      EXPECT_LE((w.adjoint() * Ld).norm(), 1e-8 * spectral_norm(Ld) * w.norm());
    }
  }
}

TEST(LiftToR, ScalarCubicHandCase)
{
  const auto [z, w] = lift_to_R(cubic(), scalar_triple(1.0));
  expect_vec(z, {-1.0, 1.0, 1.0});
  EXPECT_LE((pencil_eval(build_R(cubic()), 1.0) * z).norm(), 1e-15);
  EXPECT_LE((w.adjoint() * pencil_eval(build_R(cubic()), 1.0)).norm(), 1e-15);
  EXPECT_EQ(extract_from_R(z, 1.0, 1, 3).size(), 1);
  EXPECT_NEAR(std::abs(extract_from_R(z, 1.0, 1, 3)(0)), 1.0, 1e-15);
}

TEST(LiftToDL, Examples)
{
  EigenTriple t;
  t.delta = 2.0;
  t.x = Vector::Unit(2, 0);
  t.y = Vector::Unit(2, 1);
  const auto [z, w] = lift_to_DL(oracle::random_complex_polynomial(2, 3, 1), t);
  expect_vec(z, {4.0, 0.0, 2.0, 0.0, 1.0, 0.0});
  expect_vec(w, {0.0, 4.0, 0.0, 2.0, 0.0, 1.0});
  t.delta = 0.0;
  const auto [z0, w0] = lift_to_DL(oracle::random_complex_polynomial(2, 3, 1), t);
  expect_vec(z0, {0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
}

TEST(LiftToC1, ScalarCubicLeftVector)
{
  const auto [z, w] = lift_to_C1(cubic(), scalar_triple(1.0));
  expect_vec(w, {1.0, 1.0, 1.0});
  expect_vec(z, {1.0, 1.0, 1.0});
  const Matrix C = pencil_eval(build_C1(cubic()), 1.0);
  EXPECT_LE((C * z).norm(), 1e-15);
  EXPECT_LE((w.adjoint() * C).norm(), 1e-15);
}

TEST(Extract, HandCases)
{
  const Vector z = delta_matrix(cubic(), 2.0).col(0);
  expect_vec(extract_from_T(z, 2.0, 1, 3), {2.0});
  const Vector zs = delta_matrix(cubic(), 0.5).col(0);
  expect_vec(extract_from_T(zs, 0.5, 1, 3), {1.0});
  const Vector lz = lambda_vector(2.0, 3);
  expect_vec(extract_from_Dt(lz, 3, 1, 3), {1.0});
  expect_vec(extract_from_Dt(lz, 1, 1, 3), {4.0});
  expect_vec(extract_from_C1_right(lz, 2.0, 1, 3), {4.0});
  expect_vec(extract_from_C1_right(lambda_vector(0.5, 3), 0.5, 1, 3), {1.0});
  // The |delta| = 1 tie goes to block k for T and to block 1 for C1.
  Vector tie(3);
  tie << 5.0, 6.0, 7.0;
  expect_vec(extract_from_T(tie, Complex(0.0, 1.0), 1, 3), {7.0});
  expect_vec(extract_from_C1_right(tie, Complex(0.0, 1.0), 1, 3), {5.0});
  expect_vec(extract_from_C1_left(tie, 1, 3), {5.0});
}

TEST(Extract, ZeroBlockFails)
{
  Vector z = Vector::Zero(6);
  z(0) = 1.0;
  try
  {
    extract_from_T(z, 0.5, 2, 3);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::ExtractionFailed);
  }
  EXPECT_THROW(take_block(z, 2, 2), Error);
  EXPECT_THROW(take_block(z, 4, 2), Error);
}

TEST(Extract, RemarkQuotientzx)
{
  for (std::uint64_t seed = 1; seed <= 20; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 3);
    const auto op = oracle_problem(2, k, random_roots(2 * k, seed + 40, 0.2, 5.0), seed);
    double amax = 1.0;
    for (const auto &A : op.P.coeffs())
    {
      amax = std::max(amax, spectral_norm(A));
    }
    for (const auto &t : op.triples)
    {
      const Vector z = lift_to_T(op.P, t).first;
      const Vector x = extract_from_T(z, t.delta, 2, k);
      EXPECT_LE(z.norm() / x.norm(), 0.5 * std::pow(k, 1.5) * amax);
    }
  }
}

TEST(RoundTrip, ExtractOfLiftIsParallel)
{
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 12; seed++)
  {
    const int k = 3 + 2 * static_cast<int>(seed % 2);
    const auto op = oracle_problem(2, k, random_roots(2 * k, seed + 70, 0.1, 10.0), seed);
    for (const auto &t : op.triples)
    {
      for (auto kind : {LinearizationKind::T, LinearizationKind::R, LinearizationKind::D1,
                        LinearizationKind::Dk, LinearizationKind::C1})
      {
        const auto [z, w] = lift(op.P, t, kind);
        Vector x;
        switch (kind)
        {
          case LinearizationKind::T: x = extract_from_T(z, t.delta, 2, k); break;
          case LinearizationKind::R: x = extract_from_R(z, t.delta, 2, k); break;
          case LinearizationKind::D1: x = extract_from_Dt(z, 1, 2, k); break;
          case LinearizationKind::Dk: x = extract_from_Dt(z, k, 2, k); break;
          default: x = extract_from_C1_right(z, t.delta, 2, k); break;
        }
        EXPECT_LE(oracle::projective_angle(x, t.x), 1e-10);
        if (kind == LinearizationKind::C1)
        {
          EXPECT_LE(oracle::projective_angle(extract_from_C1_left(w, 2, k), t.y), 1e-10);
        }
        cases++;
      }
    }
  }
  EXPECT_GE(cases, 50);
}

TEST(RoundTrip, LambdaIdentity)
{
  SplitMix64 rng(17);
  for (int i = 0; i < 50; i++)
  {
    const Vector x = Vector::Random(3);
    const Complex z = oracle::random_point(rng, 0.0, 5.0);
    Vector lx(9);
    const Vector lam = lambda_vector(z, 3);
    for (int b = 0; b < 3; b++)
    {
      lx.segment(3 * b, 3) = lam(b) * x;
    }
    EXPECT_EQ(take_block(lx, 3, 3), x);
  }
}

TEST(ResidualTransport, LiftedResidualsFollowP)
{
  SplitMix64 rng(23);
  for (std::uint64_t seed = 1; seed <= 10; seed++)
  {
    const auto op = oracle_problem(3, 3, random_roots(9, seed + 90, 0.3, 3.0), seed);
    for (const auto &t : op.triples)
    {
      EigenTriple noisy = t;
      for (int i = 0; i < 3; i++)
      {
        noisy.x(i) += 1e-8 * Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      }
      const double etaP = backward_error_right(op.P, noisy.x, t.delta);
      double wsum = 0.0;
      const auto w = coeff_norms(op.P);
      for (int i = 0; i <= 3; i++)
      {
        wsum += std::pow(std::abs(t.delta), i) * w[i];
      }
      for (auto kind : {LinearizationKind::T, LinearizationKind::R, LinearizationKind::D1,
                        LinearizationKind::Dk, LinearizationKind::C1})
      {
        const auto L = build(op.P, kind);
        const Vector z = lift(op.P, noisy, kind).first;
        const auto pn = pencil_norms(L);
        const double C =
            wsum * noisy.x.norm() / ((std::abs(t.delta) * pn.l1 + pn.l0) * z.norm());
        EXPECT_LE(backward_error_pencil_right(L, z, t.delta), 10.0 * C * etaP) << to_string(kind);
      }
    }
  }
}

TEST(ExtractionBlock, Rules)
{
  EXPECT_EQ(extraction_block(LinearizationKind::T, 2.0, 5), 1);
  EXPECT_EQ(extraction_block(LinearizationKind::T, 1.0, 5), 5);
  EXPECT_EQ(extraction_block(LinearizationKind::C1, 1.0, 5), 1);
  EXPECT_EQ(extraction_block(LinearizationKind::C1, 0.5, 5), 5);
  EXPECT_EQ(extraction_block(LinearizationKind::D1, 0.5, 5), 1);
  EXPECT_EQ(extraction_block(LinearizationKind::Dk, 5.0, 5), 5);
}

}  // namespace
}  // namespace gfplin
