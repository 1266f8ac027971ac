// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/recover.hpp"

#include <cmath>
#include <string>

namespace gfplin
{

namespace
{

void require_odd(int k)
{
  if (k % 2 == 0)
  {
    fail(ErrorCode::EvenDegree, "Delta(z) needs odd k, got k = " + std::to_string(k));
  }
}

Vector kron(const Vector &a, const Vector &x)
{
  const auto n = x.size();
  Vector out(a.size() * n);
  for (Eigen::Index i = 0; i < a.size(); i++)
  {
    out.segment(i * n, n) = a(i) * x;
  }
  return out;
}

}  // namespace

Matrix delta_matrix(const MatrixPolynomial &P, Complex z)
{
  const int n = P.dim(), k = P.grade();
  require_odd(k);
  const Matrix I = Matrix::Identity(n, n);
  Matrix D(n * k, n);
  // Blocks come in pairs (z^p I, z^p P_{2j+1}) with p = (k-1)/2 - j, then a final I.
  for (int j = 0; 2 * j + 1 < k; j++)
  {
    const Complex zp = std::pow(z, (k - 1) / 2 - j);
    D.block(2 * j * n, 0, n, n) = zp * I;
    D.block((2 * j + 1) * n, 0, n, n) = zp * horner_shift(P, 2 * j + 1, z);
  }
  D.block((k - 1) * n, 0, n, n) = I;
  return D;
}

Matrix delta_left_matrix(const MatrixPolynomial &P, Complex z)
{
  const int n = P.dim(), k = P.grade();
  require_odd(k);
  const Matrix I = Matrix::Identity(n, n);
  const Complex zc = std::conj(z);
  Matrix D(n * k, n);
  for (int j = 0; 2 * j + 1 < k; j++)
  {
    const Complex zp = std::pow(zc, (k - 1) / 2 - j);
    D.block(2 * j * n, 0, n, n) = zp * I;
    D.block((2 * j + 1) * n, 0, n, n) = zp * horner_shift(P, 2 * j + 1, z).adjoint();
  }
  D.block((k - 1) * n, 0, n, n) = I;
  return D;
}

Vector lambda_vector(Complex z, int k)
{
  if (k < 1)
  {
    fail(ErrorCode::InvalidArgument, "Lambda(z) needs k >= 1");
  }
  Vector v(k);
  v(k - 1) = 1.0;
  for (int i = k - 2; i >= 0; i--)
  {
    v(i) = z * v(i + 1);
  }
  return v;
}

PencilVectors lift_to_T(const MatrixPolynomial &P, const EigenTriple &t)
{
  return {delta_matrix(P, t.delta) * t.x, delta_left_matrix(P, t.delta) * t.y};
}

PencilVectors lift_to_R(const MatrixPolynomial &P, const EigenTriple &t)
{
  const auto M = structural_matrices(P.grade(), P.dim());
  const Matrix SR = M.S * M.R;
  auto [zr, zl] = lift_to_T(P, t);
  return {SR * zr, SR * zl};
}

PencilVectors lift_to_DL(const MatrixPolynomial &P, const EigenTriple &t)
{
  const Vector L = lambda_vector(t.delta, P.grade());
  return {kron(L, t.x), kron(L.conjugate(), t.y)};
}

PencilVectors lift_to_C1(const MatrixPolynomial &P, const EigenTriple &t)
{
  const int n = P.dim(), k = P.grade();
  Vector w(n * k);
  for (int i = 0; i < k; i++)
  {
    w.segment(i * n, n) = horner_shift(P, i, t.delta).adjoint() * t.y;
  }
  // P_0 = A_k; the leading block is I, not A_k.
  w.head(n) = t.y;
  return {kron(lambda_vector(t.delta, k), t.x), w};
}

PencilVectors lift(const MatrixPolynomial &P, const EigenTriple &t, LinearizationKind kind)
{
  switch (kind)
  {
    case LinearizationKind::T:
      return lift_to_T(P, t);
    case LinearizationKind::R:
      return lift_to_R(P, t);
    case LinearizationKind::D1:
    case LinearizationKind::Dk:
      return lift_to_DL(P, t);
    case LinearizationKind::C1:
      return lift_to_C1(P, t);
    case LinearizationKind::Custom:
      break;
  }
  fail(ErrorCode::InvalidArgument, "no eigenvector lift for a custom pencil");
}

Vector take_block(const Vector &z, int b, int n)
{
  if (n < 1 || b < 1 || static_cast<Eigen::Index>(b) * n > z.size())
  {
    fail(ErrorCode::IndexOutOfRange, "block " + std::to_string(b) + " out of range");
  }
  Vector x = z.segment(static_cast<Eigen::Index>(b - 1) * n, n);
  if (!(x.norm() > 1e-300))
  {
    fail(ErrorCode::ExtractionFailed, "selected block " + std::to_string(b) +
                                          " is numerically zero");
  }
  return x;
}

int extraction_block(LinearizationKind kind, Complex delta, int k)
{
  switch (kind)
  {
    case LinearizationKind::T:
    case LinearizationKind::R:
      return std::abs(delta) > 1.0 ? 1 : k;
    case LinearizationKind::C1:
      return std::abs(delta) >= 1.0 ? 1 : k;
    case LinearizationKind::D1:
      return 1;
    case LinearizationKind::Dk:
      return k;
    case LinearizationKind::Custom:
      break;
  }
  fail(ErrorCode::InvalidArgument, "no extraction rule for a custom pencil");
}

Vector extract_from_T(const Vector &z, Complex delta, int n, int k)
{
  require_odd(k);
  return take_block(z, extraction_block(LinearizationKind::T, delta, k), n);
}

Vector extract_from_R(const Vector &z, Complex delta, int n, int k)
{
  const auto M = structural_matrices(k, n);
  return extract_from_T(M.R * (M.S * z), delta, n, k);
}

Vector extract_from_Dt(const Vector &z, int t, int n, int k)
{
  if (t != 1 && t != k)
  {
    fail(ErrorCode::InvalidArgument, "D_t extraction needs t = 1 or t = k");
  }
  return take_block(z, t, n);
}

Vector extract_from_C1_right(const Vector &z, Complex delta, int n, int k)
{
  return take_block(z, extraction_block(LinearizationKind::C1, delta, k), n);
}

Vector extract_from_C1_left(const Vector &w, int n, int k)
{
  if (w.size() != static_cast<Eigen::Index>(n) * k)
  {
    fail(ErrorCode::InvalidArgument, "left vector size must equal n k");
  }
  return take_block(w, 1, n);
}

}  // namespace gfplin
