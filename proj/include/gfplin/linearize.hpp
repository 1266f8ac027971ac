// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_LINEARIZE_HPP
#define GFPLIN_LINEARIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include "gfplin/matpoly.hpp"

namespace gfplin
{

enum class LinearizationKind
{
  T,
  R,
  D1,
  Dk,
  C1,
  Custom
};

std::string_view to_string(LinearizationKind kind);
std::optional<LinearizationKind> parse_kind(std::string_view s);

// The pencil z L1 - L0 of size m = n k.
struct Pencil
{
  Matrix L1;
  Matrix L0;
  LinearizationKind kind = LinearizationKind::Custom;
  int n = 0;
  int k = 0;

  int size() const { return static_cast<int>(L1.rows()); }
};

// Block-symmetric block-tridiagonal pencil for odd grade k >= 3.
Pencil build_T(const MatrixPolynomial &P);

// S R T_P R S; strictly equivalent to T_P.
Pencil build_R(const MatrixPolynomial &P);

// First and last pencils of the standard basis of DL(P); k >= 2.
Pencil build_D1(const MatrixPolynomial &P);
Pencil build_Dk(const MatrixPolynomial &P);

// First Frobenius companion form; k >= 2.
Pencil build_C1(const MatrixPolynomial &P);

Pencil build(const MatrixPolynomial &P, LinearizationKind kind);

Matrix pencil_eval(const Pencil &L, Complex z);

// Pencil viewed as the grade-1 polynomial -L0 + z L1.
MatrixPolynomial as_polynomial(const Pencil &L);

struct StructuralMatrices
{
  Matrix R;  // block anti-identity
  Matrix S;  // block signature, -I on 1-based blocks i = 0, 1 mod 4
  Matrix D;  // diag(I, -I, I, ..., I)
};

StructuralMatrices structural_matrices(int k, int n);

// Sign of the S block at 1-based block index i.
int s_block_sign(int i);

struct LinearizationReport
{
  bool pass = false;
  bool forward_pass = false;
  bool reversal_pass = false;
  Complex constant{0.0, 0.0};          // det L(z) / det P(z)
  Complex reversal_constant{0.0, 0.0};  // det rev L(z) / det rev P(z)
  double forward_spread = 0.0;
  double reversal_spread = 0.0;
  int samples = 0;
  std::string message;
};

// Randomized check that det L(z) = c det P(z) and det revL(z) = c' det revP(z) for single
// nonzero constants c, c'. At least n k + 1 sample points are used per check.
LinearizationReport verify_strong_linearization(const Pencil &L, const MatrixPolynomial &P,
                                                int trials = 0, std::uint64_t seed = 1);

// log|det A| and det A / |det A| from an LU factorization.
struct LogDet
{
  double log_abs = 0.0;
  Complex phase{1.0, 0.0};
  bool singular = false;
};

LogDet log_determinant(const Matrix &A);

}  // namespace gfplin

#endif  // GFPLIN_LINEARIZE_HPP
