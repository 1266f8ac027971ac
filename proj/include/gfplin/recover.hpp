// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_RECOVER_HPP
#define GFPLIN_RECOVER_HPP

#include <utility>
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"

namespace gfplin
{

// Finite eigenvalue with right/left eigenvectors of P. Vectors are unit 2-norm when built by
// polyeig or oracle_problem.
struct EigenTriple
{
  Complex delta{0.0, 0.0};
  Vector x;
  Vector y;
  double residual_right = 0.0;
  double residual_left = 0.0;
  bool zero = false;  // delta == 0; excluded from conditioning metrics
};

// Right and left eigenvectors of a pencil at the same eigenvalue.
using PencilVectors = std::pair<Vector, Vector>;

// Block column Delta(z) of size kn x n for odd k.
Matrix delta_matrix(const MatrixPolynomial &P, Complex z);

// Block row used for left vectors of T_P: row i block is conj(z)^p P_i(z)^H, so that
// delta_left_matrix(P, z) * y is a left eigenvector whenever y^H P(z) = 0.
Matrix delta_left_matrix(const MatrixPolynomial &P, Complex z);

// (z^{k-1}, ..., z, 1).
Vector lambda_vector(Complex z, int k);

PencilVectors lift_to_T(const MatrixPolynomial &P, const EigenTriple &t);
PencilVectors lift_to_R(const MatrixPolynomial &P, const EigenTriple &t);
PencilVectors lift_to_DL(const MatrixPolynomial &P, const EigenTriple &t);
PencilVectors lift_to_C1(const MatrixPolynomial &P, const EigenTriple &t);
PencilVectors lift(const MatrixPolynomial &P, const EigenTriple &t, LinearizationKind kind);

Vector extract_from_T(const Vector &z, Complex delta, int n, int k);
Vector extract_from_R(const Vector &z, Complex delta, int n, int k);
Vector extract_from_Dt(const Vector &z, int t, int n, int k);
Vector extract_from_C1_right(const Vector &z, Complex delta, int n, int k);
Vector extract_from_C1_left(const Vector &w, int n, int k);

// 1-based block index used by each right extraction rule; D1 and Dk use t = 1 and t = k.
int extraction_block(LinearizationKind kind, Complex delta, int k);

// Block b (1-based) of a kn-vector, with the zero-block check.
Vector take_block(const Vector &z, int b, int n);

}  // namespace gfplin

#endif  // GFPLIN_RECOVER_HPP
