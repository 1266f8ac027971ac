// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_METRICS_HPP
#define GFPLIN_METRICS_HPP

#include <optional>
#include <vector>
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"
#include "gfplin/recover.hpp"

namespace gfplin
{

// Relative threshold for the simplicity test |y^H P'(delta) x| > tol.
inline constexpr double default_simple_rtol = 1e-12;

// kappa_P(delta). Weights default to the natural weights ||A_i||_2.
double cond_number(const MatrixPolynomial &P, Complex delta, const Vector &x, const Vector &y,
                   const std::optional<std::vector<double>> &weights = std::nullopt,
                   double simple_rtol = default_simple_rtol);

double cond_number(const MatrixPolynomial &P, const EigenTriple &t,
                   const std::optional<std::vector<double>> &weights = std::nullopt,
                   double simple_rtol = default_simple_rtol);

struct PencilNorms
{
  double l1 = 0.0;
  double l0 = 0.0;
};

PencilNorms pencil_norms(const Pencil &L);

// Grade-1 specialization with weights ||L1||_2, ||L0||_2.
double cond_number_pencil(const Pencil &L, Complex delta, const Vector &z_right,
                          const Vector &z_left, double simple_rtol = default_simple_rtol);
double cond_number_pencil(const Pencil &L, const PencilNorms &w, Complex delta,
                          const Vector &z_right, const Vector &z_left,
                          double simple_rtol = default_simple_rtol);

// eta_P(x, delta) and its left counterpart built on y^H P(delta). The overloads taking norms
// reuse precomputed ||A_i||_2.
double backward_error_right(const MatrixPolynomial &P, const Vector &x, Complex delta);
double backward_error_left(const MatrixPolynomial &P, const Vector &y, Complex delta);
double backward_error_right(const MatrixPolynomial &P, const std::vector<double> &norms,
                            const Vector &x, Complex delta);
double backward_error_left(const MatrixPolynomial &P, const std::vector<double> &norms,
                           const Vector &y, Complex delta);

// eta_L for a pencil, right and left.
double backward_error_pencil_right(const Pencil &L, const Vector &z, Complex delta);
double backward_error_pencil_left(const Pencil &L, const Vector &w, Complex delta);
double backward_error_pencil_right(const Pencil &L, const PencilNorms &w, const Vector &z,
                                   Complex delta);
double backward_error_pencil_left(const Pencil &L, const PencilNorms &w, const Vector &v,
                                  Complex delta);

// Nonsingular in the sense sigma_min > n eps sigma_max.
bool is_nonsingular(const Matrix &A);

struct GrowthFactors
{
  double rho = 1.0;
  double rho1 = 1.0;
  double rho2 = 1.0;
  double rho_prime = 1.0;
  double nu = 1.0;
  double tau = 1.0;
};

GrowthFactors growth_factors(const MatrixPolynomial &P);

// Same factors straight from the coefficient norms w_0..w_k.
GrowthFactors growth_factors(const std::vector<double> &norms);

// Power sum bounding ||Delta(delta)||_2^2, for odd k >= 3.
double d1(Complex delta, int k);

struct BoundPair
{
  double lower = 0.0;
  double upper = 0.0;
};

// True when the tightened bound of the block-tridiagonal theorems applies.
bool t_bounds_tightened(Complex delta, int k);
bool c1_cond_tightened(Complex delta, int k);

BoundPair bound_T_cond(const GrowthFactors &g, Complex delta, int k);
double bound_T_back(const GrowthFactors &g, Complex delta, int k, double norm_ratio);

// Applicability: (t = 1 and |delta| >= 1) or (t = k and |delta| <= 1), plus a nonsingular
// A_0 (t = 1) or A_k (t = k). Throws NotApplicable otherwise.
void require_Dt_applicable(const MatrixPolynomial &P, Complex delta, int t);
BoundPair bound_Dt_cond(const GrowthFactors &g, int k);
double bound_Dt_back(const GrowthFactors &g, int k, double norm_ratio);

BoundPair bound_C1_cond(const GrowthFactors &g, Complex delta, int k);

enum class Side
{
  Right,
  Left
};

double bound_C1_back(const GrowthFactors &g, int k, double norm_ratio, Side side);

// Convenience overloads computing the growth factors from P.
BoundPair bound_T_cond(const MatrixPolynomial &P, Complex delta);
double bound_T_back(const MatrixPolynomial &P, Complex delta, double norm_ratio);
BoundPair bound_Dt_cond(const MatrixPolynomial &P, Complex delta, int t);
double bound_Dt_back(const MatrixPolynomial &P, double norm_ratio, int t);
BoundPair bound_C1_cond(const MatrixPolynomial &P, Complex delta);
double bound_C1_back(const MatrixPolynomial &P, double norm_ratio, Side side);

// ratio in [lower (1 - rtol), upper (1 + rtol)].
bool within_bounds(double ratio, double lower, double upper, double rtol = 1e-10);
bool below_upper(double ratio, double upper, double rtol = 1e-10);

}  // namespace gfplin

#endif  // GFPLIN_METRICS_HPP
