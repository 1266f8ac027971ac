// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <Eigen/SVD>

namespace gfplin
{

namespace
{

double weighted_sum(const std::vector<double> &w, double r)
{
  double s = 0.0, p = 1.0;
  for (double wi : w)
  {
    s += wi * p;
    p *= r;
  }
  return s;
}

void require_finite_nonzero(Complex delta)
{
  if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag()))
  {
    fail(ErrorCode::ExcludedEigenvalue, "infinite eigenvalues are excluded");
  }
  if (delta == 0.0)
  {
    fail(ErrorCode::ExcludedEigenvalue, "zero eigenvalues are excluded");
  }
}

double residual_ratio(double residual, const std::vector<double> &norms, double vnorm,
                      Complex delta)
{
  if (vnorm == 0.0)
  {
    fail(ErrorCode::InvalidArgument, "backward error needs a nonzero vector");
  }
  const double s = weighted_sum(norms, std::abs(delta));
  if (s == 0.0)
  {
    fail(ErrorCode::ZeroPolynomial, "backward error of the zero polynomial");
  }
  return residual / (s * vnorm);
}

}  // namespace

double cond_number(const MatrixPolynomial &P, Complex delta, const Vector &x, const Vector &y,
                   const std::optional<std::vector<double>> &weights, double simple_rtol)
{
  require_finite_nonzero(delta);
  const int k = P.grade();
  const std::vector<double> w = weights ? *weights : coeff_norms(P);
  if (static_cast<int>(w.size()) != k + 1)
  {
    fail(ErrorCode::InvalidArgument, "weights must have k + 1 entries");
  }
  const double r = std::abs(delta);
  const double denom = std::abs(y.dot(eval_derivative(P, delta) * x));
  // sum_i i |delta|^{i-1} w_i
  double dsum = 0.0, p = 1.0;
  for (int i = 1; i <= k; i++)
  {
    dsum += i * p * w[i];
    p *= r;
  }
  const double tol = simple_rtol * x.norm() * y.norm() * dsum;
  if (!(denom > tol))
  {
    fail(ErrorCode::NotSimple, "eigenvalue numerically non-simple: |y^H P'(delta) x| = " +
                                   std::to_string(denom));
  }
  return weighted_sum(w, r) * x.norm() * y.norm() / (r * denom);
}

double cond_number(const MatrixPolynomial &P, const EigenTriple &t,
                   const std::optional<std::vector<double>> &weights, double simple_rtol)
{
  return cond_number(P, t.delta, t.x, t.y, weights, simple_rtol);
}

PencilNorms pencil_norms(const Pencil &L)
{
  return {spectral_norm(L.L1), spectral_norm(L.L0)};
}

double cond_number_pencil(const Pencil &L, Complex delta, const Vector &z_right,
                          const Vector &z_left, double simple_rtol)
{
  return cond_number_pencil(L, pencil_norms(L), delta, z_right, z_left, simple_rtol);
}

double cond_number_pencil(const Pencil &L, const PencilNorms &w, Complex delta,
                          const Vector &z_right, const Vector &z_left, double simple_rtol)
{
  require_finite_nonzero(delta);
  const double r = std::abs(delta);
  const double denom = std::abs(z_left.dot(L.L1 * z_right));
  const double tol = simple_rtol * z_right.norm() * z_left.norm() * w.l1;
  if (!(denom > tol))
  {
    fail(ErrorCode::NotSimple, "pencil eigenvalue numerically non-simple");
  }
  return (r * w.l1 + w.l0) * z_right.norm() * z_left.norm() / (r * denom);
}

double backward_error_right(const MatrixPolynomial &P, const Vector &x, Complex delta)
{
  return backward_error_right(P, coeff_norms(P), x, delta);
}

double backward_error_left(const MatrixPolynomial &P, const Vector &y, Complex delta)
{
  return backward_error_left(P, coeff_norms(P), y, delta);
}

double backward_error_right(const MatrixPolynomial &P, const std::vector<double> &norms,
                            const Vector &x, Complex delta)
{
  return residual_ratio((eval(P, delta) * x).norm(), norms, x.norm(), delta);
}

double backward_error_left(const MatrixPolynomial &P, const std::vector<double> &norms,
                           const Vector &y, Complex delta)
{
  return residual_ratio((eval(P, delta).adjoint() * y).norm(), norms, y.norm(), delta);
}

double backward_error_pencil_right(const Pencil &L, const Vector &z, Complex delta)
{
  return backward_error_pencil_right(L, pencil_norms(L), z, delta);
}

double backward_error_pencil_left(const Pencil &L, const Vector &w, Complex delta)
{
  return backward_error_pencil_left(L, pencil_norms(L), w, delta);
}

double backward_error_pencil_right(const Pencil &L, const PencilNorms &w, const Vector &z,
                                   Complex delta)
{
  return residual_ratio((pencil_eval(L, delta) * z).norm(), {w.l0, w.l1}, z.norm(), delta);
}

double backward_error_pencil_left(const Pencil &L, const PencilNorms &w, const Vector &v,
                                  Complex delta)
{
  return residual_ratio((pencil_eval(L, delta).adjoint() * v).norm(), {w.l0, w.l1}, v.norm(),
                        delta);
}

bool is_nonsingular(const Matrix &A)
{
  const auto s = Eigen::BDCSVD<Matrix>(A).singularValues();
  if (s.size() == 0 || s(0) == 0.0)
  {
    return false;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  return s(s.size() - 1) > static_cast<double>(A.rows()) * eps * s(0);
}

GrowthFactors growth_factors(const std::vector<double> &w)
{
  if (w.size() < 2)
  {
    fail(ErrorCode::InvalidArgument, "growth factors need k >= 1");
  }
  const double w0 = w.front(), wk = w.back();
  if (w0 == 0.0 || wk == 0.0)
  {
    fail(ErrorCode::ZeroCoefficient, "growth factors need nonzero A_0 and A_k");
  }
  const double mn = std::min(w0, wk);
  const double mx = *std::max_element(w.begin(), w.end());
  const double mx1 = std::max(1.0, mx);
  const double mx1_low = std::max(1.0, *std::max_element(w.begin(), w.end() - 1));

  GrowthFactors g;
  g.rho = mx / mn;
  g.rho1 = mx1 * mx1 * mx1 / mn;
  g.rho2 = std::min(std::max(1.0, wk), std::max(1.0, w0)) / mx;
  g.rho_prime = mx1 * mx1 / mn;
  g.nu = std::min(std::max(1.0, wk), mx1_low) / mx;
  g.tau = mx1 / mn;
  return g;
}

GrowthFactors growth_factors(const MatrixPolynomial &P)
{
  return growth_factors(coeff_norms(P));
}

double d1(Complex delta, int k)
{
  if (k % 2 == 0 || k < 3)
  {
    fail(ErrorCode::EvenDegree, "d1 needs odd k >= 3, got k = " + std::to_string(k));
  }
  const double a2 = std::norm(delta);
  const int h = (k - 1) / 2;
  std::vector<double> pw(k + 1, 1.0);
  for (int s = 1; s <= k; s++)
  {
    pw[s] = pw[s - 1] * a2;
  }
  double out = 0.0;
  for (int r = 0; r <= h; r++)
  {
    out += pw[r];
  }
  for (int r = 1; r <= h; r++)
  {
    double inner = 0.0;
    for (int s = r; s <= k - r; s++)
    {
      inner += pw[s];
    }
    out += (k - 2 * r + 1) * inner;
  }
  return out;
}

bool t_bounds_tightened(Complex delta, int k)
{
  const double r = std::abs(delta);
  if (std::abs(r - 1.0) <= 1e-12 || k < 3)
  {
    return false;
  }
  return std::min(r, 1.0 / r) <= 1.0 / (k - 1);
}

bool c1_cond_tightened(Complex delta, int k)
{
  const double r = std::abs(delta);
  return r >= std::sqrt(std::pow(k - 1.0, 3)) || r <= 0.5;
}

BoundPair bound_T_cond(const GrowthFactors &g, Complex delta, int k)
{
  const double kk = k;
  const double upper = t_bounds_tightened(delta, k) ? 4.0 * (kk + 1.0) * g.rho1
                                                    : 2.0 * kk * kk * kk * g.rho1;
  return {g.rho2, upper};
}

double bound_T_back(const GrowthFactors &g, Complex delta, int k, double norm_ratio)
{
  const double kk = k;
  const double c = t_bounds_tightened(delta, k) ? 4.0 * std::sqrt(kk + 1.0)
                                                : 4.0 * std::pow(kk, 1.5);
  return c * norm_ratio * g.rho_prime;
}

void require_Dt_applicable(const MatrixPolynomial &P, Complex delta, int t)
{
  const int k = P.grade();
  const double r = std::abs(delta);
  if (t == 1)
  {
    if (r < 1.0)
    {
      fail(ErrorCode::NotApplicable, "D_1 bound needs |delta| >= 1");
    }
    if (!is_nonsingular(P.coeff(0)))
    {
      fail(ErrorCode::NotApplicable, "D_1 bound needs nonsingular A_0");
    }
    return;
  }
  if (t == k)
  {
    if (r > 1.0)
    {
      fail(ErrorCode::NotApplicable, "D_k bound needs |delta| <= 1");
    }
    if (!is_nonsingular(P.coeff(k)))
    {
      fail(ErrorCode::NotApplicable, "D_k bound needs nonsingular A_k");
    }
    return;
  }
  fail(ErrorCode::InvalidArgument, "D_t bounds need t = 1 or t = k");
}

BoundPair bound_Dt_cond(const GrowthFactors &g, int k)
{
  const double kk = k;
  return {1.0 / g.rho, kk * kk * g.rho};
}

double bound_Dt_back(const GrowthFactors &g, int k, double norm_ratio)
{
  return std::pow(static_cast<double>(k), 1.5) * norm_ratio * g.rho;
}

BoundPair bound_C1_cond(const GrowthFactors &g, Complex delta, int k)
{
  const double kk = k;
  const double upper = c1_cond_tightened(delta, k) ? (4.0 / 3.0) * kk * (kk + 1.0) * g.rho_prime
                                                   : 2.0 * std::sqrt(2.0) * kk * kk * kk *
                                                         g.rho_prime;
  return {g.nu / (kk + 1.0), upper};
}

double bound_C1_back(const GrowthFactors &g, int k, double norm_ratio, Side side)
{
  const double kk = k;
  if (side == Side::Right)
  {
    return std::pow(kk, 2.5) * norm_ratio * g.rho_prime;
  }
  return std::pow(kk, 1.5) * norm_ratio * g.tau;
}

BoundPair bound_T_cond(const MatrixPolynomial &P, Complex delta)
{
  require_finite_nonzero(delta);
  return bound_T_cond(growth_factors(P), delta, P.grade());
}

double bound_T_back(const MatrixPolynomial &P, Complex delta, double norm_ratio)
{
  return bound_T_back(growth_factors(P), delta, P.grade(), norm_ratio);
}

BoundPair bound_Dt_cond(const MatrixPolynomial &P, Complex delta, int t)
{
  require_Dt_applicable(P, delta, t);
  return bound_Dt_cond(growth_factors(P), P.grade());
}

double bound_Dt_back(const MatrixPolynomial &P, double norm_ratio, int t)
{
  if (t != 1 && t != P.grade())
  {
    fail(ErrorCode::InvalidArgument, "D_t bounds need t = 1 or t = k");
  }
  return bound_Dt_back(growth_factors(P), P.grade(), norm_ratio);
}

BoundPair bound_C1_cond(const MatrixPolynomial &P, Complex delta)
{
  require_finite_nonzero(delta);
  return bound_C1_cond(growth_factors(P), delta, P.grade());
}

double bound_C1_back(const MatrixPolynomial &P, double norm_ratio, Side side)
{
  return bound_C1_back(growth_factors(P), P.grade(), norm_ratio, side);
}

bool within_bounds(double ratio, double lower, double upper, double rtol)
{
  return ratio >= lower * (1.0 - rtol) && ratio <= upper * (1.0 + rtol);
}

bool below_upper(double ratio, double upper, double rtol)
{
  return ratio <= upper * (1.0 + rtol);
}

}  // namespace gfplin
