// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. None of these call into the
// library routines they are used to check.

#ifndef GFPLIN_TESTS_ORACLES_HPP
#define GFPLIN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>
#include <Eigen/Dense>
#include "gfplin/matpoly.hpp"

namespace gfplin::oracle
{

// Monomial sum with explicit powers.
inline Matrix naive_eval(const std::vector<Matrix> &A, Complex z)
{
  Matrix S = Matrix::Zero(A[0].rows(), A[0].cols());
  for (std::size_t i = 0; i < A.size(); i++)
  {
    S += std::pow(z, static_cast<int>(i)) * A[i];
  }
  return S;
}

inline Matrix central_difference(const std::vector<Matrix> &A, Complex z, double h)
{
  return (naive_eval(A, z + h) - naive_eval(A, z - h)) / (2.0 * h);
}

// Largest singular value by power iteration on A^H A.
inline double power_iteration_norm(const Matrix &A, int iters = 2000)
{
  Vector v = Vector::Ones(A.cols());
  double lam = 0.0;
  for (int it = 0; it < iters; it++)
  {
    Vector w = A.adjoint() * (A * v);
    const double nw = w.norm();
    if (nw == 0.0)
    {
      return 0.0;
    }
    const double next = nw / v.norm();
    v = w / nw;
    if (it > 10 && std::abs(next - lam) <= 1e-16 * next)
    {
      lam = next;
      break;
    }
    lam = next;
  }
  return std::sqrt(lam);
}

// Tropical roots by checking every pair (i, j): gamma is a root when the maximum of
// w_l gamma^l is attained at both i and j.
inline std::vector<double> tropical_roots_all_pairs(const std::vector<double> &w)
{
  std::vector<double> roots;
  for (std::size_t i = 0; i < w.size(); i++)
  {
    for (std::size_t j = i + 1; j < w.size(); j++)
    {
      if (w[i] <= 0.0 || w[j] <= 0.0)
      {
        continue;
      }
      const double g = std::pow(w[i] / w[j], 1.0 / static_cast<double>(j - i));
      const double vi = w[i] * std::pow(g, static_cast<double>(i));
      bool top = true;
      for (std::size_t l = 0; l < w.size(); l++)
      {
        if (w[l] * std::pow(g, static_cast<double>(l)) > vi * (1.0 + 1e-12))
        {
          top = false;
        }
      }
      if (top)
      {
        const bool seen = std::any_of(roots.begin(), roots.end(), [g](double r)
                                      { return std::abs(r - g) <= 1e-10 * g; });
        if (!seen)
        {
          roots.push_back(g);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// d1 by a flat double loop over (r, s) pairs.
inline double d1_double_loop(double a, int k)
{
  const int h = (k - 1) / 2;
  double out = 0.0;
  for (int r = 0; r <= h; r++)
  {
    for (int s = 0; s <= k; s++)
    {
      if (s == r)
      {
        out += std::pow(a, 2.0 * s);
      }
      if (r >= 1 && s >= r && s <= k - r)
      {
        out += (k - 2 * r + 1) * std::pow(a, 2.0 * s);
      }
    }
  }
  return out;
}

// Eigenvalues of P with nonsingular leading coefficient, from the monic companion matrix and
// Eigen's standard eigensolver.
inline std::vector<Complex> companion_spectrum(const std::vector<Matrix> &A)
{
  const int k = static_cast<int>(A.size()) - 1;
  const int n = static_cast<int>(A[0].rows());
  const auto lu = A[k].fullPivLu();
  Matrix C = Matrix::Zero(n * k, n * k);
  for (int j = 0; j < k; j++)
  {
    C.block(0, j * n, n, n) = -lu.solve(A[k - 1 - j]);
  }
  for (int b = 1; b < k; b++)
  {
    C.block(b * n, (b - 1) * n, n, n) = Matrix::Identity(n, n);
  }
  Eigen::ComplexEigenSolver<Matrix> es(C, false);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + n * k);
  return out;
}

// Largest relative distance after greedily matching each element of a to its nearest
// unmatched element of b. Returns infinity on size mismatch.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b)
{
  if (a.size() != b.size())
  {
    return std::numeric_limits<double>::infinity();
  }
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto &x : a)
  {
    std::size_t best = b.size();
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); j++)
    {
      if (!used[j] && std::abs(x - b[j]) < bd)
      {
        bd = std::abs(x - b[j]);
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, bd / std::max(std::abs(x), 1e-300));
  }
  return worst;
}

// Angle between two vectors, insensitive to a complex scalar factor. Computed from the
// projection residual, which stays accurate for nearly parallel vectors where acos does not.
inline double projective_angle(const Vector &a, const Vector &b)
{
  const Vector u = a / a.norm(), v = b / b.norm();
  const double s = (u - v.dot(u) * v).norm();
  return std::asin(std::min(1.0, s));
}

inline Matrix random_matrix(int n, SplitMix64 &rng, bool complex_entries = true)
{
  Matrix A(n, n);
  for (int i = 0; i < n; i++)
  {
    for (int j = 0; j < n; j++)
    {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = complex_entries ? rng.uniform(-1.0, 1.0) : 0.0;
      A(i, j) = Complex(re, im);
    }
  }
  return A;
}

inline MatrixPolynomial random_complex_polynomial(int n, int k, std::uint64_t seed,
                                                  bool hermitian = false)
{
  SplitMix64 rng(seed);
  std::vector<Matrix> c;
  for (int i = 0; i <= k; i++)
  {
    Matrix A = random_matrix(n, rng);
    if (hermitian)
    {
      A = (A + A.adjoint()).eval() * 0.5;
    }
    c.push_back(A);
  }
  return MatrixPolynomial(std::move(c));
}

inline Complex random_point(SplitMix64 &rng, double rmin = 0.2, double rmax = 3.0)
{
  return std::polar(rng.uniform(rmin, rmax), rng.uniform(0.0, 6.283185307179586));
}

}  // namespace gfplin::oracle

#endif  // GFPLIN_TESTS_ORACLES_HPP
