// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gfplin
{

MatrixPolynomial::MatrixPolynomial(int n, int k)
{
  if (n < 1 || k < 0)
  {
    fail(ErrorCode::InvalidArgument, "matrix polynomial needs n >= 1 and k >= 0");
  }
  n_ = n;
  coeffs_.assign(static_cast<std::size_t>(k) + 1, Matrix::Zero(n, n));
}

MatrixPolynomial::MatrixPolynomial(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs))
{
  if (coeffs_.empty())
  {
    fail(ErrorCode::InvalidArgument, "matrix polynomial needs at least one coefficient");
  }
  n_ = static_cast<int>(coeffs_.front().rows());
  if (n_ < 1)
  {
    fail(ErrorCode::InvalidArgument, "matrix polynomial coefficients must be nonempty");
  }
  for (const auto &A : coeffs_)
  {
    if (A.rows() != n_ || A.cols() != n_)
    {
      fail(ErrorCode::InvalidArgument, "all coefficients must be square of the same size");
    }
  }
}

int MatrixPolynomial::degree() const
{
  for (int i = grade(); i >= 0; i--)
  {
    if (!coeffs_[i].isZero(0.0))
    {
      return i;
    }
  }
  return -1;
}

const Matrix &MatrixPolynomial::coeff(int i) const
{
  if (i < 0 || i > grade())
  {
    fail(ErrorCode::IndexOutOfRange, "coefficient index " + std::to_string(i) + " out of range");
  }
  return coeffs_[i];
}

Matrix &MatrixPolynomial::coeff(int i)
{
  if (i < 0 || i > grade())
  {
    fail(ErrorCode::IndexOutOfRange, "coefficient index " + std::to_string(i) + " out of range");
  }
  return coeffs_[i];
}

bool MatrixPolynomial::is_hermitian(double tol) const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](const Matrix &A)
                     { return (A - A.adjoint()).cwiseAbs().maxCoeff() <= tol; });
}

bool MatrixPolynomial::operator==(const MatrixPolynomial &other) const
{
  if (n_ != other.n_ || coeffs_.size() != other.coeffs_.size())
  {
    return false;
  }
  for (std::size_t i = 0; i < coeffs_.size(); i++)
  {
    if (coeffs_[i] != other.coeffs_[i])
    {
      return false;
    }
  }
  return true;
}

std::string_view to_string(ScalingProvenance p)
{
  switch (p)
  {
    case ScalingProvenance::MaxNorm:
      return "max_norm";
    case ScalingProvenance::Tropical:
      return "tropical";
    case ScalingProvenance::User:
      return "user";
  }
  return "user";
}

ScalingSpec ScalingSpec::user(Complex beta, Complex gamma)
{
  if (beta == 0.0 || gamma == 0.0)
  {
    fail(ErrorCode::InvalidArgument, "scaling parameters beta and gamma must be nonzero");
  }
  return {beta, gamma, ScalingProvenance::User};
}

double spectral_norm(const Matrix &A)
{
  if (A.size() == 0)
  {
    return 0.0;
  }
  Eigen::BDCSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

Matrix eval(const MatrixPolynomial &P, Complex z)
{
  return horner_shift(P, P.grade(), z);
}

Matrix eval_derivative(const MatrixPolynomial &P, Complex z)
{
  const int k = P.grade();
  Matrix D = Matrix::Zero(P.dim(), P.dim());
  for (int i = k; i >= 1; i--)
  {
    D = z * D + static_cast<double>(i) * P.coeff(i);
  }
  return D;
}

MatrixPolynomial reversal(const MatrixPolynomial &P)
{
  std::vector<Matrix> c(P.coeffs().rbegin(), P.coeffs().rend());
  return MatrixPolynomial(std::move(c));
}

Matrix horner_shift(const MatrixPolynomial &P, int i, Complex z)
{
  const int k = P.grade();
  if (i < 0 || i > k)
  {
    fail(ErrorCode::IndexOutOfRange, "Horner shift index " + std::to_string(i) +
                                         " outside 0.." + std::to_string(k));
  }
  Matrix H = P.coeff(k);
  for (int j = 1; j <= i; j++)
  {
    H = z * H + P.coeff(k - j);
  }
  return H;
}

Matrix lower_truncation(const MatrixPolynomial &P, int i, Complex z)
{
  const int k = P.grade();
  if (i < 0 || i > k)
  {
    fail(ErrorCode::IndexOutOfRange, "truncation index " + std::to_string(i) + " outside 0.." +
                                         std::to_string(k));
  }
  Matrix H = P.coeff(i);
  for (int j = i - 1; j >= 0; j--)
  {
    H = z * H + P.coeff(j);
  }
  return H;
}

MatrixPolynomial scale(const MatrixPolynomial &P, const ScalingSpec &s)
{
  if (s.beta == 0.0 || s.gamma == 0.0)
  {
    fail(ErrorCode::InvalidArgument, "scaling parameters beta and gamma must be nonzero");
  }
  std::vector<Matrix> c;
  c.reserve(P.coeffs().size());
  Complex f = s.beta;
  for (const auto &A : P.coeffs())
  {
    c.push_back(f * A);
    f *= s.gamma;
  }
  return MatrixPolynomial(std::move(c));
}

std::vector<double> coeff_norms(const MatrixPolynomial &P)
{
  std::vector<double> w;
  w.reserve(P.coeffs().size());
  for (const auto &A : P.coeffs())
  {
    w.push_back(spectral_norm(A));
  }
  return w;
}

ScalingSpec max_norm_scaling(const MatrixPolynomial &P)
{
  const auto w = coeff_norms(P);
  const double m = *std::max_element(w.begin(), w.end());
  if (m == 0.0)
  {
    fail(ErrorCode::ZeroPolynomial, "max-norm scaling of the zero polynomial");
  }
  return {Complex(1.0 / m, 0.0), Complex(1.0, 0.0), ScalingProvenance::MaxNorm};
}

std::vector<double> tropical_roots(const std::vector<double> &weights)
{
  // Points (i, log w_i) with w_i > 0, already sorted by i.
  std::vector<std::pair<int, double>> pts;
  for (std::size_t i = 0; i < weights.size(); i++)
  {
    if (weights[i] > 0.0)
    {
      pts.emplace_back(static_cast<int>(i), std::log(weights[i]));
    }
  }
  if (pts.empty())
  {
    fail(ErrorCode::ZeroPolynomial, "tropical roots of an all-zero weight sequence");
  }

  // Monotone chain upper hull.
  std::vector<std::pair<int, double>> hull;
  for (const auto &p : pts)
  {
    while (hull.size() >= 2)
    {
      const auto &a = hull[hull.size() - 2];
      const auto &b = hull[hull.size() - 1];
      // Drop b if it lies on or below the segment a -> p.
      const double cross = (b.first - a.first) * (p.second - a.second) -
                           (b.second - a.second) * (p.first - a.first);
      if (cross >= 0.0)
      {
        hull.pop_back();
      }
      else
      {
        break;
      }
    }
    hull.push_back(p);
  }

  std::vector<double> roots;
  for (std::size_t j = 0; j + 1 < hull.size(); j++)
  {
    const auto &[i1, l1] = hull[j];
    const auto &[i2, l2] = hull[j + 1];
    roots.push_back(std::exp((l1 - l2) / (i2 - i1)));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<ScalingSpec> tropical_scalings(const MatrixPolynomial &P)
{
  const auto w = coeff_norms(P);
  const auto roots = tropical_roots(w);
  std::vector<ScalingSpec> out;
  if (roots.empty())
  {
    // A single hull vertex: t(x) is a monomial and has no finite nonzero tropical root.
    const double m = *std::max_element(w.begin(), w.end());
    out.push_back({Complex(1.0 / m, 0.0), Complex(1.0, 0.0), ScalingProvenance::Tropical});
    return out;
  }
  for (double g : roots)
  {
    double t = 0.0;
    for (std::size_t i = 0; i < w.size(); i++)
    {
      t = std::max(t, w[i] * std::pow(g, static_cast<double>(i)));
    }
    out.push_back({Complex(1.0 / t, 0.0), Complex(g, 0.0), ScalingProvenance::Tropical});
  }
  return out;
}

std::pair<int, MatrixPolynomial> deflate_zero_root(const MatrixPolynomial &P)
{
  const int k = P.grade();
  for (int s = 0; s <= k; s++)
  {
    if (!P.coeff(s).isZero(0.0))
    {
      std::vector<Matrix> c(P.coeffs().begin() + s, P.coeffs().end());
      return {s, MatrixPolynomial(std::move(c))};
    }
  }
  fail(ErrorCode::ZeroPolynomial, "cannot deflate the zero polynomial");
}

std::uint64_t SplitMix64::next()
{
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform_closed()
{
  constexpr double denom = static_cast<double>((std::uint64_t{1} << 53) - 1);
  return static_cast<double>(next() >> 11) / denom;
}

MatrixPolynomial random_polynomial(int n, int k, std::uint64_t seed)
{
  if (n < 1 || k < 1)
  {
    fail(ErrorCode::InvalidArgument, "random polynomial needs n >= 1 and k >= 1");
  }
  SplitMix64 rng(seed);
  MatrixPolynomial P(n, k);
  for (int i = 0; i <= k; i++)
  {
    for (int r = 0; r < n; r++)
    {
      for (int c = 0; c < n; c++)
      {
        P.coeff(i)(r, c) = rng.uniform(-50.0, 50.0);
      }
    }
  }
  return P;
}

}  // namespace gfplin
