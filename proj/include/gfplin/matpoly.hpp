// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_MATPOLY_HPP
#define GFPLIN_MATPOLY_HPP

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>
#include "gfplin/types.hpp"

namespace gfplin
{

// Square matrix polynomial P(z) = sum_i A_i z^i of fixed grade k. Coefficients are stored
// in ascending powers; the degree (largest i with A_i != 0) is derived, never stored.
class MatrixPolynomial
{
public:
  MatrixPolynomial() = default;

  // Zero polynomial of dimension n and grade k.
  MatrixPolynomial(int n, int k);

  // Takes ownership of the coefficients A_0..A_k. All must be square of equal size.
  explicit MatrixPolynomial(std::vector<Matrix> coeffs);

  int dim() const { return n_; }
  int grade() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree() const;

  const Matrix &coeff(int i) const;
  Matrix &coeff(int i);
  const std::vector<Matrix> &coeffs() const { return coeffs_; }

  bool is_zero() const { return degree() < 0; }
  bool is_hermitian(double tol = 0.0) const;

  bool operator==(const MatrixPolynomial &other) const;

private:
  int n_ = 0;
  std::vector<Matrix> coeffs_;
};

enum class ScalingProvenance
{
  MaxNorm,
  Tropical,
  User
};

std::string_view to_string(ScalingProvenance p);

// Eigenvalue-parameter scaling P~(mu) = beta P(gamma mu).
struct ScalingSpec
{
  Complex beta{1.0, 0.0};
  Complex gamma{1.0, 0.0};
  ScalingProvenance provenance = ScalingProvenance::User;

  static ScalingSpec user(Complex beta, Complex gamma);
};

// Largest singular value, from a full SVD.
double spectral_norm(const Matrix &A);

Matrix eval(const MatrixPolynomial &P, Complex z);
Matrix eval_derivative(const MatrixPolynomial &P, Complex z);
MatrixPolynomial reversal(const MatrixPolynomial &P);

// i-th Horner shift z^i A_k + ... + z A_{k-i+1} + A_{k-i}.
Matrix horner_shift(const MatrixPolynomial &P, int i, Complex z);

// Degree-i lower truncation z^i A_i + ... + A_0.
Matrix lower_truncation(const MatrixPolynomial &P, int i, Complex z);

MatrixPolynomial scale(const MatrixPolynomial &P, const ScalingSpec &s);
ScalingSpec max_norm_scaling(const MatrixPolynomial &P);

// One scaling per tropical root of t(x) = max_i ||A_i||_2 x^i, sorted by gamma ascending.
std::vector<ScalingSpec> tropical_scalings(const MatrixPolynomial &P);

// Tropical roots alone, from the upper Newton polygon of (i, log w_i). Zero weights are
// excluded from the hull.
std::vector<double> tropical_roots(const std::vector<double> &weights);

// Returns (s, P1) with P = z^s P1 and P1 having nonzero constant term.
std::pair<int, MatrixPolynomial> deflate_zero_root(const MatrixPolynomial &P);

std::vector<double> coeff_norms(const MatrixPolynomial &P);

// Counter-based SplitMix64 stream. Output i is mix(seed + (i + 1) * 0x9E3779B97F4A7C15),
// so a (seed, index) pair always yields the same 64 bits on every platform.
class SplitMix64
{
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform on the closed interval [0, 1] with 53-bit resolution.
  double uniform_closed();

  // Uniform on [lo, hi], closed.
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_closed(); }

private:
  std::uint64_t state_;
};

// Real entries i.i.d. uniform on [-50, 50]. Entries are drawn coefficient by coefficient
// (A_0 first), each coefficient in row-major order.
MatrixPolynomial random_polynomial(int n, int k, std::uint64_t seed);

}  // namespace gfplin

#endif  // GFPLIN_MATPOLY_HPP
