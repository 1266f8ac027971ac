// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/linearize.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <Eigen/LU>

namespace gfplin
{

namespace
{

void require_odd_grade(const MatrixPolynomial &P)
{
  const int k = P.grade();
  if (k % 2 == 0)
  {
    fail(ErrorCode::EvenDegree, "block-tridiagonal pencils need odd grade, got k = " +
                                    std::to_string(k));
  }
  if (k < 3)
  {
    fail(ErrorCode::DegreeTooLow, "block-tridiagonal pencils need k >= 3, got k = " +
                                      std::to_string(k));
  }
}

void require_grade_at_least_two(const MatrixPolynomial &P)
{
  if (P.grade() < 2)
  {
    fail(ErrorCode::DegreeTooLow, "pencil needs k >= 2, got k = " + std::to_string(P.grade()));
  }
}

Pencil empty_pencil(const MatrixPolynomial &P, LinearizationKind kind)
{
  const int n = P.dim(), k = P.grade();
  Pencil L;
  L.L1 = Matrix::Zero(n * k, n * k);
  L.L0 = Matrix::Zero(n * k, n * k);
  L.kind = kind;
  L.n = n;
  L.k = k;
  return L;
}

auto block(Matrix &M, int n, int i, int j)
{
  return M.block(i * n, j * n, n, n);
}

}  // namespace

std::string_view to_string(LinearizationKind kind)
{
  switch (kind)
  {
    case LinearizationKind::T:
      return "T";
    case LinearizationKind::R:
      return "R";
    case LinearizationKind::D1:
      return "D1";
    case LinearizationKind::Dk:
      return "Dk";
    case LinearizationKind::C1:
      return "C1";
    case LinearizationKind::Custom:
      return "custom";
  }
  return "custom";
}

std::optional<LinearizationKind> parse_kind(std::string_view s)
{
  for (auto kind : {LinearizationKind::T, LinearizationKind::R, LinearizationKind::D1,
                    LinearizationKind::Dk, LinearizationKind::C1, LinearizationKind::Custom})
  {
    if (s == to_string(kind))
    {
      return kind;
    }
  }
  return std::nullopt;
}

Pencil build_T(const MatrixPolynomial &P)
{
  require_odd_grade(P);
  const int n = P.dim(), k = P.grade();
  const Matrix I = Matrix::Identity(n, n);
  Pencil L = empty_pencil(P, LinearizationKind::T);
  for (int j = 0; 2 * j < k; j++)
  {
    // Diagonal block 2j holds z A_{k-2j} + A_{k-2j-1}.
    const int b = 2 * j;
    block(L.L1, n, b, b) = P.coeff(k - 2 * j);
    block(L.L0, n, b, b) = -P.coeff(k - 2 * j - 1);
    if (b + 1 < k)
    {
      // Constant -I couples blocks (b, b+1); z I couples (b+1, b+2).
      block(L.L0, n, b, b + 1) = I;
      block(L.L0, n, b + 1, b) = I;
      block(L.L1, n, b + 1, b + 2) = I;
      block(L.L1, n, b + 2, b + 1) = I;
    }
  }
  return L;
}

int s_block_sign(int i)
{
  const int r = i % 4;
  return (r == 0 || r == 1) ? -1 : 1;
}

StructuralMatrices structural_matrices(int k, int n)
{
  if (k % 2 == 0)
  {
    fail(ErrorCode::EvenDegree, "structural matrices need odd k, got k = " + std::to_string(k));
  }
  if (k < 1 || n < 1)
  {
    fail(ErrorCode::InvalidArgument, "structural matrices need k >= 1 and n >= 1");
  }
  const int m = n * k;
  const Matrix I = Matrix::Identity(n, n);
  StructuralMatrices M{Matrix::Zero(m, m), Matrix::Zero(m, m), Matrix::Zero(m, m)};
  for (int b = 0; b < k; b++)
  {
    block(M.R, n, b, k - 1 - b) = I;
    block(M.S, n, b, b) = static_cast<double>(s_block_sign(b + 1)) * I;
    block(M.D, n, b, b) = (b % 2 == 0 ? 1.0 : -1.0) * I;
  }
  return M;
}

Pencil build_R(const MatrixPolynomial &P)
{
  Pencil T = build_T(P);
  const auto M = structural_matrices(P.grade(), P.dim());
  const Matrix SR = M.S * M.R;
  const Matrix RS = M.R * M.S;
  Pencil L = T;
  L.L1 = SR * T.L1 * RS;
  L.L0 = SR * T.L0 * RS;
  L.kind = LinearizationKind::R;
  return L;
}

Pencil build_D1(const MatrixPolynomial &P)
{
  require_grade_at_least_two(P);
  const int n = P.dim(), k = P.grade();
  Pencil L = empty_pencil(P, LinearizationKind::D1);
  block(L.L1, n, 0, 0) = P.coeff(k);
  for (int i = 0; i < k; i++)
  {
    for (int j = 0; j < k; j++)
    {
      if (i >= 1 && j >= 1 && k - i - j >= 0)
      {
        block(L.L1, n, i, j) = -P.coeff(k - i - j);
      }
      if (k - 1 - i - j >= 0)
      {
        block(L.L0, n, i, j) = -P.coeff(k - 1 - i - j);
      }
    }
  }
  return L;
}

Pencil build_Dk(const MatrixPolynomial &P)
{
  require_grade_at_least_two(P);
  const int n = P.dim(), k = P.grade();
  Pencil L = empty_pencil(P, LinearizationKind::Dk);
  for (int i = 0; i < k; i++)
  {
    for (int j = 0; j < k; j++)
    {
      if (i + j >= k - 1)
      {
        block(L.L1, n, i, j) = P.coeff(2 * k - 1 - i - j);
      }
      if (i < k - 1 && j < k - 1 && i + j >= k - 2)
      {
        block(L.L0, n, i, j) = P.coeff(2 * k - 2 - i - j);
      }
    }
  }
  block(L.L0, n, k - 1, k - 1) = -P.coeff(0);
  return L;
}

Pencil build_C1(const MatrixPolynomial &P)
{
  require_grade_at_least_two(P);
  const int n = P.dim(), k = P.grade();
  const Matrix I = Matrix::Identity(n, n);
  Pencil L = empty_pencil(P, LinearizationKind::C1);
  block(L.L1, n, 0, 0) = P.coeff(k);
  for (int b = 1; b < k; b++)
  {
    block(L.L1, n, b, b) = I;
    block(L.L0, n, b, b - 1) = I;
  }
  for (int j = 0; j < k; j++)
  {
    block(L.L0, n, 0, j) = -P.coeff(k - 1 - j);
  }
  return L;
}

Pencil build(const MatrixPolynomial &P, LinearizationKind kind)
{
  switch (kind)
  {
    case LinearizationKind::T:
      return build_T(P);
    case LinearizationKind::R:
      return build_R(P);
    case LinearizationKind::D1:
      return build_D1(P);
    case LinearizationKind::Dk:
      return build_Dk(P);
    case LinearizationKind::C1:
      return build_C1(P);
    case LinearizationKind::Custom:
      break;
  }
  fail(ErrorCode::InvalidArgument, "cannot build a custom pencil from a polynomial");
}

Matrix pencil_eval(const Pencil &L, Complex z)
{
  return z * L.L1 - L.L0;
}

MatrixPolynomial as_polynomial(const Pencil &L)
{
  return MatrixPolynomial(std::vector<Matrix>{-L.L0, L.L1});
}

LogDet log_determinant(const Matrix &A)
{
  LogDet out;
  if (A.rows() == 0)
  {
    return out;
  }
  Eigen::FullPivLU<Matrix> lu(A);
  const auto &U = lu.matrixLU();
  for (Eigen::Index i = 0; i < U.rows(); i++)
  {
    const Complex u = U(i, i);
    const double a = std::abs(u);
    if (a == 0.0)
    {
      out.singular = true;
      out.log_abs = -std::numeric_limits<double>::infinity();
      out.phase = 0.0;
      return out;
    }
    out.log_abs += std::log(a);
    out.phase *= u / a;
  }
  // Each transposition flips the sign.
  const double sign = static_cast<double>(lu.permutationP().determinant() *
                                          lu.permutationQ().determinant());
  out.phase *= sign;
  return out;
}

namespace
{

struct DetRatioCheck
{
  bool pass = false;
  Complex constant{0.0, 0.0};
  double spread = 0.0;
  int samples = 0;
};

template <typename EvalL, typename EvalP>
DetRatioCheck det_ratio_check(EvalL eval_L, EvalP eval_P, int needed, SplitMix64 &rng)
{
  constexpr double tiny_log = -575.6;  // log(1e-250)
  constexpr double p_rcond_min = 1e-8;
  std::vector<Complex> ratios;
  const int max_attempts = 50 * needed;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(ratios.size()) < needed;
       attempt++)
  {
    const double r = rng.uniform(0.5, 2.0);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Complex z = std::polar(r, theta);
    const Matrix Pz = eval_P(z);
    Eigen::PartialPivLU<Matrix> plu(Pz);
    if (!(plu.rcond() > p_rcond_min))
    {
      continue;
    }
    const LogDet dp = log_determinant(Pz);
    if (dp.singular || dp.log_abs < tiny_log)
    {
      continue;
    }
    const LogDet dl = log_determinant(eval_L(z));
    if (dl.singular)
    {
      ratios.push_back(0.0);
      continue;
    }
    ratios.push_back(std::exp(dl.log_abs - dp.log_abs) * dl.phase / dp.phase);
  }
  DetRatioCheck out;
  out.samples = static_cast<int>(ratios.size());
  if (out.samples < needed)
  {
    fail(ErrorCode::SampleFailure, "too many near-singular sample points in determinant check");
  }
  Complex mean = 0.0;
  for (auto c : ratios)
  {
    mean += c;
  }
  mean /= static_cast<double>(ratios.size());
  out.constant = mean;
  if (std::abs(mean) == 0.0)
  {
    out.spread = std::numeric_limits<double>::infinity();
    return out;
  }
  for (auto c : ratios)
  {
    out.spread = std::max(out.spread, std::abs(c - mean) / std::abs(mean));
  }
  out.pass = out.spread <= 1e-8;
  return out;
}

}  // namespace

LinearizationReport verify_strong_linearization(const Pencil &L, const MatrixPolynomial &P,
                                                int trials, std::uint64_t seed)
{
  const int n = P.dim(), k = P.grade();
  if (L.size() != n * k || L.L0.rows() != L.L1.rows())
  {
    fail(ErrorCode::InvalidArgument, "pencil size must equal n k");
  }
  const int needed = std::max(trials, n * k + 1);
  SplitMix64 rng(seed);
  const MatrixPolynomial revP = reversal(P);

  const auto fwd = det_ratio_check([&](Complex z) { return pencil_eval(L, z); },
                                   [&](Complex z) { return eval(P, z); }, needed, rng);
  const auto rev = det_ratio_check([&](Complex z) -> Matrix { return L.L1 - z * L.L0; },
                                   [&](Complex z) { return eval(revP, z); }, needed, rng);

  LinearizationReport rep;
  rep.forward_pass = fwd.pass;
  rep.reversal_pass = rev.pass;
  rep.pass = fwd.pass && rev.pass;
  rep.constant = fwd.constant;
  rep.reversal_constant = rev.constant;
  rep.forward_spread = fwd.spread;
  rep.reversal_spread = rev.spread;
  rep.samples = fwd.samples + rev.samples;
  if (rep.pass)
  {
    rep.message = "strong linearization";
  }
  else if (!fwd.pass)
  {
    rep.message = "det L(z) / det P(z) is not a nonzero constant";
  }
  else
  {
    rep.message = "det revL(z) / det revP(z) is not a nonzero constant";
  }
  return rep;
}

}  // namespace gfplin
