// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/solve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <Eigen/QR>
#include <Eigen/SVD>
#include "gfplin/metrics.hpp"

extern "C"
{
  void zggev_(const char *jobvl, const char *jobvr, const int *n, std::complex<double> *a,
              const int *lda, std::complex<double> *b, const int *ldb,
              std::complex<double> *alpha, std::complex<double> *beta,
              std::complex<double> *vl, const int *ldvl, std::complex<double> *vr,
              const int *ldvr, std::complex<double> *work, const int *lwork, double *rwork,
              int *info);
}

namespace gfplin
{

namespace
{

std::mutex lapack_mutex;

struct Zggev
{
  std::vector<Complex> alpha, beta;
  Matrix VL, VR;
};

// Generalized eigenproblem A v = w B v, u^H A = w u^H B with w = alpha / beta.
Zggev zggev(Matrix A, Matrix B)
{
  const int m = static_cast<int>(A.rows());
  Zggev out;
  out.alpha.resize(m);
  out.beta.resize(m);
  out.VL.resize(m, m);
  out.VR.resize(m, m);
  std::vector<double> rwork(8 * static_cast<std::size_t>(m));
  int info = 0, lwork = -1;
  Complex query;
  std::lock_guard<std::mutex> lock(lapack_mutex);
  zggev_("V", "V", &m, A.data(), &m, B.data(), &m, out.alpha.data(), out.beta.data(),
         out.VL.data(), &m, out.VR.data(), &m, &query, &lwork, rwork.data(), &info);
  lwork = std::max(2 * m, static_cast<int>(query.real()));
  std::vector<Complex> work(lwork);
  zggev_("V", "V", &m, A.data(), &m, B.data(), &m, out.alpha.data(), out.beta.data(),
         out.VL.data(), &m, out.VR.data(), &m, work.data(), &lwork, rwork.data(), &info);
  if (info != 0)
  {
    fail(ErrorCode::Backend, "zggev failed with info = " + std::to_string(info));
  }
  return out;
}

bool pencil_is_singular(const Pencil &L, const PencilNorms &w)
{
  const int m = L.size();
  const double eps = std::numeric_limits<double>::epsilon();
  const double n1 = w.l1, n0 = w.l0;
  if (n1 == 0.0 && n0 == 0.0)
  {
    return true;
  }
  SplitMix64 rng(0x5eed);
  for (int trial = 0; trial < 3; trial++)
  {
    const Complex z = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.283185307179586));
    const auto s = Eigen::BDCSVD<Matrix>(pencil_eval(L, z)).singularValues();
    if (s(m - 1) > 10.0 * m * eps * (std::abs(z) * n1 + n0))
    {
      return false;
    }
  }
  return true;
}

}  // namespace

PencilEigenResult solve_pencil(const Pencil &L)
{
  const int m = L.size();
  if (m == 0 || L.L0.rows() != m || L.L1.cols() != m || L.L0.cols() != m)
  {
    fail(ErrorCode::InvalidArgument, "pencil matrices must be square of equal size");
  }
  const PencilNorms w = pencil_norms(L);
  const double eps = std::numeric_limits<double>::epsilon();
  const double n1 = w.l1;
  const Zggev g = zggev(L.L0, L.L1);
  // A badly scaled regular pencil can look rank deficient at every sample point, so a
  // singular verdict also needs QZ to return an indeterminate 0/0 pair.
  const bool indeterminate = std::any_of(
      g.alpha.begin(), g.alpha.end(),
      [&, i = 0](const Complex &a) mutable
      {
        const double tol = 10.0 * m * eps;
        const bool zero_pair = std::abs(a) <= tol * w.l0 && std::abs(g.beta[i]) <= tol * n1;
        i++;
        return zero_pair;
      });
  if (indeterminate && pencil_is_singular(L, w))
  {
    fail(ErrorCode::SingularPencil, "pencil is singular (rank deficient at all sample points)");
  }

  PencilEigenResult r;
  r.backend_info = "LAPACK zggev (QZ)";
  for (int i = 0; i < m; i++)
  {
    if (std::abs(g.beta[i]) < m * eps * n1 || g.beta[i] == 0.0)
    {
      r.infinite_count++;
      continue;
    }
    PencilEigenpair e;
    e.delta = g.alpha[i] / g.beta[i];
    e.z_right = g.VR.col(i).normalized();
    e.z_left = g.VL.col(i).normalized();
    e.eta_right = backward_error_pencil_right(L, w, e.z_right, e.delta);
    e.eta_left = backward_error_pencil_left(L, w, e.z_left, e.delta);
    r.finite.push_back(std::move(e));
  }
  std::stable_sort(r.finite.begin(), r.finite.end(),
                   [](const PencilEigenpair &a, const PencilEigenpair &b)
                   {
                     const double ma = std::abs(a.delta), mb = std::abs(b.delta);
                     if (ma != mb)
                     {
                       return ma < mb;
                     }
                     return std::arg(a.delta) < std::arg(b.delta);
                   });
  return r;
}

bool residual_contract_holds(const PencilEigenResult &r, int m)
{
  const double bound = residual_contract_factor * m * std::numeric_limits<double>::epsilon();
  return std::all_of(r.finite.begin(), r.finite.end(), [bound](const PencilEigenpair &e)
                     { return e.eta_right <= bound && e.eta_left <= bound; });
}

std::vector<EigenTriple> polyeig(const MatrixPolynomial &P, LinearizationKind kind)
{
  const int n = P.dim(), k = P.grade();
  const Pencil L = build(P, kind);
  const PencilEigenResult r = solve_pencil(L);
  const std::vector<double> norms = coeff_norms(P);

  double max_abs = 0.0;
  for (const auto &e : r.finite)
  {
    max_abs = std::max(max_abs, std::abs(e.delta));
  }

  std::vector<EigenTriple> out;
  out.reserve(r.finite.size());
  for (const auto &e : r.finite)
  {
    EigenTriple t;
    t.delta = e.delta;
    switch (kind)
    {
      case LinearizationKind::T:
        t.x = extract_from_T(e.z_right, e.delta, n, k);
        t.y = extract_from_T(e.z_left, e.delta, n, k);
        break;
      case LinearizationKind::R:
        t.x = extract_from_R(e.z_right, e.delta, n, k);
        t.y = extract_from_R(e.z_left, e.delta, n, k);
        break;
      case LinearizationKind::D1:
      case LinearizationKind::Dk:
      {
        // Every block of Lambda(delta) (x) x is a multiple of x; the end block with the
        // larger power of delta is the better-scaled one.
        const int b = std::abs(e.delta) >= 1.0 ? 1 : k;
        t.x = take_block(e.z_right, b, n);
        t.y = take_block(e.z_left, b, n);
        break;
      }
      case LinearizationKind::C1:
        t.x = extract_from_C1_right(e.z_right, e.delta, n, k);
        t.y = extract_from_C1_left(e.z_left, n, k);
        break;
      case LinearizationKind::Custom:
        fail(ErrorCode::InvalidArgument, "polyeig needs a named linearization");
    }
    t.x.normalize();
    t.y.normalize();
    t.residual_right = backward_error_right(P, norms, t.x, t.delta);
    t.residual_left = backward_error_left(P, norms, t.y, t.delta);
    t.zero = e.delta == 0.0 || std::abs(e.delta) < 1e-12 * max_abs;
    out.push_back(std::move(t));
  }
  return out;
}

Matrix random_unitary(int n, std::uint64_t seed)
{
  SplitMix64 rng(seed);
  Matrix G(n, n);
  for (int j = 0; j < n; j++)
  {
    for (int i = 0; i < n; i++)
    {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      G(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(G);
  return qr.householderQ() * Matrix::Identity(n, n);
}

OracleProblem oracle_problem(int n, int k, const std::vector<Complex> &roots, std::uint64_t seed,
                             bool hermitian)
{
  if (n < 1 || k < 1)
  {
    fail(ErrorCode::InvalidArgument, "oracle problem needs n >= 1 and k >= 1");
  }
  if (static_cast<int>(roots.size()) != n * k)
  {
    fail(ErrorCode::InvalidArgument, "oracle problem needs exactly n k roots");
  }
  for (std::size_t a = 0; a < roots.size(); a++)
  {
    if (roots[a] == 0.0)
    {
      fail(ErrorCode::InvalidArgument, "oracle roots must be nonzero");
    }
    for (std::size_t b = a + 1; b < roots.size(); b++)
    {
      const double scale = std::max(std::abs(roots[a]), std::abs(roots[b]));
      if (std::abs(roots[a] - roots[b]) <= 1e-14 * scale)
      {
        fail(ErrorCode::RepeatedRoots, "oracle roots must be distinct");
      }
    }
  }

  // Ascending coefficients of each monic p_j.
  std::vector<std::vector<Complex>> c(n);
  for (int j = 0; j < n; j++)
  {
    std::vector<Complex> p{1.0};
    for (int i = 0; i < k; i++)
    {
      const Complex r = roots[j * k + i];
      std::vector<Complex> q(p.size() + 1, 0.0);
      for (std::size_t d = 0; d < p.size(); d++)
      {
        q[d + 1] += p[d];
        q[d] -= r * p[d];
      }
      p = std::move(q);
    }
    if (hermitian)
    {
      for (const auto &z : p)
      {
        if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z)))
        {
          fail(ErrorCode::InvalidArgument,
               "Hermitian oracle needs root sets closed under conjugation");
        }
      }
      for (auto &z : p)
      {
        z = z.real();
      }
    }
    c[j] = std::move(p);
  }

  const Matrix Q = random_unitary(n, seed);
  std::vector<Matrix> A(k + 1);
  for (int i = 0; i <= k; i++)
  {
    Vector d(n);
    for (int j = 0; j < n; j++)
    {
      d(j) = c[j][i];
    }
    A[i] = Q.adjoint() * d.asDiagonal() * Q;
    if (hermitian)
    {
      A[i] = 0.5 * (A[i] + A[i].adjoint());
    }
  }

  OracleProblem out{MatrixPolynomial(std::move(A)), {}};
  for (int j = 0; j < n; j++)
  {
    const Vector v = Q.adjoint().col(j);
    for (int i = 0; i < k; i++)
    {
      EigenTriple t;
      t.delta = roots[j * k + i];
      t.x = v;
      t.y = v;
      t.residual_right = backward_error_right(out.P, t.x, t.delta);
      t.residual_left = backward_error_left(out.P, t.y, t.delta);
      out.triples.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace gfplin
