// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_SOLVE_HPP
#define GFPLIN_SOLVE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"
#include "gfplin/recover.hpp"

namespace gfplin
{

struct PencilEigenpair
{
  Complex delta{0.0, 0.0};
  Vector z_right;  // (delta L1 - L0) z = 0, unit 2-norm
  Vector z_left;   // z_left^H (delta L1 - L0) = 0, unit 2-norm
  double eta_right = 0.0;
  double eta_left = 0.0;
};

struct PencilEigenResult
{
  std::vector<PencilEigenpair> finite;  // ascending modulus, then ascending phase
  int infinite_count = 0;
  std::string backend_info;
};

// Backend residual contract: eta <= c_be m eps for every returned vector.
inline constexpr double residual_contract_factor = 100.0;

// All eigenvalues of z L1 - L0 through LAPACK zggev. Calls into LAPACK are serialized.
PencilEigenResult solve_pencil(const Pencil &L);

// True when every finite eigenpair of r satisfies the residual contract for a pencil of size m.
bool residual_contract_holds(const PencilEigenResult &r, int m);

// Finite eigentriples of P through the chosen linearization, ordered as solve_pencil orders the
// pencil eigenvalues.
std::vector<EigenTriple> polyeig(const MatrixPolynomial &P, LinearizationKind kind);

struct OracleProblem
{
  MatrixPolynomial P;
  std::vector<EigenTriple> triples;
};

// P(z) = Q^H diag(p_1(z), ..., p_n(z)) Q with monic degree-k scalar p_j whose roots are
// roots[j k], ..., roots[j k + k - 1], and Q a seeded random unitary. With hermitian set, each
// root set must be closed under conjugation and the coefficients are made exactly Hermitian.
OracleProblem oracle_problem(int n, int k, const std::vector<Complex> &roots, std::uint64_t seed,
                             bool hermitian = false);

// Seeded unitary factor of a QR decomposition of a random complex matrix.
Matrix random_unitary(int n, std::uint64_t seed);

}  // namespace gfplin

#endif  // GFPLIN_SOLVE_HPP
