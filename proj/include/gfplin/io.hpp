// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_IO_HPP
#define GFPLIN_IO_HPP

#include <optional>
#include <string>
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"

namespace gfplin
{

// MPJSON: {"n": int, "k": int, "coeffs": [A_0, ..., A_k]} with every matrix stored as rows of
// [re, im] pairs. An optional "scaling" object records the (beta, gamma) a file was produced with.
struct PolynomialFile
{
  MatrixPolynomial P;
  std::optional<ScalingSpec> scaling;
};

std::string polynomial_to_json(const MatrixPolynomial &P,
                               const std::optional<ScalingSpec> &scaling = std::nullopt);
PolynomialFile polynomial_from_json(const std::string &text);

void save_polynomial(const std::string &path, const MatrixPolynomial &P,
                     const std::optional<ScalingSpec> &scaling = std::nullopt);
PolynomialFile load_polynomial(const std::string &path);

// {"m": int, "kind": string, "n": int, "k": int, "L1": matrix, "L0": matrix}
std::string pencil_to_json(const Pencil &L);
Pencil pencil_from_json(const std::string &text);

void save_pencil(const std::string &path, const Pencil &L);
Pencil load_pencil(const std::string &path);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

}  // namespace gfplin

#endif  // GFPLIN_IO_HPP
