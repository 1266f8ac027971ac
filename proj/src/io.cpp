// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin/io.hpp"

#include <fstream>
#include <sstream>
#include <json.hpp>

namespace gfplin
{

using json = nlohmann::json;

namespace
{

json complex_to_json(Complex z)
{
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json &j)
{
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
  {
    fail(ErrorCode::Parse, "matrix entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix &A)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < A.rows(); i++)
  {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); j++)
    {
      row.push_back(complex_to_json(A(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json &j, int m)
{
  if (!j.is_array() || static_cast<int>(j.size()) != m)
  {
    fail(ErrorCode::Parse, "matrix must have " + std::to_string(m) + " rows");
  }
  Matrix A(m, m);
  for (int i = 0; i < m; i++)
  {
    const auto &row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
    {
      fail(ErrorCode::Parse, "matrix row must have " + std::to_string(m) + " entries");
    }
    for (int c = 0; c < m; c++)
    {
      A(i, c) = complex_from_json(row[c]);
    }
  }
  return A;
}

int get_int(const json &j, const char *key)
{
  if (!j.contains(key) || !j[key].is_number_integer())
  {
    fail(ErrorCode::Parse, std::string("missing integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

json parse(const std::string &text)
{
  try
  {
    return json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string polynomial_to_json(const MatrixPolynomial &P, const std::optional<ScalingSpec> &scaling)
{
  json j;
  j["n"] = P.dim();
  j["k"] = P.grade();
  json coeffs = json::array();
  for (const auto &A : P.coeffs())
  {
    coeffs.push_back(matrix_to_json(A));
  }
  j["coeffs"] = std::move(coeffs);
  if (scaling)
  {
    j["scaling"] = {{"beta", complex_to_json(scaling->beta)},
                    {"gamma", complex_to_json(scaling->gamma)},
                    {"provenance", std::string(to_string(scaling->provenance))}};
  }
  return j.dump() + "\n";
}

PolynomialFile polynomial_from_json(const std::string &text)
{
  const json j = parse(text);
  if (!j.is_object())
  {
    fail(ErrorCode::Parse, "MPJSON root must be an object");
  }
  const int n = get_int(j, "n"), k = get_int(j, "k");
  if (n < 1 || k < 0)
  {
    fail(ErrorCode::Parse, "MPJSON needs n >= 1 and k >= 0");
  }
  if (!j.contains("coeffs") || !j["coeffs"].is_array() ||
      static_cast<int>(j["coeffs"].size()) != k + 1)
  {
    fail(ErrorCode::Parse, "MPJSON \"coeffs\" must hold k + 1 matrices");
  }
  std::vector<Matrix> c;
  for (const auto &A : j["coeffs"])
  {
    c.push_back(matrix_from_json(A, n));
  }
  PolynomialFile out{MatrixPolynomial(std::move(c)), std::nullopt};
  if (j.contains("scaling"))
  {
    const auto &s = j["scaling"];
    ScalingSpec spec;
    spec.beta = complex_from_json(s.at("beta"));
    spec.gamma = complex_from_json(s.at("gamma"));
    const std::string prov = s.value("provenance", "user");
    spec.provenance = prov == "max_norm"   ? ScalingProvenance::MaxNorm
                      : prov == "tropical" ? ScalingProvenance::Tropical
                                           : ScalingProvenance::User;
    out.scaling = spec;
  }
  return out;
}

void save_polynomial(const std::string &path, const MatrixPolynomial &P,
                     const std::optional<ScalingSpec> &scaling)
{
  write_text_file(path, polynomial_to_json(P, scaling));
}

PolynomialFile load_polynomial(const std::string &path)
{
  return polynomial_from_json(read_text_file(path));
}

std::string pencil_to_json(const Pencil &L)
{
  json j;
  j["m"] = L.size();
  j["kind"] = std::string(to_string(L.kind));
  j["n"] = L.n;
  j["k"] = L.k;
  j["L1"] = matrix_to_json(L.L1);
  j["L0"] = matrix_to_json(L.L0);
  return j.dump() + "\n";
}

Pencil pencil_from_json(const std::string &text)
{
  const json j = parse(text);
  if (!j.is_object())
  {
    fail(ErrorCode::Parse, "pencil root must be an object");
  }
  const int m = get_int(j, "m");
  if (m < 1)
  {
    fail(ErrorCode::Parse, "pencil needs m >= 1");
  }
  Pencil L;
  L.L1 = matrix_from_json(j.at("L1"), m);
  L.L0 = matrix_from_json(j.at("L0"), m);
  const auto kind = parse_kind(j.value("kind", "custom"));
  if (!kind)
  {
    fail(ErrorCode::Parse, "unknown pencil kind");
  }
  L.kind = *kind;
  L.n = j.contains("n") ? get_int(j, "n") : m;
  L.k = j.contains("k") ? get_int(j, "k") : 1;
  if (L.n * L.k != m)
  {
    fail(ErrorCode::Parse, "pencil size m must equal n k");
  }
  return L;
}

void save_pencil(const std::string &path, const Pencil &L)
{
  write_text_file(path, pencil_to_json(L));
}

Pencil load_pencil(const std::string &path)
{
  return pencil_from_json(read_text_file(path));
}

std::string read_text_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    fail(ErrorCode::Io, "cannot open " + path + " for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
  {
    fail(ErrorCode::Io, "cannot open " + path + " for writing");
  }
  out << text;
  if (!out)
  {
    fail(ErrorCode::Io, "write to " + path + " failed");
  }
}

}  // namespace gfplin
