// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_TYPES_HPP
#define GFPLIN_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <Eigen/Dense>

namespace gfplin
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Error categories. The C API maps these one-to-one onto status codes.
enum class ErrorCode
{
  InvalidArgument = 1,
  EvenDegree,
  DegreeTooLow,
  IndexOutOfRange,
  ZeroPolynomial,
  ZeroCoefficient,
  SingularPencil,
  NotSimple,
  ExcludedEigenvalue,
  ExtractionFailed,
  NotApplicable,
  Io,
  Parse,
  Backend,
  NoEigenvalues,
  RepeatedRoots,
  SampleFailure
};

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what)
{
  throw Error(code, what);
}

}  // namespace gfplin

#endif  // GFPLIN_TYPES_HPP
