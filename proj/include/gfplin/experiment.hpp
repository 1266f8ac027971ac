// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef GFPLIN_EXPERIMENT_HPP
#define GFPLIN_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"
#include "gfplin/metrics.hpp"

namespace gfplin
{

enum class ScalingMode
{
  None,
  MaxNorm,
  Tropical,
  User
};

struct ScalingChoice
{
  ScalingMode mode = ScalingMode::None;
  int index = 0;  // tropical root index, 0-based
  Complex beta{1.0, 0.0};
  Complex gamma{1.0, 0.0};
};

// none | maxnorm | tropical:<j> | user:<beta>,<gamma> (real beta and gamma).
ScalingChoice parse_scaling(std::string_view s);

// Identity spec for ScalingMode::None.
ScalingSpec resolve_scaling(const MatrixPolynomial &P, const ScalingChoice &c);

// Comma separated subset of T,R,D1,Dk,C1.
std::vector<LinearizationKind> parse_kinds(std::string_view s);

struct Tolerances
{
  double bound_rtol = 1e-8;   // GFPLIN_BOUND_RTOL
  double simple_rtol = default_simple_rtol;  // GFPLIN_SIMPLE_TOL
  double zero_rtol = 1e-12;   // GFPLIN_ZERO_TOL
  double upper_scale = 1.0;   // GFPLIN_UPPER_SCALE; multiplies every upper bound

  // Defaults overridden by any of the environment variables above.
  static Tolerances from_env();
};

struct DiagnosticRow
{
  int index = 0;  // 1-based, ascending modulus within one linearization
  Complex delta{0.0, 0.0};
  std::string lin;
  bool excluded = false;  // zero, infinite or numerically non-simple
  std::string note;
  std::optional<double> kappa_P, kappa_L, cond_lower, cond_upper;
  std::optional<double> eta_P, eta_L, back_upper, norm_ratio;
  bool pass = true;

  std::optional<double> cond_ratio() const;
  std::optional<double> back_ratio() const;
};

struct LinSummary
{
  std::string lin;
  int count = 0;
  std::optional<double> min_cond_ratio, max_cond_ratio;
  std::optional<double> min_back_ratio, max_back_ratio;
  int violations = 0;
};

struct RatiosReport
{
  int n = 0;
  int k = 0;
  ScalingSpec scaling;
  std::vector<double> norms;
  std::optional<GrowthFactors> growth;
  std::vector<DiagnosticRow> rows;
  std::vector<LinSummary> summaries;
  int violations = 0;
};

// Solves P through every requested linearization and evaluates all applicable bounds.
// P is used as given; scaling is recorded only.
RatiosReport run_ratios(const MatrixPolynomial &P, const std::vector<LinearizationKind> &kinds,
                        const Tolerances &tol, const ScalingSpec &scaling = {});

inline constexpr std::string_view csv_header =
    "index,delta_re,delta_im,abs_delta,lin,kappa_P,kappa_L,cond_ratio,cond_lower,cond_upper,"
    "eta_P,eta_L,back_ratio,back_upper,norm_ratio,pass";

std::string report_csv(const RatiosReport &r);
std::string report_json(const RatiosReport &r);
std::string report_summary_text(const RatiosReport &r);

// Rows parsed back from report_csv output.
std::vector<DiagnosticRow> parse_csv(const std::string &text);

// Log-scale ratio curves, x = eigenvalue index. Throws NoEigenvalues on empty input.
std::string render_svg(const std::vector<DiagnosticRow> &rows, const std::string &title = "");

}  // namespace gfplin

#endif  // GFPLIN_EXPERIMENT_HPP
