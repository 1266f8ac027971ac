// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line driver over the gfplin C API.

#include <cstdio>
#include <string>
#include <CLI11.hpp>
#include "gfplin.h"

namespace
{

struct Options
{
  std::string in, out, svg, scaling = "none", lins = "T,R,D1,Dk,C1", format = "csv";
  int n = 20, k = 3;
  uint64_t seed = 1;
  double upper_scale = 0.0;  // 0 keeps the default
};

int report_error(gfplin_status st)
{
  std::fprintf(stderr, "gfplin: error %d: %s\n", static_cast<int>(st), gfplin_last_error());
  return 2;
}

// Loads --in, or generates a random problem from --n, --k, --seed.
gfplin_status load_problem(const Options &o, gfplin_poly **p)
{
  if (!o.in.empty())
  {
    return gfplin_poly_load(o.in.c_str(), p);
  }
  return gfplin_poly_random(o.n, o.k, o.seed, p);
}

int cmd_gen(const Options &o)
{
  gfplin_poly *p = nullptr;
  gfplin_status st = gfplin_poly_random(o.n, o.k, o.seed, &p);
  if (st == GFPLIN_OK)
  {
    st = gfplin_poly_save(p, o.out.c_str());
  }
  gfplin_poly_free(p);
  return st == GFPLIN_OK ? 0 : report_error(st);
}

int cmd_scale(const Options &o)
{
  gfplin_poly *p = nullptr, *q = nullptr;
  gfplin_complex beta{}, gamma{};
  gfplin_status st = gfplin_poly_load(o.in.c_str(), &p);
  if (st == GFPLIN_OK)
  {
    st = gfplin_poly_scale(p, o.scaling.c_str(), &q, &beta, &gamma);
  }
  if (st == GFPLIN_OK)
  {
    st = gfplin_poly_save(q, o.out.c_str());
  }
  if (st == GFPLIN_OK)
  {
    std::printf("beta = %.17g%+.17gi, gamma = %.17g%+.17gi\n", beta.re, beta.im, gamma.re,
                gamma.im);
  }
  gfplin_poly_free(q);
  gfplin_poly_free(p);
  return st == GFPLIN_OK ? 0 : report_error(st);
}

// Shared by ratios and bounds; bounds turns violations into the exit code.
int cmd_ratios(const Options &o, bool bounds)
{
  gfplin_poly *p = nullptr;
  gfplin_report *r = nullptr;
  gfplin_tolerances tol;
  gfplin_tolerances_default(&tol);
  if (o.upper_scale > 0.0)
  {
    tol.upper_scale = o.upper_scale;
  }
  gfplin_status st = load_problem(o, &p);
  if (st == GFPLIN_OK)
  {
    st = gfplin_run_ratios(p, o.scaling.c_str(), o.lins.c_str(), &tol, &r);
  }
  if (st == GFPLIN_OK && !o.out.empty())
  {
    st = gfplin_report_write(r, o.out.c_str(), o.format.c_str());
  }
  if (st == GFPLIN_OK && !o.svg.empty())
  {
    st = gfplin_report_write(r, o.svg.c_str(), "svg");
  }
  int code = 0;
  if (st == GFPLIN_OK)
  {
    std::fputs(gfplin_report_summary(r), stdout);
    if (bounds && gfplin_report_violations(r) > 0)
    {
      std::fprintf(stderr, "gfplin: %d bound violation(s)\n", gfplin_report_violations(r));
      code = 1;
    }
  }
  else
  {
    code = report_error(st);
  }
  gfplin_report_free(r);
  gfplin_poly_free(p);
  return code;
}

int cmd_plot(const Options &o)
{
  const gfplin_status st = gfplin_plot_csv(o.in.c_str(), o.out.c_str());
  return st == GFPLIN_OK ? 0 : report_error(st);
}

void add_problem_options(CLI::App *c, Options &o)
{
  c->add_option("--in", o.in, "Input MPJSON polynomial (default: random problem)");
  c->add_option("--n", o.n, "Dimension of a random problem")->check(CLI::PositiveNumber);
  c->add_option("--k", o.k, "Grade of a random problem")->check(CLI::PositiveNumber);
  c->add_option("--seed", o.seed, "Seed of a random problem");
  c->add_option("--scaling", o.scaling, "none | maxnorm | tropical:<j> | user:<beta>,<gamma>");
  c->add_option("--lin", o.lins, "Comma separated subset of T,R,D1,Dk,C1");
  c->add_option("--out", o.out, "Diagnostics output file");
  c->add_option("--format", o.format, "Diagnostics format")
      ->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--svg", o.svg, "Also write a ratio plot");
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Block-tridiagonal linearizations of matrix polynomials"};
  app.require_subcommand(1);
  Options o;

  auto *gen = app.add_subcommand("gen", "Write a random polynomial with entries in [-50, 50]");
  gen->add_option("--n", o.n, "Matrix dimension")->check(CLI::PositiveNumber);
  gen->add_option("--k", o.k, "Grade")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "PRNG seed");
  gen->add_option("--out", o.out, "Output MPJSON file")->required();

  auto *scale = app.add_subcommand("scale", "Apply an eigenvalue-parameter scaling");
  scale->add_option("--in", o.in, "Input MPJSON file")->required();
  scale->add_option("--out", o.out, "Output MPJSON file")->required();
  scale->add_option("--scaling", o.scaling, "maxnorm | tropical:<j> | user:<beta>,<gamma>")
      ->required();

  auto *ratios = app.add_subcommand("ratios", "Condition-number and backward-error ratios");
  add_problem_options(ratios, o);

  auto *bounds = app.add_subcommand("bounds", "Check every applicable bound; exit 1 on violation");
  add_problem_options(bounds, o);
  bounds->add_option("--upper-scale", o.upper_scale, "Multiply every upper bound (self test)");

  auto *plot = app.add_subcommand("plot", "Render a diagnostics CSV as SVG");
  plot->add_option("--in", o.in, "Diagnostics CSV")->required();
  plot->add_option("--out", o.out, "Output SVG")->required();

  CLI11_PARSE(app, argc, argv);

  if (*gen)
  {
    return cmd_gen(o);
  }
  if (*scale)
  {
    return cmd_scale(o);
  }
  if (*ratios)
  {
    return cmd_ratios(o, false);
  }
  if (*bounds)
  {
    return cmd_ratios(o, true);
  }
  return cmd_plot(o);
}
