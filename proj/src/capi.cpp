// Copyright gfplin contributors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#include "gfplin.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include "gfplin/experiment.hpp"
#include "gfplin/io.hpp"
#include "gfplin/linearize.hpp"
#include "gfplin/matpoly.hpp"
#include "gfplin/solve.hpp"

struct gfplin_poly
{
  gfplin::MatrixPolynomial P;
  std::optional<gfplin::ScalingSpec> scaling;
};

struct gfplin_pencil
{
  gfplin::Pencil L;
};

struct gfplin_eigs
{
  std::vector<gfplin::EigenTriple> triples;
};

struct gfplin_report
{
  gfplin::RatiosReport report;
  std::string summary;
};

namespace
{

thread_local std::string last_error;

template <typename F>
gfplin_status guarded(F &&f)
{
  try
  {
    last_error.clear();
    f();
    return GFPLIN_OK;
  }
  catch (const gfplin::Error &e)
  {
    last_error = e.what();
    return static_cast<gfplin_status>(static_cast<int>(e.code()));
  }
  catch (const std::bad_alloc &)
  {
    last_error = "out of memory";
    return GFPLIN_ERR_INTERNAL;
  }
  catch (const std::exception &e)
  {
    last_error = e.what();
    return GFPLIN_ERR_INTERNAL;
  }
}

void require(bool cond, const char *what)
{
  if (!cond)
  {
    gfplin::fail(gfplin::ErrorCode::InvalidArgument, what);
  }
}

gfplin::LinearizationKind kind_of(const char *kind)
{
  require(kind != nullptr, "kind must not be NULL");
  const auto k = gfplin::parse_kind(kind);
  if (!k || *k == gfplin::LinearizationKind::Custom)
  {
    gfplin::fail(gfplin::ErrorCode::Parse, std::string("unknown linearization ") + kind);
  }
  return *k;
}

gfplin_complex to_c(gfplin::Complex z)
{
  return {z.real(), z.imag()};
}

}  // namespace

extern "C"
{

const char *gfplin_last_error(void)
{
  return last_error.c_str();
}

const char *gfplin_version(void)
{
  return "0.1.0";
}

gfplin_status gfplin_poly_create(int n, int k, const gfplin_complex *coeffs, gfplin_poly **out)
{
  return guarded(
      [&]
      {
        require(out != nullptr && coeffs != nullptr, "NULL argument");
        gfplin::MatrixPolynomial P(n, k);
        std::size_t idx = 0;
        for (int i = 0; i <= k; i++)
        {
          for (int r = 0; r < n; r++)
          {
            for (int c = 0; c < n; c++, idx++)
            {
              P.coeff(i)(r, c) = {coeffs[idx].re, coeffs[idx].im};
            }
          }
        }
        *out = new gfplin_poly{std::move(P), std::nullopt};
      });
}

gfplin_status gfplin_poly_random(int n, int k, uint64_t seed, gfplin_poly **out)
{
  return guarded(
      [&]
      {
        require(out != nullptr, "NULL argument");
        *out = new gfplin_poly{gfplin::random_polynomial(n, k, seed), std::nullopt};
      });
}

gfplin_status gfplin_poly_load(const char *path, gfplin_poly **out)
{
  return guarded(
      [&]
      {
        require(path != nullptr && out != nullptr, "NULL argument");
        auto f = gfplin::load_polynomial(path);
        *out = new gfplin_poly{std::move(f.P), f.scaling};
      });
}

gfplin_status gfplin_poly_save(const gfplin_poly *p, const char *path)
{
  return guarded(
      [&]
      {
        require(p != nullptr && path != nullptr, "NULL argument");
        gfplin::save_polynomial(path, p->P, p->scaling);
      });
}

gfplin_status gfplin_poly_dims(const gfplin_poly *p, int *n, int *k)
{
  return guarded(
      [&]
      {
        require(p != nullptr, "NULL argument");
        if (n)
        {
          *n = p->P.dim();
        }
        if (k)
        {
          *k = p->P.grade();
        }
      });
}

gfplin_status gfplin_poly_coeff_norm(const gfplin_poly *p, int i, double *out)
{
  return guarded(
      [&]
      {
        require(p != nullptr && out != nullptr, "NULL argument");
        *out = gfplin::spectral_norm(p->P.coeff(i));
      });
}

gfplin_status gfplin_poly_scale(const gfplin_poly *p, const char *mode, gfplin_poly **out,
                                gfplin_complex *beta, gfplin_complex *gamma)
{
  return guarded(
      [&]
      {
        require(p != nullptr && out != nullptr, "NULL argument");
        const auto choice = gfplin::parse_scaling(mode ? mode : "none");
        const auto spec = gfplin::resolve_scaling(p->P, choice);
        *out = new gfplin_poly{gfplin::scale(p->P, spec), spec};
        if (beta)
        {
          *beta = to_c(spec.beta);
        }
        if (gamma)
        {
          *gamma = to_c(spec.gamma);
        }
      });
}

void gfplin_poly_free(gfplin_poly *p)
{
  delete p;
}

gfplin_status gfplin_pencil_build(const gfplin_poly *p, const char *kind, gfplin_pencil **out)
{
  return guarded(
      [&]
      {
        require(p != nullptr && out != nullptr, "NULL argument");
        *out = new gfplin_pencil{gfplin::build(p->P, kind_of(kind))};
      });
}

gfplin_status gfplin_pencil_save(const gfplin_pencil *l, const char *path)
{
  return guarded(
      [&]
      {
        require(l != nullptr && path != nullptr, "NULL argument");
        gfplin::save_pencil(path, l->L);
      });
}

gfplin_status gfplin_pencil_size(const gfplin_pencil *l, int *m)
{
  return guarded(
      [&]
      {
        require(l != nullptr && m != nullptr, "NULL argument");
        *m = l->L.size();
      });
}

void gfplin_pencil_free(gfplin_pencil *l)
{
  delete l;
}

gfplin_status gfplin_verify_strong(const gfplin_pencil *l, const gfplin_poly *p, int trials,
                                   uint64_t seed, int *pass, gfplin_complex *constant)
{
  return guarded(
      [&]
      {
        require(l != nullptr && p != nullptr && pass != nullptr, "NULL argument");
        const auto rep = gfplin::verify_strong_linearization(l->L, p->P, trials, seed);
        *pass = rep.pass ? 1 : 0;
        if (constant)
        {
          *constant = to_c(rep.constant);
        }
      });
}

gfplin_status gfplin_polyeig(const gfplin_poly *p, const char *kind, gfplin_eigs **out)
{
  return guarded(
      [&]
      {
        require(p != nullptr && out != nullptr, "NULL argument");
        *out = new gfplin_eigs{gfplin::polyeig(p->P, kind_of(kind))};
      });
}

size_t gfplin_eigs_count(const gfplin_eigs *e)
{
  return e ? e->triples.size() : 0;
}

gfplin_status gfplin_eigs_get(const gfplin_eigs *e, size_t i, gfplin_complex *delta,
                              double *residual_right, double *residual_left)
{
  return guarded(
      [&]
      {
        require(e != nullptr, "NULL argument");
        if (i >= e->triples.size())
        {
          gfplin::fail(gfplin::ErrorCode::IndexOutOfRange, "eigenvalue index out of range");
        }
        const auto &t = e->triples[i];
        if (delta)
        {
          *delta = to_c(t.delta);
        }
        if (residual_right)
        {
          *residual_right = t.residual_right;
        }
        if (residual_left)
        {
          *residual_left = t.residual_left;
        }
      });
}

void gfplin_eigs_free(gfplin_eigs *e)
{
  delete e;
}

void gfplin_tolerances_default(gfplin_tolerances *tol)
{
  if (!tol)
  {
    return;
  }
  gfplin::Tolerances t;
  const auto st = guarded([&] { t = gfplin::Tolerances::from_env(); });
  (void)st;
  *tol = {t.bound_rtol, t.simple_rtol, t.zero_rtol, t.upper_scale};
}

gfplin_status gfplin_run_ratios(const gfplin_poly *p, const char *scaling, const char *lins,
                                const gfplin_tolerances *tol, gfplin_report **out)
{
  return guarded(
      [&]
      {
        require(p != nullptr && out != nullptr, "NULL argument");
        gfplin::Tolerances t = gfplin::Tolerances::from_env();
        if (tol)
        {
          t = {tol->bound_rtol, tol->simple_rtol, tol->zero_rtol, tol->upper_scale};
        }
        const auto spec = gfplin::resolve_scaling(p->P, gfplin::parse_scaling(scaling ? scaling : "none"));
        const auto kinds = gfplin::parse_kinds(lins ? lins : "T,R,D1,Dk,C1");
        auto report = gfplin::run_ratios(gfplin::scale(p->P, spec), kinds, t, spec);
        auto summary = gfplin::report_summary_text(report);
        *out = new gfplin_report{std::move(report), std::move(summary)};
      });
}

gfplin_status gfplin_report_write(const gfplin_report *r, const char *path, const char *format)
{
  return guarded(
      [&]
      {
        require(r != nullptr && path != nullptr && format != nullptr, "NULL argument");
        const std::string f = format;
        if (f == "csv")
        {
          gfplin::write_text_file(path, gfplin::report_csv(r->report));
        }
        else if (f == "json")
        {
          gfplin::write_text_file(path, gfplin::report_json(r->report));
        }
        else if (f == "svg")
        {
          gfplin::write_text_file(path, gfplin::render_svg(r->report.rows));
        }
        else
        {
          gfplin::fail(gfplin::ErrorCode::InvalidArgument, "format must be csv, json or svg");
        }
      });
}

const char *gfplin_report_summary(const gfplin_report *r)
{
  return r ? r->summary.c_str() : "";
}

int gfplin_report_violations(const gfplin_report *r)
{
  return r ? r->report.violations : -1;
}

size_t gfplin_report_rows(const gfplin_report *r)
{
  return r ? r->report.rows.size() : 0;
}

void gfplin_report_free(gfplin_report *r)
{
  delete r;
}

gfplin_status gfplin_plot_csv(const char *csv_path, const char *svg_path)
{
  return guarded(
      [&]
      {
        require(csv_path != nullptr && svg_path != nullptr, "NULL argument");
        const auto rows = gfplin::parse_csv(gfplin::read_text_file(csv_path));
        gfplin::write_text_file(svg_path, gfplin::render_svg(rows));
      });
}

}  // extern "C"
