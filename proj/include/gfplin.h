/* Copyright gfplin contributors. All Rights Reserved.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef GFPLIN_H
#define GFPLIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GFPLIN_API __declspec(dllexport)
#else
#define GFPLIN_API __attribute__((visibility("default")))
#endif

typedef enum gfplin_status
{
  GFPLIN_OK = 0,
  GFPLIN_ERR_INVALID_ARGUMENT = 1,
  GFPLIN_ERR_EVEN_DEGREE = 2,
  GFPLIN_ERR_DEGREE_TOO_LOW = 3,
  GFPLIN_ERR_INDEX_OUT_OF_RANGE = 4,
  GFPLIN_ERR_ZERO_POLYNOMIAL = 5,
  GFPLIN_ERR_ZERO_COEFFICIENT = 6,
  GFPLIN_ERR_SINGULAR_PENCIL = 7,
  GFPLIN_ERR_NOT_SIMPLE = 8,
  GFPLIN_ERR_EXCLUDED_EIGENVALUE = 9,
  GFPLIN_ERR_EXTRACTION_FAILED = 10,
  GFPLIN_ERR_NOT_APPLICABLE = 11,
  GFPLIN_ERR_IO = 12,
  GFPLIN_ERR_PARSE = 13,
  GFPLIN_ERR_BACKEND = 14,
  GFPLIN_ERR_NO_EIGENVALUES = 15,
  GFPLIN_ERR_REPEATED_ROOTS = 16,
  GFPLIN_ERR_SAMPLE_FAILURE = 17,
  GFPLIN_ERR_INTERNAL = 99
} gfplin_status;

typedef struct gfplin_complex
{
  double re;
  double im;
} gfplin_complex;

/* Opaque handles. Each is released by its matching _free function. */
typedef struct gfplin_poly gfplin_poly;
typedef struct gfplin_pencil gfplin_pencil;
typedef struct gfplin_eigs gfplin_eigs;
typedef struct gfplin_report gfplin_report;

typedef struct gfplin_tolerances
{
  double bound_rtol;
  double simple_rtol;
  double zero_rtol;
  double upper_scale;
} gfplin_tolerances;

/* Message of the last failed call on this thread; empty when none. */
GFPLIN_API const char *gfplin_last_error(void);
GFPLIN_API const char *gfplin_version(void);

/* Polynomials. coeffs holds A_0..A_k, each n x n in row-major order. */
GFPLIN_API gfplin_status gfplin_poly_create(int n, int k, const gfplin_complex *coeffs,
                                            gfplin_poly **out);
GFPLIN_API gfplin_status gfplin_poly_random(int n, int k, uint64_t seed, gfplin_poly **out);
GFPLIN_API gfplin_status gfplin_poly_load(const char *path, gfplin_poly **out);
GFPLIN_API gfplin_status gfplin_poly_save(const gfplin_poly *p, const char *path);
GFPLIN_API gfplin_status gfplin_poly_dims(const gfplin_poly *p, int *n, int *k);
GFPLIN_API gfplin_status gfplin_poly_coeff_norm(const gfplin_poly *p, int i, double *out);
/* Applies none | maxnorm | tropical:<j> | user:<beta>,<gamma>. beta and gamma may be NULL. */
GFPLIN_API gfplin_status gfplin_poly_scale(const gfplin_poly *p, const char *mode,
                                           gfplin_poly **out, gfplin_complex *beta,
                                           gfplin_complex *gamma);
GFPLIN_API void gfplin_poly_free(gfplin_poly *p);

/* Pencils: kind is one of T, R, D1, Dk, C1. */
GFPLIN_API gfplin_status gfplin_pencil_build(const gfplin_poly *p, const char *kind,
                                             gfplin_pencil **out);
GFPLIN_API gfplin_status gfplin_pencil_save(const gfplin_pencil *l, const char *path);
GFPLIN_API gfplin_status gfplin_pencil_size(const gfplin_pencil *l, int *m);
GFPLIN_API void gfplin_pencil_free(gfplin_pencil *l);

/* Randomized determinant check; pass is set to 1 for a strong linearization. */
GFPLIN_API gfplin_status gfplin_verify_strong(const gfplin_pencil *l, const gfplin_poly *p,
                                              int trials, uint64_t seed, int *pass,
                                              gfplin_complex *constant);

/* Finite eigenvalues of P through a linearization. */
GFPLIN_API gfplin_status gfplin_polyeig(const gfplin_poly *p, const char *kind,
                                        gfplin_eigs **out);
GFPLIN_API size_t gfplin_eigs_count(const gfplin_eigs *e);
GFPLIN_API gfplin_status gfplin_eigs_get(const gfplin_eigs *e, size_t i, gfplin_complex *delta,
                                         double *residual_right, double *residual_left);
GFPLIN_API void gfplin_eigs_free(gfplin_eigs *e);

/* Tolerance defaults with GFPLIN_* environment overrides applied. */
GFPLIN_API void gfplin_tolerances_default(gfplin_tolerances *tol);

/* Scales p by the scaling mode, then runs every linearization listed in lins (comma
 * separated). tol may be NULL for the defaults. */
GFPLIN_API gfplin_status gfplin_run_ratios(const gfplin_poly *p, const char *scaling,
                                           const char *lins, const gfplin_tolerances *tol,
                                           gfplin_report **out);
/* format is csv, json or svg. */
GFPLIN_API gfplin_status gfplin_report_write(const gfplin_report *r, const char *path,
                                             const char *format);
/* Text owned by the report. */
GFPLIN_API const char *gfplin_report_summary(const gfplin_report *r);
GFPLIN_API int gfplin_report_violations(const gfplin_report *r);
GFPLIN_API size_t gfplin_report_rows(const gfplin_report *r);
GFPLIN_API void gfplin_report_free(gfplin_report *r);

/* Renders an SVG from a diagnostics CSV file. */
GFPLIN_API gfplin_status gfplin_plot_csv(const char *csv_path, const char *svg_path);

#ifdef __cplusplus
}
#endif

#endif /* GFPLIN_H */
