/* minsph — numerical verification toolkit for isoperimetric inequalities of
 * closed minimal hypersurfaces in the unit sphere.
 *
 * C API: opaque handles, status codes, caller-freed strings. Every function
 * returns MINSPH_OK on success; on failure the thread-local message from
 * minsph_last_error() describes the problem. Strings returned through char**
 * are heap-allocated and must be released with minsph_string_free().
 */
#ifndef MINSPH_H
#define MINSPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minsph_status {
  MINSPH_OK = 0,
  MINSPH_ERR_INVALID_ARG = 1, /* bad arguments or descriptor / config parse failure */
  MINSPH_ERR_DOMAIN = 2,      /* input outside an operation's domain (s >= 1, ...) */
  MINSPH_ERR_HYPOTHESIS = 3,  /* surface violates a check's hypotheses */
  MINSPH_ERR_NUMERIC = 4,     /* non-finite integrand, optimizer self-check failure */
  MINSPH_ERR_INTERNAL = 5
} minsph_status;

typedef struct minsph_surface minsph_surface; /* opaque catalog member */
typedef struct minsph_run minsph_run;         /* opaque verify-run result */

/* Library version string, static storage. */
const char* minsph_version(void);

/* Thread-local message for the most recent failure, static storage. */
const char* minsph_last_error(void);

void minsph_string_free(char* s);

/* --- catalog surfaces ----------------------------------------------------- */

/* descriptor: "equator:<n>" or "clifford:<p>,<q>" */
minsph_status minsph_surface_create(const char* descriptor, minsph_surface** out);
void minsph_surface_free(minsph_surface* s);

/* n, ambient dimension, flags and closed-form volume as JSON. */
minsph_status minsph_surface_info_json(const minsph_surface* s, char** out_json);

/* Full frame at a chart point as JSON: position, normal, principal
 * curvatures, S, H, metric jacobian; with an optional axis descriptor the
 * heights phi, psi and |a^T|^2 are included. axis may be NULL. */
minsph_status minsph_surface_frame_json(const minsph_surface* s, const double* coords,
                                        size_t n_coords, const char* axis, char** out_json);

/* --- integrals ------------------------------------------------------------ */

/* quad: "gauss:<order>", "mc:<samples>:<seed>", or NULL/"" for the default.
 * axis: "e<k>", "-e<k>", "random:<seed>", or comma-separated components. */
minsph_status minsph_surface_volume(const minsph_surface* s, const char* quad, double* value,
                                    double* error);
minsph_status minsph_surface_moment2(const minsph_surface* s, const char* axis, const char* quad,
                                     double* value, double* error);
minsph_status minsph_surface_moment_abs(const minsph_surface* s, const char* axis,
                                        const char* quad, double* value, double* error);

/* Vol{|phi_a| >= s}. */
minsph_status minsph_surface_superlevel_volume(const minsph_surface* s, const char* axis,
                                               double level, const char* quad, double* value,
                                               double* error);

/* (n-1)-volume of {|phi_a| = s} (both sheets for s > 0, the nodal set at 0).
 * method: "auto", "analytic" or "band". near_critical is set to 1 when the
 * estimator refuses a certified value (error is +inf then). */
minsph_status minsph_surface_level_volume(const minsph_surface* s, const char* axis, double level,
                                          const char* method, const char* quad, double* value,
                                          double* error, int* near_critical);

/* min over the axis set of 2 Vol{phi_a=0} / Vol(M); axes uses the axis-set
 * grammar ("basis", "random:<k>:<seed>", "default[:<count>]", or a
 * semicolon-separated list). */
minsph_status minsph_surface_cheeger_upper(const minsph_surface* s, const char* axes,
                                           const char* quad, double* value);

/* --- constants ------------------------------------------------------------ */

/* Constants table for (n, s) as JSON; surface may be NULL (CSC
 * normalization) or a descriptor whose curvature integrals feed theta_1/2.
 * g in [2,6] adds the isoparametric bound; pass 0 to omit. */
minsph_status minsph_constants_json(int n, double s, const char* surface, int g, char** out_json);

/* CSV sweep of (s, C2, C_main, branch) over an s-grid spec "a:b:step". */
minsph_status minsph_constants_sweep_csv(int n, const char* s_grid, char** out_csv);

/* SVG profile of the C2 objective f(r) with the argmin marked. */
minsph_status minsph_constants_profile_svg(int n, double s, char** out_svg);

/* Catalog listing as JSON. */
minsph_status minsph_catalog_json(char** out_json);

/* --- verification runs ----------------------------------------------------- */

/* config_text: flat key=value lines (surface, axes, quad, s_grid, t_list,
 * checks, band, band_samples, method, format, out, seed, tolerance); missing
 * keys take documented defaults. The run executes once; the handle serves
 * every rendering of the result. */
minsph_status minsph_verify_run(const char* config_text, minsph_run** out);
void minsph_run_free(minsph_run* r);

/* Report bundle renderings; byte-stable for a fixed config. */
minsph_status minsph_run_json(const minsph_run* r, char** out_json);
minsph_status minsph_run_csv(const minsph_run* r, char** out_csv);
minsph_status minsph_run_table(const minsph_run* r, char** out_table);

/* 0 all-pass, 2 any FAIL verdict. */
int minsph_run_exit_code(const minsph_run* r);

/* Margin-vs-s sweep; returns CSV and SVG (either out pointer may be NULL). */
minsph_status minsph_sweep_run(const char* config_text, char** out_csv, char** out_svg,
                               int* exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MINSPH_H */
