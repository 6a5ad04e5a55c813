/* C interface to the abrasion geometry engine.
 *
 * Bodies are opaque, immutable handles. Every call returns an abrade_status;
 * on failure abrade_last_error_message() describes the error for the calling
 * thread. Points are always passed as three doubles (z ignored in 2D).
 * Functions producing a body hand ownership to the caller, who releases it
 * with abrade_body_free.
 */
#ifndef ABRADE_ABRADE_H
#define ABRADE_ABRADE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ABRADE_BUILDING)
#    define ABRADE_API __declspec(dllexport)
#  else
#    define ABRADE_API __declspec(dllimport)
#  endif
#else
#  define ABRADE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct abrade_body abrade_body;

typedef enum abrade_status {
  ABRADE_OK = 0,
  ABRADE_INVALID_ARGUMENT,
  ABRADE_DEGENERATE_INPUT,
  ABRADE_UNBOUNDED,
  ABRADE_EMPTY_OR_LOWER_DIM,
  ABRADE_EMPTY_BODY,
  ABRADE_DIMENSION_MISMATCH,
  ABRADE_BAD_RANGE,
  ABRADE_COLLAPSE,
  ABRADE_REF_ON_BOUNDARY,
  ABRADE_REF_OUTSIDE,
  ABRADE_NUMERICAL,
  ABRADE_INTERNAL
} abrade_status;

typedef struct abrade_ball {
  double center[3];
  double radius;
  int unique_center; /* inscribed balls only; 1 for enclosing balls */
} abrade_ball;

ABRADE_API const char* abrade_status_name(abrade_status status);
ABRADE_API const char* abrade_last_error_message(void);

/* ---- bodies ---- */

/* Convex hull of `count` points, each given as three doubles. */
ABRADE_API abrade_status abrade_body_from_points(int dim, const double* xyz, size_t count,
                                                 abrade_body** out);
/* Intersection of {x : <x, n_i> <= b_i}; normals are packed as three
 * doubles each and normalized on input. `interior` must satisfy every
 * inequality strictly. */
ABRADE_API abrade_status abrade_body_from_halfspaces(int dim, const double* normals,
                                                     const double* offsets, size_t count,
                                                     const double interior[3], abrade_body** out);
/* Named generator (square, cube, rect:WxH, regular-ngon:N, random-hull:N[:SEED],
 * random-hull3:N[:SEED], cut-square, tetrahedron, regular-tetrahedron,
 * ellipse:N:A:B). A nonzero seed overrides the generator's seed. */
ABRADE_API abrade_status abrade_body_generate(const char* name, uint64_t seed, abrade_body** out);
ABRADE_API abrade_status abrade_body_clone(const abrade_body* body, abrade_body** out);
ABRADE_API void abrade_body_free(abrade_body* body);

ABRADE_API int abrade_body_dim(const abrade_body* body);
ABRADE_API size_t abrade_body_vertex_count(const abrade_body* body);
ABRADE_API abrade_status abrade_body_vertex(const abrade_body* body, size_t i, double out[3]);
ABRADE_API size_t abrade_body_facet_count(const abrade_body* body);
/* `source` receives the generating halfspace index, or -1. */
ABRADE_API abrade_status abrade_body_facet(const abrade_body* body, size_t i, double normal[3],
                                           double* offset, int* source);
/* Writes up to `capacity` vertex indices of facet i and stores the full
 * count in *count. */
ABRADE_API abrade_status abrade_body_facet_vertices(const abrade_body* body, size_t i, int* indices,
                                                    size_t capacity, size_t* count);
ABRADE_API size_t abrade_body_edge_count(const abrade_body* body);
ABRADE_API abrade_status abrade_body_edge(const abrade_body* body, size_t i, int vertices[2],
                                          int facets[2]);
/* ABRADE_OK if the representation invariants hold, ABRADE_NUMERICAL otherwise. */
ABRADE_API abrade_status abrade_body_validate(const abrade_body* body);
ABRADE_API abrade_status abrade_body_scale(const abrade_body* body, double lambda, abrade_body** out);
ABRADE_API abrade_status abrade_body_translate(const abrade_body* body, const double v[3],
                                               abrade_body** out);

/* ---- kernel ---- */

ABRADE_API abrade_status abrade_support(const abrade_body* body, const double u[3], double* value,
                                        double witness[3]);
ABRADE_API abrade_status abrade_minkowski_sum(const abrade_body* a, const abrade_body* b,
                                              abrade_body** out);
/* *found is 1 and (ratio, translation) satisfy ratio * a + translation == b,
 * or *found is 0. */
ABRADE_API abrade_status abrade_homothety_check(const abrade_body* a, const abrade_body* b, double tol,
                                                int* found, double* ratio, double translation[3]);

/* ---- balls ---- */

ABRADE_API abrade_status abrade_inscribed_ball(const abrade_body* body, abrade_ball* out);
ABRADE_API abrade_status abrade_enclosing_ball(const abrade_body* body, abrade_ball* out);
ABRADE_API abrade_status abrade_asphericity(const abrade_body* body, double* out);

/* ---- flow ---- */

ABRADE_API abrade_status abrade_inner_parallel(const abrade_body* body, double t, abrade_body** out);
ABRADE_API abrade_status abrade_form_body(const abrade_body* body, abrade_body** out);
ABRADE_API abrade_status abrade_is_tangential(const abrade_body* body, double tol, int* out);
/* *found is 0 when the flow never becomes tangential. */
ABRADE_API abrade_status abrade_t_star(const abrade_body* body, double tol, int* found, double* out);
/* *body receives the envelope when bounded and NULL otherwise. */
ABRADE_API abrade_status abrade_envelope(const abrade_body* body, int* bounded, size_t* halfspace_count,
                                         abrade_body** out);
ABRADE_API abrade_status abrade_blend(const abrade_body* k, const abrade_body* f, double s,
                                      abrade_body** out);
ABRADE_API abrade_status abrade_comparison_bodies(const abrade_body* k0, double t0, double t,
                                                  int ball_facets, abrade_body** inner,
                                                  abrade_body** outer);

/* ---- measures ---- */

ABRADE_API abrade_status abrade_volume(const abrade_body* body, double* out);
ABRADE_API abrade_status abrade_surface_area(const abrade_body* body, double* out);
ABRADE_API abrade_status abrade_iq(const abrade_body* body, double* out);
/* `out` must hold dim + 1 values. */
ABRADE_API abrade_status abrade_steiner(const abrade_body* body, double* out, size_t capacity);
ABRADE_API abrade_status abrade_mixed_volumes(const abrade_body* k, const abrade_body* f, double* out,
                                              size_t capacity);
ABRADE_API abrade_status abrade_minkowski_residual(const abrade_body* body, double* out);
ABRADE_API abrade_status abrade_lower_bound_iq(const abrade_body* k0, double t0, double t,
                                               int ball_facets, double* out);
ABRADE_API abrade_status abrade_lower_bound_derivative(const abrade_body* body, double* out);
/* *c is NaN for planar bodies. */
ABRADE_API abrade_status abrade_axes(const abrade_body* body, double* a, double* b, double* c);
ABRADE_API abrade_status abrade_normed_iq(const abrade_body* k, const abrade_body* c, double* out);

/* ---- critical points (planar) ---- */

ABRADE_API abrade_status abrade_critical_points(const abrade_body* body, const double ref[3],
                                                int* maxima, int* minima, int* degenerate);
ABRADE_API abrade_status abrade_area_centroid(const abrade_body* body, double out[3]);

/* ---- polar eikonal PDE ----
 * Curves are arrays of n radii on the grid phi_k = 2 pi k / n. */

/* Return nonzero to stop the run early. */
typedef int (*abrade_pde_observer)(double t, const double* radii, int n, void* user);

ABRADE_API abrade_status abrade_pde_sample_body(const abrade_body* body, int n, const double origin[3],
                                                double* radii);
ABRADE_API abrade_status abrade_pde_cfl_limit(const double* radii, int n, double* out);
ABRADE_API abrade_status abrade_pde_step(const double* radii, int n, double dt, double* out);
/* Integrates to T; `final_radii` (may be NULL) receives the last state. On
 * ABRADE_COLLAPSE the observer has seen every state before the collapse. */
ABRADE_API abrade_status abrade_pde_run(const double* radii, int n, double T, double dt,
                                        abrade_pde_observer observer, void* user, double* final_radii);
ABRADE_API abrade_status abrade_pde_compare_exact(const double* radii, int n, double T, int n_body,
                                                  double dt, double* sup_error, double* iq_error);
ABRADE_API abrade_status abrade_pde_polar_measures(const double* radii, int n, double* area,
                                                   double* perimeter, double* iq);

#ifdef __cplusplus
}
#endif

#endif /* ABRADE_ABRADE_H */
