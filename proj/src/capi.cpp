#include "abrade/abrade.h"

#include "balls.hpp"
#include "critical_points.hpp"
#include "eikonal_pde.hpp"
#include "flow.hpp"
#include "hull.hpp"
#include "kernel.hpp"
#include "measures.hpp"
#include "shapes.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct abrade_body {
  abrade::ConvexBody body;
};

namespace {

using abrade::ConvexBody;
using abrade::ErrorCode;
using abrade::GeometryError;
using abrade::Vec3;

thread_local std::string g_last_error;

abrade_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ABRADE_INVALID_ARGUMENT;
    case ErrorCode::DegenerateInput: return ABRADE_DEGENERATE_INPUT;
    case ErrorCode::Unbounded: return ABRADE_UNBOUNDED;
    case ErrorCode::EmptyOrLowerDim: return ABRADE_EMPTY_OR_LOWER_DIM;
    case ErrorCode::EmptyBody: return ABRADE_EMPTY_BODY;
    case ErrorCode::DimensionMismatch: return ABRADE_DIMENSION_MISMATCH;
    case ErrorCode::BadRange: return ABRADE_BAD_RANGE;
    case ErrorCode::Collapse: return ABRADE_COLLAPSE;
    case ErrorCode::RefOnBoundary: return ABRADE_REF_ON_BOUNDARY;
    case ErrorCode::RefOutside: return ABRADE_REF_OUTSIDE;
    case ErrorCode::Numerical: return ABRADE_NUMERICAL;
  }
  return ABRADE_INTERNAL;
}

abrade_status fail(abrade_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
abrade_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return ABRADE_OK;
  } catch (const GeometryError& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ABRADE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ABRADE_INTERNAL, e.what());
  } catch (...) {
    return fail(ABRADE_INTERNAL, "unknown error");
  }
}

void need(const void* p) {
  if (p == nullptr) throw GeometryError(ErrorCode::InvalidArgument, "null pointer argument");
}

Vec3 vec(const double* p) { return Vec3(p[0], p[1], p[2]); }

void put(const Vec3& v, double* out) {
  out[0] = v[0];
  out[1] = v[1];
  out[2] = v[2];
}

void emit(ConvexBody b, abrade_body** out) { *out = new abrade_body{std::move(b)}; }

abrade::PolarCurve curve(const double* radii, int n) {
  need(radii);
  if (n < 1) throw GeometryError(ErrorCode::InvalidArgument, "empty curve");
  return abrade::PolarCurve{std::vector<double>(radii, radii + n)};
}

void check_dim(int dim) {
  if (dim != 2 && dim != 3) throw GeometryError(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
}

}  // namespace

extern "C" {

const char* abrade_status_name(abrade_status status) {
  switch (status) {
    case ABRADE_OK: return "OK";
    case ABRADE_INVALID_ARGUMENT: return "InvalidArgument";
    case ABRADE_DEGENERATE_INPUT: return "DegenerateInput";
    case ABRADE_UNBOUNDED: return "Unbounded";
    case ABRADE_EMPTY_OR_LOWER_DIM: return "EmptyOrLowerDim";
    case ABRADE_EMPTY_BODY: return "EmptyBody";
    case ABRADE_DIMENSION_MISMATCH: return "DimensionMismatch";
    case ABRADE_BAD_RANGE: return "BadRange";
    case ABRADE_COLLAPSE: return "Collapse";
    case ABRADE_REF_ON_BOUNDARY: return "RefOnBoundary";
    case ABRADE_REF_OUTSIDE: return "RefOutside";
    case ABRADE_NUMERICAL: return "Numerical";
    case ABRADE_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* abrade_last_error_message(void) { return g_last_error.c_str(); }

abrade_status abrade_body_from_points(int dim, const double* xyz, size_t count, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    check_dim(dim);
    if (count > 0) need(xyz);
    std::vector<Vec3> pts(count);
    for (size_t i = 0; i < count; ++i) {
      pts[i] = vec(xyz + 3 * i);
      if (dim == 2) pts[i][2] = 0.0;
      if (!pts[i].allFinite()) throw GeometryError(ErrorCode::InvalidArgument, "non-finite coordinate");
    }
    emit(abrade::convex_hull(dim, pts), out);
  });
}

abrade_status abrade_body_from_halfspaces(int dim, const double* normals, const double* offsets,
                                          size_t count, const double interior[3], abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    check_dim(dim);
    need(normals);
    need(offsets);
    need(interior);
    std::vector<abrade::HalfSpace> hs(count);
    for (size_t i = 0; i < count; ++i) {
      Vec3 n = vec(normals + 3 * i);
      if (dim == 2) n[2] = 0.0;
      const double len = n.norm();
      if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(offsets[i])) {
        throw GeometryError(ErrorCode::InvalidArgument, "halfspace normal must be finite and nonzero");
      }
      hs[i] = {n / len, offsets[i] / len};
    }
    Vec3 p = vec(interior);
    if (dim == 2) p[2] = 0.0;
    emit(abrade::halfspace_intersection(dim, hs, p), out);
  });
}

abrade_status abrade_body_generate(const char* name, uint64_t seed, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(name);
    emit(abrade::shapes::generate(name, seed), out);
  });
}

abrade_status abrade_body_clone(const abrade_body* body, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(body);
    emit(body->body, out);
  });
}

void abrade_body_free(abrade_body* body) { delete body; }

int abrade_body_dim(const abrade_body* body) { return body ? body->body.dim() : 0; }

size_t abrade_body_vertex_count(const abrade_body* body) {
  return body ? body->body.vertices().size() : 0;
}

abrade_status abrade_body_vertex(const abrade_body* body, size_t i, double out[3]) {
  return guard([&] {
    need(body);
    need(out);
    if (i >= body->body.vertices().size()) throw GeometryError(ErrorCode::InvalidArgument, "vertex index");
    put(body->body.vertex(i), out);
  });
}

size_t abrade_body_facet_count(const abrade_body* body) {
  return body ? body->body.facets().size() : 0;
}

abrade_status abrade_body_facet(const abrade_body* body, size_t i, double normal[3], double* offset,
                                int* source) {
  return guard([&] {
    need(body);
    if (i >= body->body.facets().size()) throw GeometryError(ErrorCode::InvalidArgument, "facet index");
    const auto& f = body->body.facet(i);
    if (normal) put(f.plane.normal, normal);
    if (offset) *offset = f.plane.offset;
    if (source) *source = f.source;
  });
}

abrade_status abrade_body_facet_vertices(const abrade_body* body, size_t i, int* indices, size_t capacity,
                                         size_t* count) {
  return guard([&] {
    need(body);
    need(count);
    if (i >= body->body.facets().size()) throw GeometryError(ErrorCode::InvalidArgument, "facet index");
    const auto& v = body->body.facet(i).vertices;
    *count = v.size();
    if (capacity > 0) need(indices);
    for (size_t k = 0; k < v.size() && k < capacity; ++k) indices[k] = v[k];
  });
}

size_t abrade_body_edge_count(const abrade_body* body) { return body ? body->body.edges().size() : 0; }

abrade_status abrade_body_edge(const abrade_body* body, size_t i, int vertices[2], int facets[2]) {
  return guard([&] {
    need(body);
    if (i >= body->body.edges().size()) throw GeometryError(ErrorCode::InvalidArgument, "edge index");
    const auto& e = body->body.edges()[i];
    if (vertices) {
      vertices[0] = e.vertices[0];
      vertices[1] = e.vertices[1];
    }
    if (facets) {
      facets[0] = e.facets[0];
      facets[1] = e.facets[1];
    }
  });
}

abrade_status abrade_body_validate(const abrade_body* body) {
  return guard([&] {
    need(body);
    const std::string msg = abrade::validate(body->body);
    if (!msg.empty()) throw GeometryError(ErrorCode::Numerical, msg);
  });
}

abrade_status abrade_body_scale(const abrade_body* body, double lambda, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(body);
    if (!std::isfinite(lambda) || lambda < 0.0) {
      throw GeometryError(ErrorCode::InvalidArgument, "scale factor must be finite and nonnegative");
    }
    emit(abrade::scaled(body->body, lambda), out);
  });
}

abrade_status abrade_body_translate(const abrade_body* body, const double v[3], abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(body);
    need(v);
    Vec3 t = vec(v);
    if (body->body.dim() == 2) t[2] = 0.0;
    emit(abrade::translated(body->body, t), out);
  });
}

abrade_status abrade_support(const abrade_body* body, const double u[3], double* value, double witness[3]) {
  return guard([&] {
    need(body);
    need(u);
    Vec3 d = vec(u);
    if (body->body.dim() == 2) d[2] = 0.0;
    const auto s = abrade::support(body->body, d);
    if (value) *value = s.value;
    if (witness) put(s.witness, witness);
  });
}

abrade_status abrade_minkowski_sum(const abrade_body* a, const abrade_body* b, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(a);
    need(b);
    emit(abrade::minkowski_sum(a->body, b->body), out);
  });
}

abrade_status abrade_homothety_check(const abrade_body* a, const abrade_body* b, double tol, int* found,
                                     double* ratio, double translation[3]) {
  return guard([&] {
    need(a);
    need(b);
    need(found);
    const auto h = abrade::homothety_check(a->body, b->body, tol);
    *found = h.has_value();
    if (h) {
      if (ratio) *ratio = h->ratio;
      if (translation) put(h->translation, translation);
    }
  });
}

static void fill_ball(const abrade::BallResult& b, abrade_ball* out) {
  put(b.center, out->center);
  out->radius = b.radius;
  out->unique_center = b.unique_center;
}

abrade_status abrade_inscribed_ball(const abrade_body* body, abrade_ball* out) {
  return guard([&] {
    need(body);
    need(out);
    fill_ball(abrade::inscribed_ball(body->body), out);
  });
}

abrade_status abrade_enclosing_ball(const abrade_body* body, abrade_ball* out) {
  return guard([&] {
    need(body);
    need(out);
    fill_ball(abrade::enclosing_ball(body->body), out);
    out->unique_center = 1;
  });
}

abrade_status abrade_asphericity(const abrade_body* body, double* out) {
  return guard([&] {
    need(body);
    need(out);
    *out = abrade::asphericity(body->body);
  });
}

abrade_status abrade_inner_parallel(const abrade_body* body, double t, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(body);
    emit(abrade::inner_parallel(body->body, t), out);
  });
}

abrade_status abrade_form_body(const abrade_body* body, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(body);
    emit(abrade::form_body(body->body), out);
  });
}

abrade_status abrade_is_tangential(const abrade_body* body, double tol, int* out) {
  return guard([&] {
    need(body);
    need(out);
    *out = abrade::is_tangential(body->body, tol > 0.0 ? tol : abrade::kTangentTol);
  });
}

abrade_status abrade_t_star(const abrade_body* body, double tol, int* found, double* out) {
  return guard([&] {
    need(body);
    need(found);
    const auto t = abrade::t_star(body->body, tol > 0.0 ? tol : 1e-9);
    *found = t.has_value();
    if (out) *out = t ? *t : std::numeric_limits<double>::quiet_NaN();
  });
}

abrade_status abrade_envelope(const abrade_body* body, int* bounded, size_t* halfspace_count,
                              abrade_body** out) {
  return guard([&] {
    if (out) *out = nullptr;
    need(body);
    auto e = abrade::envelope(body->body);
    if (bounded) *bounded = e.bounded;
    if (halfspace_count) *halfspace_count = e.halfspaces.size();
    if (out && e.body) emit(std::move(*e.body), out);
  });
}

abrade_status abrade_blend(const abrade_body* k, const abrade_body* f, double s, abrade_body** out) {
  return guard([&] {
    need(out);
    *out = nullptr;
    need(k);
    need(f);
    emit(abrade::blend(k->body, f->body, s), out);
  });
}

abrade_status abrade_comparison_bodies(const abrade_body* k0, double t0, double t, int ball_facets,
                                       abrade_body** inner, abrade_body** outer) {
  return guard([&] {
    need(inner);
    need(outer);
    *inner = nullptr;
    *outer = nullptr;
    need(k0);
    auto cb = abrade::comparison_bodies(k0->body, t0, t, ball_facets);
    auto in = std::make_unique<abrade_body>(abrade_body{std::move(cb.inner)});
    auto ou = std::make_unique<abrade_body>(abrade_body{std::move(cb.outer)});
    *inner = in.release();
    *outer = ou.release();
  });
}

#define ABRADE_SCALAR(fn, expr)                                 \
  abrade_status fn(const abrade_body* body, double* out) {      \
    return guard([&] {                                          \
      need(body);                                               \
      need(out);                                                \
      *out = expr(body->body);                                  \
    });                                                         \
  }

ABRADE_SCALAR(abrade_volume, abrade::volume)
ABRADE_SCALAR(abrade_surface_area, abrade::surface_area)
ABRADE_SCALAR(abrade_iq, abrade::iq)
ABRADE_SCALAR(abrade_minkowski_residual, abrade::minkowski_residual)
ABRADE_SCALAR(abrade_lower_bound_derivative, abrade::lower_bound_derivative)

#undef ABRADE_SCALAR

static void copy_row(const std::vector<double>& row, double* out, size_t capacity) {
  if (capacity < row.size()) throw GeometryError(ErrorCode::InvalidArgument, "output buffer too small");
  for (size_t i = 0; i < row.size(); ++i) out[i] = row[i];
}

abrade_status abrade_steiner(const abrade_body* body, double* out, size_t capacity) {
  return guard([&] {
    need(body);
    need(out);
    copy_row(abrade::steiner(body->body).w, out, capacity);
  });
}

abrade_status abrade_mixed_volumes(const abrade_body* k, const abrade_body* f, double* out,
                                   size_t capacity) {
  return guard([&] {
    need(k);
    need(f);
    need(out);
    copy_row(abrade::mixed_volumes(k->body, f->body).v, out, capacity);
  });
}

abrade_status abrade_lower_bound_iq(const abrade_body* k0, double t0, double t, int ball_facets,
                                    double* out) {
  return guard([&] {
    need(k0);
    need(out);
    *out = abrade::lower_bound_iq(k0->body, t0, t, ball_facets);
  });
}

abrade_status abrade_axes(const abrade_body* body, double* a, double* b, double* c) {
  return guard([&] {
    need(body);
    const auto ax = abrade::axes(body->body);
    if (a) *a = ax.a;
    if (b) *b = ax.b;
    if (c) *c = ax.c ? *ax.c : std::numeric_limits<double>::quiet_NaN();
  });
}

abrade_status abrade_normed_iq(const abrade_body* k, const abrade_body* c, double* out) {
  return guard([&] {
    need(k);
    need(c);
    need(out);
    *out = abrade::normed_iq(k->body, c->body);
  });
}

abrade_status abrade_critical_points(const abrade_body* body, const double ref[3], int* maxima,
                                     int* minima, int* degenerate) {
  return guard([&] {
    need(body);
    need(ref);
    const auto cs = abrade::critical_points(body->body, abrade::make_point(ref[0], ref[1]));
    if (maxima) *maxima = int(cs.maxima.size());
    if (minima) *minima = int(cs.minima.size());
    if (degenerate) *degenerate = cs.degenerate;
  });
}

abrade_status abrade_area_centroid(const abrade_body* body, double out[3]) {
  return guard([&] {
    need(body);
    need(out);
    put(abrade::area_centroid(body->body), out);
  });
}

abrade_status abrade_pde_sample_body(const abrade_body* body, int n, const double origin[3],
                                     double* radii) {
  return guard([&] {
    need(body);
    need(radii);
    const Vec3 o = origin ? abrade::make_point(origin[0], origin[1]) : Vec3::Zero();
    const auto c = abrade::sample_body(body->body, n, o);
    std::copy(c.r.begin(), c.r.end(), radii);
  });
}

abrade_status abrade_pde_cfl_limit(const double* radii, int n, double* out) {
  return guard([&] {
    need(out);
    *out = abrade::cfl_limit(curve(radii, n));
  });
}

abrade_status abrade_pde_step(const double* radii, int n, double dt, double* out) {
  return guard([&] {
    need(out);
    const auto next = abrade::pde_step(curve(radii, n), dt);
    std::copy(next.r.begin(), next.r.end(), out);
  });
}

namespace {
struct StopRun {};
}  // namespace

abrade_status abrade_pde_run(const double* radii, int n, double T, double dt, abrade_pde_observer observer,
                             void* user, double* final_radii) {
  abrade::PolarCurve last;
  const abrade_status s = guard([&] {
    try {
      abrade::pde_run(curve(radii, n), T, dt, [&](double t, const abrade::PolarCurve& c) {
        last = c;
        if (observer && observer(t, c.r.data(), c.n(), user) != 0) throw StopRun{};
      });
    } catch (const StopRun&) {
    }
  });
  if (final_radii && last.n() == n) std::copy(last.r.begin(), last.r.end(), final_radii);
  return s;
}

abrade_status abrade_pde_compare_exact(const double* radii, int n, double T, int n_body, double dt,
                                       double* sup_error, double* iq_error) {
  return guard([&] {
    const auto rep = abrade::compare_exact(curve(radii, n), T, n_body, dt);
    if (sup_error) *sup_error = rep.sup_error;
    if (iq_error) *iq_error = rep.iq_error;
  });
}

abrade_status abrade_pde_polar_measures(const double* radii, int n, double* area, double* perimeter,
                                        double* iq) {
  return guard([&] {
    const auto m = abrade::polar_measures(curve(radii, n));
    if (area) *area = m.area;
    if (perimeter) *perimeter = m.perimeter;
    if (iq) *iq = m.iq;
  });
}

}  // extern "C"
