#include "hull.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

namespace abrade {

namespace {

Vec3 mean_point(std::span<const Vec3> pts) {
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  return c / double(pts.size());
}

double cross2(const Vec3& a, const Vec3& b) { return a.x() * b.y() - a.y() * b.x(); }

// Facet plane of the directed 2D edge a -> b of a CCW ring.
HalfSpace edge_plane(const Vec3& a, const Vec3& b) {
  const Vec3 e = b - a;
  HalfSpace h;
  h.normal = Vec3(e.y(), -e.x(), 0.0).normalized();
  h.offset = 0.5 * (h.normal.dot(a) + h.normal.dot(b));
  return h;
}

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  if (a.y() != b.y()) return a.y() < b.y();
  return a.z() < b.z();
}

// Sorts polygon vertices counter-clockwise around `normal`.
void sort_ccw(std::vector<int>& ids, std::span<const Vec3> pts, const Vec3& normal) {
  if (ids.size() < 3) return;
  Vec3 m = Vec3::Zero();
  for (int i : ids) m += pts[i];
  m /= double(ids.size());
  Vec3 e1 = pts[ids[0]] - m;
  e1 -= normal * normal.dot(e1);
  if (e1.norm() == 0.0) e1 = normal.unitOrthogonal();
  e1.normalize();
  const Vec3 e2 = normal.cross(e1);
  std::vector<std::pair<double, int>> keyed;
  keyed.reserve(ids.size());
  for (int i : ids) {
    const Vec3 d = pts[i] - m;
    keyed.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = keyed[k].second;
}

// Quickhull over centred points with an epsilon-thick visibility test.
class QuickHull {
 public:
  struct Face {
    std::array<int, 3> v{};
    std::array<int, 3> nb{-1, -1, -1};  // neighbour across edge v[i] -> v[i+1]
    Vec3 n = Vec3::Zero();
    double off = 0.0;
    std::vector<int> outside;
    bool alive = true;
    int mark = 0;
  };

  QuickHull(std::span<const Vec3> pts, double eps) : p_(pts), eps_(eps) {}

  void build(const std::array<int, 4>& simplex) {
    const Vec3 centre = (p_[simplex[0]] + p_[simplex[1]] + p_[simplex[2]] +
                         p_[simplex[3]]) / 4.0;
    const std::array<std::array<int, 3>, 4> tris = {{
        {simplex[0], simplex[1], simplex[2]},
        {simplex[0], simplex[1], simplex[3]},
        {simplex[0], simplex[2], simplex[3]},
        {simplex[1], simplex[2], simplex[3]},
    }};
    std::map<std::pair<int, int>, int> directed;
    for (auto t : tris) {
      int f = make_face(t[0], t[1], t[2]);
      if (faces_[f].n.dot(centre) - faces_[f].off > 0.0) {
        std::swap(t[1], t[2]);
        faces_.pop_back();
        f = make_face(t[0], t[1], t[2]);
      }
      for (int e = 0; e < 3; ++e) directed[{t[e], t[(e + 1) % 3]}] = f;
    }
    for (int f = 0; f < 4; ++f) {
      for (int e = 0; e < 3; ++e) {
        const auto& v = faces_[f].v;
        faces_[f].nb[e] = directed.at({v[(e + 1) % 3], v[e]});
      }
    }

    for (int q = 0; q < int(p_.size()); ++q) {
      if (std::find(simplex.begin(), simplex.end(), q) != simplex.end()) continue;
      for (int f = 0; f < 4; ++f) {
        if (dist(f, q) > eps_) {
          faces_[f].outside.push_back(q);
          break;
        }
      }
    }

    std::vector<int> pending;
    for (int f = 0; f < 4; ++f)
      if (!faces_[f].outside.empty()) pending.push_back(f);

    int iteration = 0;
    while (!pending.empty()) {
      const int fi = pending.back();
      pending.pop_back();
      if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
      ++iteration;
      add_point(fi, iteration, pending);
    }
  }

  const std::vector<Face>& faces() const { return faces_; }

 private:
  int make_face(int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    const Vec3 n = (p_[b] - p_[a]).cross(p_[c] - p_[a]);
    const double len = n.norm();
    f.n = len > 0.0 ? Vec3(n / len) : Vec3::Zero();
    f.off = (f.n.dot(p_[a]) + f.n.dot(p_[b]) + f.n.dot(p_[c])) / 3.0;
    faces_.push_back(std::move(f));
    return int(faces_.size()) - 1;
  }

  double dist(int f, int q) const { return faces_[f].n.dot(p_[q]) - faces_[f].off; }

  void add_point(int fi, int iteration, std::vector<int>& pending) {
    auto& seed = faces_[fi];
    int eye = seed.outside.front();
    double best = dist(fi, eye);
    for (int q : seed.outside) {
      const double d = dist(fi, q);
      if (d > best) {
        best = d;
        eye = q;
      }
    }

    struct HorizonEdge {
      int a, b, face;
    };
    std::vector<int> visible{fi};
    std::vector<HorizonEdge> horizon;
    faces_[fi].mark = iteration;
    for (std::size_t k = 0; k < visible.size(); ++k) {
      const int f = visible[k];
      for (int e = 0; e < 3; ++e) {
        const int g = faces_[f].nb[e];
        if (faces_[g].mark == iteration) continue;
        if (faces_[g].mark != -iteration && dist(g, eye) > eps_) {
          faces_[g].mark = iteration;
          visible.push_back(g);
        } else {
          faces_[g].mark = -iteration;
          horizon.push_back({faces_[f].v[e], faces_[f].v[(e + 1) % 3], g});
        }
      }
    }

    std::unordered_map<int, int> by_start, by_end;
    std::vector<int> created;
    created.reserve(horizon.size());
    for (const auto& h : horizon) {
      const int nf = make_face(h.a, h.b, eye);
      faces_[nf].nb[0] = h.face;
      auto& g = faces_[h.face];
      for (int e = 0; e < 3; ++e) {
        if (g.v[e] == h.b && g.v[(e + 1) % 3] == h.a) g.nb[e] = nf;
      }
      if (!by_start.emplace(h.a, nf).second || !by_end.emplace(h.b, nf).second) {
        throw GeometryError(ErrorCode::Numerical, "hull3: horizon is not a simple cycle");
      }
      created.push_back(nf);
    }
    for (int nf : created) {
      auto& f = faces_[nf];
      const auto s = by_start.find(f.v[1]);
      const auto t = by_end.find(f.v[0]);
      if (s == by_start.end() || t == by_end.end()) {
        throw GeometryError(ErrorCode::Numerical, "hull3: horizon is not closed");
      }
      f.nb[1] = s->second;
      f.nb[2] = t->second;
    }

    for (int f : visible) {
      for (int q : faces_[f].outside) {
        if (q == eye) continue;
        for (int nf : created) {
          if (dist(nf, q) > eps_) {
            faces_[nf].outside.push_back(q);
            break;
          }
        }
      }
      faces_[f].alive = false;
      faces_[f].outside.clear();
      faces_[f].outside.shrink_to_fit();
    }
    for (int nf : created)
      if (!faces_[nf].outside.empty()) pending.push_back(nf);
  }

  std::span<const Vec3> p_;
  double eps_;
  std::vector<Face> faces_;
};

std::array<int, 4> initial_simplex(std::span<const Vec3> p, double tol) {
  int axis = 0;
  std::array<int, 3> lo{}, hi{};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < int(p.size()); ++i) {
      if (p[i][k] < p[lo[k]][k]) lo[k] = i;
      if (p[i][k] > p[hi[k]][k]) hi[k] = i;
    }
    if (p[hi[k]][k] - p[lo[k]][k] > p[hi[axis]][axis] - p[lo[axis]][axis]) axis = k;
  }
  const int i0 = lo[axis], i1 = hi[axis];
  if (p[i1][axis] - p[i0][axis] <= tol) {
    throw GeometryError(ErrorCode::DegenerateInput, "hull3: points coincide");
  }
  const Vec3 dir = (p[i1] - p[i0]).normalized();
  int i2 = -1;
  double best = tol;
  for (int i = 0; i < int(p.size()); ++i) {
    const double d = (p[i] - p[i0]).cross(dir).norm();
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) throw GeometryError(ErrorCode::DegenerateInput, "hull3: points are collinear");
  const Vec3 n = (p[i1] - p[i0]).cross(p[i2] - p[i0]).normalized();
  int i3 = -1;
  best = tol;
  for (int i = 0; i < int(p.size()); ++i) {
    const double d = std::abs(n.dot(p[i] - p[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) throw GeometryError(ErrorCode::DegenerateInput, "hull3: points are coplanar");
  return {i0, i1, i2, i3};
}

}  // namespace

namespace detail {

std::vector<int> hull2_ring(std::span<const Vec3> points, double tol) {
  const int n = int(points.size());
  if (n < 3) throw GeometryError(ErrorCode::DegenerateInput, "hull2: fewer than 3 points");
  const Vec3 c = mean_point(points);
  std::vector<Vec3> p(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    p[i] = points[i] - c;
    p[i].z() = 0.0;
    s = std::max(s, p[i].norm());
  }
  if (!(s > 0.0)) throw GeometryError(ErrorCode::DegenerateInput, "hull2: points coincide");
  const double eps = tol * s;

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(p[a], p[b]); });

  // keep `a` between o and b only if it sits more than tol right of o -> b
  auto keep = [&](int o, int a, int b, double tol) {
    return cross2(p[b] - p[o], p[a] - p[o]) < -tol * (p[b] - p[o]).norm();
  };
  // The chain itself uses the plain orientation test: a tolerance here can
  // discard a true corner when several points sit within roundoff of one
  // line and the sort visits them out of boundary order.
  std::vector<int> ring;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = ring.size();
    for (int k = 0; k < n; ++k) {
      const int i = pass == 0 ? idx[k] : idx[n - 1 - k];
      while (ring.size() >= base + 2 && !keep(ring[ring.size() - 2], ring.back(), i, 0.0))
        ring.pop_back();
      ring.push_back(i);
    }
    ring.pop_back();
  }

  // Near-collinear and near-duplicate vertices go once the ring is in order.
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const std::size_t m = ring.size();
      const int o = ring[(k + m - 1) % m], a = ring[k], b = ring[(k + 1) % m];
      if (!keep(o, a, b, eps)) {
        ring.erase(ring.begin() + long(k));
        changed = true;
        break;
      }
    }
  }
  if (ring.size() < 3) throw GeometryError(ErrorCode::DegenerateInput, "hull2: points are collinear");
  return ring;
}

HullComplex hull3_complex(std::span<const Vec3> input, double tol, double visibility_tol) {
  const int n = int(input.size());
  if (n < 4) throw GeometryError(ErrorCode::DegenerateInput, "hull3: fewer than 4 points");
  const Vec3 c = mean_point(input);
  std::vector<Vec3> p(n);
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    p[i] = input[i] - c;
    s = std::max(s, p[i].norm());
  }
  if (!(s > 0.0)) throw GeometryError(ErrorCode::DegenerateInput, "hull3: points coincide");
  const double merge = tol * s;

  QuickHull qh(p, visibility_tol * s);
  qh.build(initial_simplex(p, merge));
  const auto& faces = qh.faces();

  // Grow coplanar clusters from the largest triangles outwards.
  std::vector<int> alive;
  for (int f = 0; f < int(faces.size()); ++f)
    if (faces[f].alive) alive.push_back(f);
  std::vector<Vec3> area(faces.size(), Vec3::Zero());
  for (int f : alive) {
    const auto& v = faces[f].v;
    area[f] = (p[v[1]] - p[v[0]]).cross(p[v[2]] - p[v[0]]);
  }
  std::vector<int> order = alive;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return area[a].norm() > area[b].norm(); });
  std::vector<int> cluster(faces.size(), -1);
  std::vector<Vec3> cluster_area;
  for (int seed : order) {
    if (cluster[seed] >= 0) continue;
    const int cid = int(cluster_area.size());
    cluster_area.push_back(Vec3::Zero());
    const Vec3 sn = faces[seed].n;
    const double so = faces[seed].off;
    std::vector<int> queue{seed};
    cluster[seed] = cid;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int f = queue[k];
      cluster_area[cid] += area[f];
      for (int g : faces[f].nb) {
        if (cluster[g] >= 0) continue;
        bool flat = true;
        for (int v : faces[g].v) flat = flat && std::abs(sn.dot(p[v]) - so) <= merge;
        if (flat) {
          cluster[g] = cid;
          queue.push_back(g);
        }
      }
    }
  }

  // A hull vertex is a point shared by at least three clusters.
  std::unordered_map<int, std::vector<int>> incident;
  for (int f : alive) {
    for (int v : faces[f].v) {
      auto& list = incident[v];
      if (std::find(list.begin(), list.end(), cluster[f]) == list.end())
        list.push_back(cluster[f]);
    }
  }
  const int nclusters = int(cluster_area.size());
  std::vector<std::vector<int>> cluster_vertices(nclusters);
  HullComplex out;
  for (const auto& [v, list] : incident) {
    if (list.size() < 3) continue;
    out.vertices.push_back(v);
    for (int cid : list) cluster_vertices[cid].push_back(v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());

  for (int cid = 0; cid < nclusters; ++cid) {
    auto& ids = cluster_vertices[cid];
    if (ids.size() < 3) continue;
    HullComplex::Face face;
    face.normal = cluster_area[cid].normalized();
    double off = -std::numeric_limits<double>::infinity();
    for (int v : out.vertices) off = std::max(off, face.normal.dot(p[v]));
    face.offset = off + face.normal.dot(c);
    sort_ccw(ids, p, face.normal);
    face.vertices = ids;
    out.faces.push_back(std::move(face));
  }

  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < int(out.faces.size()); ++f) {
    const auto& vs = out.faces[f].vertices;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const int a = vs[k], b = vs[(k + 1) % vs.size()];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  for (const auto& [key, fs] : edge_faces) {
    if (fs.size() != 2) {
      throw GeometryError(ErrorCode::Numerical, "hull3: facet complex is not a closed surface");
    }
    out.edges.push_back({{key.first, key.second}, {fs[0], fs[1]}});
  }
  const long euler = long(out.vertices.size()) - long(out.edges.size()) + long(out.faces.size());
  if (euler != 2) throw GeometryError(ErrorCode::Numerical, "hull3: Euler characteristic violated");
  return out;
}

}  // namespace detail

ConvexBody hull2(std::span<const Vec3> points, double tol) {
  const auto ring = detail::hull2_ring(points, tol);
  std::vector<Vec3> verts;
  verts.reserve(ring.size());
  for (int i : ring) verts.push_back(make_point(points[i].x(), points[i].y()));
  std::vector<Facet> facets(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::size_t j = (i + 1) % verts.size();
    facets[i].plane = edge_plane(verts[i], verts[j]);
    facets[i].vertices = {int(i), int(j)};
  }
  return ConvexBody(2, std::move(verts), std::move(facets), {});
}

namespace {

// Canonical 3D body: vertices sorted lexicographically, each facet polygon
// rotated to start at its smallest vertex, facets and edges sorted.
ConvexBody assemble3(std::vector<Vec3> verts, std::vector<Facet> facets, std::vector<Edge> edges) {
  std::vector<int> perm(verts.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return lex_less(verts[a], verts[b]); });
  std::vector<int> rank(verts.size());
  std::vector<Vec3> sorted(verts.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    rank[perm[k]] = int(k);
    sorted[k] = verts[perm[k]];
  }
  for (auto& f : facets) {
    for (int& v : f.vertices) v = rank[v];
    std::rotate(f.vertices.begin(), std::min_element(f.vertices.begin(), f.vertices.end()),
                f.vertices.end());
  }
  std::vector<int> fperm(facets.size());
  std::iota(fperm.begin(), fperm.end(), 0);
  std::sort(fperm.begin(), fperm.end(),
            [&](int a, int b) { return facets[a].vertices < facets[b].vertices; });
  std::vector<int> frank(facets.size());
  std::vector<Facet> fsorted(facets.size());
  for (std::size_t k = 0; k < fperm.size(); ++k) {
    frank[fperm[k]] = int(k);
    fsorted[k] = std::move(facets[fperm[k]]);
  }
  for (auto& e : edges) {
    for (int& v : e.vertices) v = rank[v];
    for (int& f : e.facets) f = frank[f];
    if (e.vertices[0] > e.vertices[1]) std::swap(e.vertices[0], e.vertices[1]);
    if (e.facets[0] > e.facets[1]) std::swap(e.facets[0], e.facets[1]);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
  return ConvexBody(3, std::move(sorted), std::move(fsorted), std::move(edges));
}

}  // namespace

ConvexBody hull3(std::span<const Vec3> points, double tol) {
  // Sliver facets narrower than the merge tolerance can be split between
  // their two neighbours inconsistently; a coarser merge absorbs them.
  detail::HullComplex cx;
  for (int attempt = 0;; ++attempt) {
    try {
      cx = detail::hull3_complex(points, tol, tol * 1e-2);
      break;
    } catch (const GeometryError& e) {
      if (e.code() != ErrorCode::Numerical || attempt == kMergeRetries) throw;
      tol *= 10.0;
    }
  }
  std::unordered_map<int, int> local;
  std::vector<Vec3> verts;
  for (int v : cx.vertices) {
    local[v] = int(verts.size());
    verts.push_back(points[v]);
  }
  std::vector<Facet> facets;
  for (const auto& f : cx.faces) {
    Facet facet;
    facet.plane = {f.normal, f.offset};
    for (int v : f.vertices) facet.vertices.push_back(local.at(v));
    facets.push_back(std::move(facet));
  }
  std::vector<Edge> edges = cx.edges;
  for (auto& e : edges)
    for (int& v : e.vertices) v = local.at(v);
  return assemble3(std::move(verts), std::move(facets), std::move(edges));
}

ConvexBody convex_hull(int dim, std::span<const Vec3> points, double tol) {
  if (dim == 2) return hull2(points, tol);
  if (dim == 3) return hull3(points, tol);
  throw GeometryError(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
}

namespace {

// Dual tolerance: merging dual facets collapses primal vertices, so it is
// kept well below the primal merge tolerance.
constexpr double kDualTol = 1e-11;

Vec3 solve_vertex(int dim, std::span<const HalfSpace> hs, std::span<const int> ids,
                  std::span<const double> slack, const Vec3& origin) {
  Eigen::MatrixXd a(ids.size(), dim);
  Eigen::VectorXd b(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (int j = 0; j < dim; ++j) a(long(k), j) = hs[ids[k]].normal[j];
    b(long(k)) = slack[ids[k]];
  }
  const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
  Vec3 out = origin;
  for (int j = 0; j < dim; ++j) out[j] += x(j);
  return out;
}

}  // namespace

ConvexBody halfspace_intersection(int dim, std::span<const HalfSpace> hs,
                                  const Vec3& interior_point) {
  if (dim != 2 && dim != 3) throw GeometryError(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
  if (int(hs.size()) < dim + 1) {
    throw GeometryError(ErrorCode::Unbounded, "fewer than d+1 halfspaces cannot bound a body");
  }
  Vec3 origin = interior_point;
  if (dim == 2) origin.z() = 0.0;
  std::vector<double> slack(hs.size());
  std::vector<Vec3> dual(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    slack[i] = hs[i].slack(origin);
    if (!(slack[i] > 0.0)) {
      throw GeometryError(ErrorCode::EmptyOrLowerDim,
                          "interior point is not strictly inside every halfspace");
    }
    dual[i] = hs[i].normal / slack[i];
  }
  double dual_scale = 0.0;
  for (const auto& q : dual) dual_scale = std::max(dual_scale, q.norm());

  if (dim == 2) {
    std::vector<int> ring;
    try {
      ring = detail::hull2_ring(dual, kDualTol);
    } catch (const GeometryError&) {
      throw GeometryError(ErrorCode::Unbounded, "halfspace normals do not positively span the plane");
    }
    const std::size_t m = ring.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Vec3& a = dual[ring[k]];
      const Vec3& b = dual[ring[(k + 1) % m]];
      if (cross2(b - a, -a) <= kDualTol * dual_scale * (b - a).norm()) {
        throw GeometryError(ErrorCode::Unbounded, "halfspace normals do not positively span the plane");
      }
    }
    // Primal vertex k lies on the lines of ring[k] and ring[k+1].
    std::vector<Vec3> verts(m);
    for (std::size_t k = 0; k < m; ++k) {
      const std::array<int, 2> ids{ring[k], ring[(k + 1) % m]};
      verts[k] = solve_vertex(2, hs, ids, slack, origin);
    }
    std::size_t start = 0;
    for (std::size_t k = 1; k < m; ++k)
      if (lex_less(verts[k], verts[start])) start = k;
    std::vector<Vec3> ordered(m);
    std::vector<Facet> facets(m);
    for (std::size_t k = 0; k < m; ++k) {
      ordered[k] = verts[(start + k) % m];
      const int src = ring[(start + k + 1) % m];
      facets[k].plane = hs[src];
      facets[k].vertices = {int(k), int((k + 1) % m)};
      facets[k].source = src;
    }
    return ConvexBody(2, std::move(ordered), std::move(facets), {});
  }

  detail::HullComplex cx;
  try {
    cx = detail::hull3_complex(dual, kDualTol, kDualTol * 1e-2);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::DegenerateInput) {
      throw GeometryError(ErrorCode::Unbounded, "halfspace normals do not positively span space");
    }
    throw;
  }
  for (const auto& f : cx.faces) {
    if (f.offset <= 1e-12 * dual_scale) {
      throw GeometryError(ErrorCode::Unbounded, "halfspace normals do not positively span space");
    }
  }
  // Dual faces are primal vertices; dual vertices are primal facets.
  std::vector<Vec3> verts;
  verts.reserve(cx.faces.size());
  for (const auto& f : cx.faces) verts.push_back(solve_vertex(3, hs, f.vertices, slack, origin));

  std::unordered_map<int, int> facet_of;
  std::vector<Facet> facets;
  for (int src : cx.vertices) {
    facet_of[src] = int(facets.size());
    Facet f;
    f.plane = hs[src];
    f.source = src;
    facets.push_back(std::move(f));
  }
  for (int v = 0; v < int(cx.faces.size()); ++v) {
    for (int src : cx.faces[v].vertices) facets[facet_of.at(src)].vertices.push_back(v);
  }
  for (auto& f : facets) sort_ccw(f.vertices, verts, f.plane.normal);
  std::vector<Edge> edges;
  edges.reserve(cx.edges.size());
  for (const auto& e : cx.edges) {
    Edge pe;
    pe.vertices = e.facets;
    pe.facets = {facet_of.at(e.vertices[0]), facet_of.at(e.vertices[1])};
    edges.push_back(pe);
  }
  return assemble3(std::move(verts), std::move(facets), std::move(edges));
}

}  // namespace abrade
