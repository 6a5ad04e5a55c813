// Command-line front end. Talks to the engine only through the C interface.
#include "abrade/abrade.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::json;

enum Exit { kOk = 0, kInput = 2, kMonotonicity = 3, kCollapse = 4, kReference = 5 };

struct CliError {
  int code;
  std::string message;
};

struct Free {
  void operator()(abrade_body* b) const { abrade_body_free(b); }
};
using Body = std::unique_ptr<abrade_body, Free>;

int exit_for(abrade_status s) {
  switch (s) {
    case ABRADE_COLLAPSE: return kCollapse;
    case ABRADE_REF_ON_BOUNDARY:
    case ABRADE_REF_OUTSIDE: return kReference;
    default: return kInput;
  }
}

void check(abrade_status s, const std::string& what) {
  if (s != ABRADE_OK) {
    throw CliError{exit_for(s), what + ": " + abrade_status_name(s) + " (" + abrade_last_error_message() + ")"};
  }
}

// ---- number formatting ----

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string fmt(std::optional<double> v) { return v ? fmt(*v) : std::string(); }

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ---- geometry input ----

struct Options {
  std::string input;
  std::string gen;
  int steps = 0;
  double t_max_frac = 0.95;
  int n = 512;
  double dt = 1e-3;
  std::optional<double> T;
  std::string ref;
  bool with_lower_bound = false;
  std::string out;
};

uint64_t env_seed() {
  const char* s = std::getenv("ABRADE_SEED");
  if (s == nullptr || *s == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || *end != '\0' || s[0] == '-') throw CliError{kInput, "ABRADE_SEED is not an unsigned integer"};
  return v;
}

std::vector<double> point3(const json& p, int dim, const char* what) {
  if (!p.is_array() || int(p.size()) != dim) {
    throw CliError{kInput, std::string(what) + " must have " + std::to_string(dim) + " coordinates"};
  }
  std::vector<double> out(3, 0.0);
  for (int j = 0; j < dim; ++j) {
    if (!p[j].is_number()) throw CliError{kInput, std::string(what) + " coordinates must be numbers"};
    out[j] = p[j].get<double>();
  }
  return out;
}

Body body_from_json(const json& doc) {
  if (!doc.is_object()) throw CliError{kInput, "geometry must be a JSON object"};
  const int sources = int(doc.contains("vertices")) + int(doc.contains("halfspaces")) + int(doc.contains("generator"));
  if (sources != 1) throw CliError{kInput, "geometry needs exactly one of vertices, halfspaces, generator"};
  abrade_body* raw = nullptr;
  if (doc.contains("generator")) {
    if (!doc["generator"].is_string()) throw CliError{kInput, "generator must be a string"};
    check(abrade_body_generate(doc["generator"].get<std::string>().c_str(), env_seed(), &raw), "generator");
    Body b(raw);
    if (doc.contains("dim") && doc["dim"] != abrade_body_dim(b.get())) {
      throw CliError{kInput, "dim does not match the generated body"};
    }
    return b;
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw CliError{kInput, "dim is required"};
  const int dim = doc["dim"].get<int>();
  if (dim != 2 && dim != 3) throw CliError{kInput, "dim must be 2 or 3"};
  if (doc.contains("vertices")) {
    const auto& vs = doc["vertices"];
    if (!vs.is_array()) throw CliError{kInput, "vertices must be a list of points"};
    std::vector<double> xyz;
    for (const auto& p : vs) {
      const auto q = point3(p, dim, "vertex");
      xyz.insert(xyz.end(), q.begin(), q.end());
    }
    check(abrade_body_from_points(dim, xyz.data(), vs.size(), &raw), "vertices");
    return Body(raw);
  }
  const auto& hs = doc["halfspaces"];
  if (!hs.is_array()) throw CliError{kInput, "halfspaces must be a list"};
  if (!doc.contains("interior")) throw CliError{kInput, "halfspace input needs an interior point"};
  std::vector<double> normals, offsets;
  for (const auto& h : hs) {
    if (!h.is_object() || !h.contains("n") || !h.contains("b") || !h["b"].is_number()) {
      throw CliError{kInput, "each halfspace needs n and b"};
    }
    const auto n = point3(h["n"], dim, "normal");
    normals.insert(normals.end(), n.begin(), n.end());
    offsets.push_back(h["b"].get<double>());
  }
  const auto interior = point3(doc["interior"], dim, "interior");
  check(abrade_body_from_halfspaces(dim, normals.data(), offsets.data(), offsets.size(), interior.data(), &raw),
        "halfspaces");
  return Body(raw);
}

// OFF: header, counts, then vertex coordinates; faces are ignored and the
// hull of the vertices is used.
Body body_from_off(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty() || tokens[0] != "OFF") throw CliError{kInput, "OFF header missing"};
  auto number = [&](std::size_t i) {
    if (i >= tokens.size()) throw CliError{kInput, "OFF file is truncated"};
    try {
      std::size_t used = 0;
      const double v = std::stod(tokens[i], &used);
      if (used != tokens[i].size()) throw std::invalid_argument(tokens[i]);
      return v;
    } catch (const std::exception&) {
      throw CliError{kInput, "bad number in OFF file: " + tokens[i]};
    }
  };
  const double nv = number(1);
  if (nv < 0 || nv != std::floor(nv)) throw CliError{kInput, "bad OFF vertex count"};
  std::vector<double> xyz;
  for (std::size_t i = 0; i < std::size_t(nv) * 3; ++i) xyz.push_back(number(4 + i));
  abrade_body* raw = nullptr;
  check(abrade_body_from_points(3, xyz.data(), std::size_t(nv), &raw), "OFF vertices");
  return Body(raw);
}

Body load_body(const Options& o) {
  if (o.input.empty() == o.gen.empty()) throw CliError{kInput, "give exactly one of --input and --gen"};
  if (!o.gen.empty()) {
    abrade_body* raw = nullptr;
    check(abrade_body_generate(o.gen.c_str(), env_seed(), &raw), "--gen " + o.gen);
    return Body(raw);
  }
  std::ifstream in(o.input);
  if (!in) throw CliError{kInput, "cannot open " + o.input};
  std::string head;
  in >> head;
  in.seekg(0);
  if (head.rfind("OFF", 0) == 0) return body_from_off(in);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw CliError{kInput, "malformed JSON in " + o.input + ": " + e.what()};
  }
  return body_from_json(doc);
}

// ---- small wrappers ----

double get(abrade_status (*fn)(const abrade_body*, double*), const abrade_body* b, const char* what) {
  double v = NAN;
  check(fn(b, &v), what);
  return v;
}

abrade_ball inscribed(const abrade_body* b) {
  abrade_ball ball{};
  check(abrade_inscribed_ball(b, &ball), "inscribed ball");
  return ball;
}

Body inner_parallel(const abrade_body* b, double t) {
  abrade_body* raw = nullptr;
  check(abrade_inner_parallel(b, t, &raw), "inner parallel body");
  return Body(raw);
}

std::vector<double> uniform(double end, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = end * i / (count - 1);
  return g;
}

// Evaluates fn(i) for i in [0, count) on worker threads; results keep grid
// order. The first failure (lowest index) is rethrown.
template <class R, class F>
std::vector<R> parallel_rows(int count, F fn) {
  std::vector<std::optional<R>> rows(count);
  std::vector<std::optional<CliError>> errors(count);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        rows[i] = fn(i);
      } catch (const CliError& e) {
        errors[i] = e;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(count, int(std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<R> out;
  for (int i = 0; i < count; ++i) {
    if (errors[i]) throw *errors[i];
    out.push_back(std::move(*rows[i]));
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CliError{kInput, "cannot write " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void check_grid_args(const Options& o) {
  if (o.steps < 2 || o.steps > 1000000) throw CliError{kInput, "--steps must lie in [2, 1e6]"};
  if (!(o.t_max_frac > 0.0 && o.t_max_frac < 1.0)) throw CliError{kInput, "--t-max-frac must lie in (0, 1)"};
}

enum class RefMode { None, Fixed, Centroid };

struct Reference {
  RefMode mode = RefMode::None;
  double point[3] = {0, 0, 0};
};

Reference parse_ref(const std::string& s, const abrade_body* k) {
  Reference r;
  if (s.empty()) return r;
  if (abrade_body_dim(k) != 2) throw CliError{kInput, "--ref needs a planar body"};
  if (s == "centroid") {
    r.mode = RefMode::Centroid;
    return r;
  }
  r.mode = RefMode::Fixed;
  if (s == "chebyshev") {
    const auto ball = inscribed(k);
    std::copy(ball.center, ball.center + 3, r.point);
    return r;
  }
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    std::size_t u1 = 0, u2 = 0;
    const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
    r.point[0] = std::stod(xs, &u1);
    r.point[1] = std::stod(ys, &u2);
    if (u1 != xs.size() || u2 != ys.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw CliError{kInput, "--ref expects X,Y, chebyshev or centroid"};
  }
  return r;
}

int critical_count(const abrade_body* kt, const Reference& ref) {
  double p[3];
  std::copy(ref.point, ref.point + 3, p);
  if (ref.mode == RefMode::Centroid) check(abrade_area_centroid(kt, p), "area centroid");
  int maxima = 0, minima = 0;
  check(abrade_critical_points(kt, p, &maxima, &minima, nullptr), "critical points");
  return maxima + minima;
}

// ---- flow ----

struct FlowRow {
  double t, v, a, i, r, big_r, alpha, residual;
  std::optional<int> n;
  std::optional<double> lower;
  std::size_t facets;
};

int cmd_flow(Options o) {
  if (o.steps == 0) o.steps = 50;
  check_grid_args(o);
  Body k = load_body(o);
  const Reference ref = parse_ref(o.ref, k.get());
  const double r0 = inscribed(k.get()).radius;
  const auto grid = uniform(o.t_max_frac * r0, o.steps);
  const int dim = abrade_body_dim(k.get());
  const int ball_facets = dim == 2 ? 256 : 320;

  Body k_end;
  if (o.with_lower_bound) k_end = inner_parallel(k.get(), grid.back());

  const auto rows = parallel_rows<FlowRow>(o.steps, [&](int idx) {
    const double t = grid[idx];
    Body kt = inner_parallel(k.get(), t);
    FlowRow row{};
    row.t = t;
    row.v = get(abrade_volume, kt.get(), "volume");
    row.a = get(abrade_surface_area, kt.get(), "surface area");
    row.i = get(abrade_iq, kt.get(), "isoperimetric quotient");
    row.r = inscribed(kt.get()).radius;
    abrade_ball outer{};
    check(abrade_enclosing_ball(kt.get(), &outer), "enclosing ball");
    row.big_r = outer.radius;
    row.alpha = row.big_r / row.r;
    row.residual = get(abrade_minkowski_residual, kt.get(), "minkowski residual");
    row.facets = abrade_body_facet_count(kt.get());
    if (ref.mode != RefMode::None) row.n = critical_count(kt.get(), ref);
    if (k_end) {
      double lb = NAN;
      check(abrade_lower_bound_iq(k_end.get(), grid.back(), t, ball_facets, &lb), "lower bound");
      row.lower = lb;
    }
    return row;
  });

  Output out(o.out);
  auto& os = out.stream();
  auto line = [](const FlowRow& r) {
    return fmt(r.t) + "," + fmt(r.v) + "," + fmt(r.a) + "," + fmt(r.i) + "," + fmt(r.r) + "," + fmt(r.big_r) +
           "," + fmt(r.alpha) + "," + (r.n ? std::to_string(*r.n) : std::string()) + "," + fmt(r.residual) + "," +
           fmt(r.lower) + "," + std::to_string(r.facets);
  };
  os << "t,V,A,I,r,R,alpha,N,minkowski_residual,lower_bound_I,facet_count\n";
  for (const auto& r : rows) os << line(r) << "\n";
  os.flush();

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& p = rows[i - 1];
    const auto& c = rows[i];
    const char* broken = nullptr;
    if (c.i - p.i > 1e-9) broken = "I increased";
    else if (c.alpha - p.alpha < -1e-9) broken = "alpha decreased";
    else if (ref.mode == RefMode::Fixed && *c.n > *p.n) broken = "N increased";
    if (broken) {
      std::cerr << "monotonicity violation (" << broken << ") at row:\n" << line(c) << "\n";
      return kMonotonicity;
    }
  }
  return kOk;
}

// ---- lindelof ----

int cmd_lindelof(Options o) {
  if (o.steps == 0) o.steps = 20;
  check_grid_args(o);
  Body k = load_body(o);
  abrade_body* raw = nullptr;
  check(abrade_form_body(k.get(), &raw), "form body");
  Body f(raw);
  int tangential = 0;
  check(abrade_is_tangential(k.get(), 0.0, &tangential), "tangency");
  const auto grid = uniform(1.0, o.steps);
  const auto iq = parallel_rows<double>(o.steps, [&](int idx) {
    abrade_body* b = nullptr;
    check(abrade_blend(k.get(), f.get(), grid[idx], &b), "blend");
    Body blend(b);
    return get(abrade_iq, blend.get(), "isoperimetric quotient");
  });

  Output out(o.out);
  auto& os = out.stream();
  os << "s,I\n";
  for (int i = 0; i < o.steps; ++i) os << fmt(grid[i]) << "," << fmt(iq[i]) << "\n";
  os.flush();
  for (int i = 1; i < o.steps; ++i) {
    const double d = iq[i] - iq[i - 1];
    if (d < -1e-9 || (!tangential && !(d > 0.0))) {
      std::cerr << "monotonicity violation (" << (d < -1e-9 ? "I decreased" : "I not strictly increasing")
                << ") at row:\n"
                << fmt(grid[i]) << "," << fmt(iq[i]) << "\n";
      return kMonotonicity;
    }
  }
  return kOk;
}

// ---- pde ----

int cmd_pde(const Options& o) {
  Body k = load_body(o);
  if (abrade_body_dim(k.get()) != 2) throw CliError{kInput, "pde needs a planar body"};
  if (o.n < 16) throw CliError{kInput, "--n must be at least 16"};
  if (!(o.dt > 0.0)) throw CliError{kInput, "--dt must be positive"};
  const auto ball = inscribed(k.get());
  const double T = o.T.value_or(0.5 * ball.radius);
  if (!(T >= 0.0)) throw CliError{kInput, "--T must be nonnegative"};

  std::vector<double> r0(o.n);
  check(abrade_pde_sample_body(k.get(), o.n, ball.center, r0.data()), "radial sampling");

  struct Trace {
    std::ostream* os;
  };
  Output out(o.out);
  auto& os = out.stream();
  os << "t,perimeter,area,I\n";
  Trace trace{&os};
  auto observer = [](double t, const double* r, int n, void* user) {
    double a = 0, p = 0, q = 0;
    if (abrade_pde_polar_measures(r, n, &a, &p, &q) != ABRADE_OK) return 1;
    *static_cast<Trace*>(user)->os << fmt(t) << "," << fmt(p) << "," << fmt(a) << "," << fmt(q) << "\n";
    return 0;
  };
  const abrade_status s = abrade_pde_run(r0.data(), o.n, T, o.dt, observer, &trace, nullptr);
  os.flush();
  check(s, "pde run");

  double sup = NAN, iqe = NAN;
  check(abrade_pde_compare_exact(r0.data(), o.n, T, o.n, o.dt, &sup, &iqe), "exact comparison");
  const json report = {{"T", T}, {"n", o.n}, {"dt", o.dt}, {"sup_error", num(sup)}, {"iq_error", num(iqe)}};
  std::cerr << report.dump() << "\n";
  return kOk;
}

// ---- critical ----

int cmd_critical(Options o) {
  if (o.steps == 0) o.steps = 30;
  check_grid_args(o);
  Body k = load_body(o);
  if (abrade_body_dim(k.get()) != 2) throw CliError{kInput, "critical needs a planar body"};
  const Reference ref = parse_ref(o.ref.empty() ? "chebyshev" : o.ref, k.get());
  const double r0 = inscribed(k.get()).radius;
  const auto grid = uniform(o.t_max_frac * r0, o.steps);

  // Rows are computed in full before printing so that a reference error
  // part-way through still reports the valid prefix.
  std::vector<std::optional<int>> counts(o.steps);
  std::optional<CliError> failure;
  std::size_t fail_at = grid.size();
  try {
    const auto all = parallel_rows<int>(o.steps, [&](int idx) {
      Body kt = inner_parallel(k.get(), grid[idx]);
      return critical_count(kt.get(), ref);
    });
    for (int i = 0; i < o.steps; ++i) counts[i] = all[i];
  } catch (const CliError& e) {
    failure = e;
    // recompute sequentially to locate the first failing row
    for (int i = 0; i < o.steps; ++i) {
      try {
        Body kt = inner_parallel(k.get(), grid[i]);
        counts[i] = critical_count(kt.get(), ref);
      } catch (const CliError&) {
        fail_at = i;
        break;
      }
    }
  }

  Output out(o.out);
  auto& os = out.stream();
  os << "t,N\n";
  for (std::size_t i = 0; i < fail_at; ++i) os << fmt(grid[i]) << "," << *counts[i] << "\n";
  os.flush();
  if (failure) throw *failure;

  if (ref.mode == RefMode::Fixed) {
    for (int i = 1; i < o.steps; ++i) {
      if (*counts[i] > *counts[i - 1]) {
        std::cerr << "monotonicity violation (N increased) at row:\n" << fmt(grid[i]) << "," << *counts[i] << "\n";
        return kMonotonicity;
      }
    }
  }
  return kOk;
}

// ---- report / export ----

int cmd_report(const Options& o) {
  Body k = load_body(o);
  const abrade_body* b = k.get();
  const int dim = abrade_body_dim(b);
  const auto ball = inscribed(b);
  abrade_ball outer{};
  check(abrade_enclosing_ball(b, &outer), "enclosing ball");
  int tangential = 0, found = 0;
  double ts = NAN;
  check(abrade_is_tangential(b, 0.0, &tangential), "tangency");
  check(abrade_t_star(b, 0.0, &found, &ts), "t_star");

  abrade_body* raw = nullptr;
  check(abrade_form_body(b, &raw), "form body");
  Body f(raw);
  std::vector<double> mv(dim + 1), w(dim + 1);
  check(abrade_mixed_volumes(b, f.get(), mv.data(), mv.size()), "mixed volumes");
  check(abrade_steiner(b, w.data(), w.size()), "steiner");
  double ax = NAN, bx = NAN, cx = NAN;
  check(abrade_axes(b, &ax, &bx, &cx), "axes");
  int bounded = 0;
  size_t env_count = 0;
  check(abrade_envelope(b, &bounded, &env_count, nullptr), "envelope");

  json axes = {{"a", num(ax)}, {"b", num(bx)}};
  if (dim == 3) axes["c"] = num(cx);
  json mvj = json::array(), wj = json::array();
  for (double v : mv) mvj.push_back(num(v));
  for (double v : w) wj.push_back(num(v));

  const json report = {
      {"dim", dim},
      {"vertex_count", abrade_body_vertex_count(b)},
      {"facet_count", abrade_body_facet_count(b)},
      {"V", num(get(abrade_volume, b, "volume"))},
      {"A", num(get(abrade_surface_area, b, "surface area"))},
      {"I", num(get(abrade_iq, b, "isoperimetric quotient"))},
      {"r", num(ball.radius)},
      {"R", num(outer.radius)},
      {"alpha", num(outer.radius / ball.radius)},
      {"tangential", bool(tangential)},
      {"t_star", found ? json(ts) : json(nullptr)},
      {"mixed_volumes", mvj},
      {"steiner", wj},
      {"minkowski_residual", num(get(abrade_minkowski_residual, b, "minkowski residual"))},
      {"lower_bound_derivative", num(get(abrade_lower_bound_derivative, b, "lower bound derivative"))},
      {"axes", axes},
      {"envelope", {{"bounded", bool(bounded)}, {"facet_count", env_count}}},
  };
  Output out(o.out);
  out.stream() << report.dump(2) << "\n";
  return kOk;
}

int cmd_export(const Options& o) {
  Body k = load_body(o);
  const int dim = abrade_body_dim(k.get());
  json vertices = json::array();
  for (size_t i = 0; i < abrade_body_vertex_count(k.get()); ++i) {
    double p[3];
    check(abrade_body_vertex(k.get(), i, p), "vertex");
    vertices.push_back(dim == 2 ? json{p[0], p[1]} : json{p[0], p[1], p[2]});
  }
  Output out(o.out);
  out.stream() << json{{"dim", dim}, {"vertices", vertices}}.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex abrasion flow experiments"};
  app.require_subcommand(1);
  Options o;
  std::string t_arg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "geometry file (JSON or OFF)");
    sub->add_option("--gen", o.gen, "named generator, e.g. square, rect:2x1, random-hull:30:7");
    sub->add_option("--out", o.out, "write the primary output here instead of stdout");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--steps", o.steps, "number of grid points");
    sub->add_option("--t-max-frac", o.t_max_frac, "grid end as a fraction of the inradius");
  };

  auto* flow = app.add_subcommand("flow", "trace measures of K(t) on a uniform grid");
  add_common(flow);
  add_grid(flow);
  flow->add_option("--ref", o.ref, "also count critical points about X,Y|chebyshev|centroid");
  flow->add_flag("--with-lower-bound", o.with_lower_bound, "add the comparison-body lower bound column");

  auto* lind = app.add_subcommand("lindelof", "isoperimetric quotient along (1-s)K + sF(K)");
  add_common(lind);
  lind->add_option("--steps", o.steps, "number of grid points");

  auto* pde = app.add_subcommand("pde", "integrate the polar eikonal equation");
  add_common(pde);
  pde->add_option("--n", o.n, "angular samples");
  pde->add_option("--dt", o.dt, "time step (reduced to the stability limit when needed)");
  pde->add_option("--T", t_arg, "end time (default half the inradius)");

  auto* crit = app.add_subcommand("critical", "critical point counts along the flow");
  add_common(crit);
  add_grid(crit);
  crit->add_option("--ref", o.ref, "X,Y|chebyshev|centroid (default chebyshev)");

  auto* report = app.add_subcommand("report", "JSON summary of one body");
  add_common(report);
  auto* exp = app.add_subcommand("export", "write the body as vertices JSON");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (!t_arg.empty()) {
      std::size_t used = 0;
      try {
        o.T = std::stod(t_arg, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != t_arg.size()) throw CliError{kInput, "--T expects a number"};
    }
    if (*flow) return cmd_flow(o);
    if (*lind) return cmd_lindelof(o);
    if (*pde) return cmd_pde(o);
    if (*crit) return cmd_critical(o);
    if (*report) return cmd_report(o);
    if (*exp) return cmd_export(o);
  } catch (const CliError& e) {
    std::cerr << "abrade: " << e.message << "\n";
    return e.code;
  }
  return kInput;
}
