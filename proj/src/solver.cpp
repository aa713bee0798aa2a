#include "udg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "udg/catalog.hpp"

namespace udg {

namespace {

// Base vertices are placed from pins/parameters: orbit representatives when a
// symmetry is present, every vertex otherwise. Chain children are excluded.
std::vector<bool> base_mask(const Problem& p) {
  int n = p.graph.vertex_count();
  std::vector<bool> base(n, true);
  if (p.symmetry) {
    base.assign(n, false);
    for (const auto& o : p.symmetry->orbits) base[o.rep] = true;
  }
  for (const auto& st : p.chain.steps) base[st.to] = false;
  return base;
}

std::vector<bool> chain_child_mask(const Problem& p) {
  std::vector<bool> child(p.graph.vertex_count(), false);
  for (const auto& st : p.chain.steps) child[st.to] = true;
  return child;
}

}  // namespace

void Problem::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("problem: dim must be 1, 2 or 3");
  if (dim == 1 && !chain.steps.empty())
    throw std::invalid_argument("problem: chain steps need dim >= 2");
  int n = graph.vertex_count();
  if (symmetry) {
    if (symmetry->dim != dim) throw std::invalid_argument("problem: symmetry dim mismatch");
    symmetry->validate(n);
  }
  chain.validate(n);
  auto child = chain_child_mask(*this);
  if (symmetry) {
    std::vector<bool> rep(n, false);
    for (const auto& o : symmetry->orbits) rep[o.rep] = true;
    for (const auto& st : chain.steps)
      if (!rep[st.from] || !rep[st.to])
        throw std::invalid_argument("problem: chain endpoints must be orbit representatives");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& pin : gauge) {
    if (pin.vertex < 0 || pin.vertex >= n || pin.coord < 0 || pin.coord >= dim)
      throw std::invalid_argument("problem: gauge pin out of range");
    if (child[pin.vertex]) throw std::invalid_argument("problem: cannot pin a chain child");
    if (symmetry) {
      bool is_rep = false;
      for (const auto& o : symmetry->orbits) is_rep |= o.rep == pin.vertex;
      if (!is_rep) throw std::invalid_argument("problem: gauge pins must target representatives");
    }
    if (!seen.insert({pin.vertex, pin.coord}).second)
      throw std::invalid_argument("problem: duplicate gauge pin");
  }
}

std::vector<std::pair<int, int>> Problem::free_coords() const {
  std::set<std::pair<int, int>> pinned;
  for (const auto& pin : gauge) pinned.insert({pin.vertex, pin.coord});
  auto base = base_mask(*this);
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (!base[v]) continue;
    for (int c = 0; c < dim; ++c)
      if (!pinned.count({v, c})) out.push_back({v, c});
  }
  return out;
}

int Problem::param_count() const {
  return static_cast<int>(free_coords().size()) +
         chain.params_per_step(dim) * static_cast<int>(chain.steps.size());
}

std::vector<Edge> Problem::residual_edges() const {
  std::set<Edge> chain_edges;
  for (const auto& st : chain.steps)
    chain_edges.insert({std::min(st.from, st.to), std::max(st.from, st.to)});
  std::vector<Edge> out;
  for (const auto& e : graph.edges())
    if (!chain_edges.count(e)) out.push_back(e);
  return out;
}

std::vector<GaugePin> default_gauge(const Graph& g, int dim) {
  std::vector<GaugePin> pins;
  int n = g.vertex_count();
  for (int c = 0; c < dim && n >= 1; ++c) pins.push_back({0, c, "0"});
  for (int c = 1; c < dim && n >= 2; ++c) pins.push_back({1, c, "0"});
  if (dim == 3 && n >= 3) pins.push_back({2, 2, "0"});
  return pins;
}

namespace {

// Forward-accumulated evaluation: points for all vertices plus, optionally,
// d(point)/d(params) per vertex (dim x P, row major).
template <class T>
struct Eval {
  Points<T> pts;
  std::vector<T> jac;  // n * dim * P
  int P = 0;

  T* J(int v, int c) { return jac.data() + (static_cast<size_t>(v) * pts.dim + c) * P; }
  const T* J(int v, int c) const {
    return jac.data() + (static_cast<size_t>(v) * pts.dim + c) * P;
  }
};

template <class T>
Eval<T> evaluate(const Problem& p, const std::vector<T>& params, bool with_jacobian) {
  int n = p.graph.vertex_count();
  int dim = p.dim;
  int P = p.param_count();
  if (static_cast<int>(params.size()) != P)
    throw std::invalid_argument("solver: parameter count mismatch");

  Eval<T> ev;
  ev.P = P;
  ev.pts.dim = dim;
  ev.pts.coords.assign(static_cast<size_t>(n) * dim, T(0));
  if (with_jacobian) ev.jac.assign(static_cast<size_t>(n) * dim * P, T(0));

  // base vertices: pins then free parameters
  for (const auto& pin : p.gauge)
    ev.pts.row(pin.vertex)[pin.coord] = scalar_from_string<T>(pin.value);
  auto fc = p.free_coords();
  for (size_t i = 0; i < fc.size(); ++i) {
    auto [v, c] = fc[i];
    ev.pts.row(v)[c] = params[i];
    if (with_jacobian) ev.J(v, c)[i] = T(1);
  }

  // chain steps
  size_t pi = fc.size();
  for (const auto& st : p.chain.steps) {
    const T* a = ev.pts.row(st.from);
    T* b = ev.pts.row(st.to);
    if (dim == 2) {
      T u = params[pi];
      T den = u * u + T(1);
      T den2 = den * den;
      T c = (u * u - T(1)) / den;
      T s = T(2) * u / den;
      b[0] = a[0] + c;
      b[1] = a[1] + s;
      if (with_jacobian) {
        for (int k = 0; k < dim; ++k)
          for (int q = 0; q < P; ++q) ev.J(st.to, k)[q] = ev.J(st.from, k)[q];
        ev.J(st.to, 0)[pi] += T(4) * u / den2;
        ev.J(st.to, 1)[pi] += (T(2) - T(2) * u * u) / den2;
      }
      pi += 1;
    } else {
      T u = params[pi], v = params[pi + 1];
      T du = u * u + T(1), dv = v * v + T(1);
      T cu = (u * u - T(1)) / du, su = T(2) * u / du;
      T cv = (v * v - T(1)) / dv, sv = T(2) * v / dv;
      T dcu = T(4) * u / (du * du), dsu = (T(2) - T(2) * u * u) / (du * du);
      T dcv = T(4) * v / (dv * dv), dsv = (T(2) - T(2) * v * v) / (dv * dv);
      b[0] = a[0] + cu * cv;
      b[1] = a[1] + cu * sv;
      b[2] = a[2] + su;
      if (with_jacobian) {
        for (int k = 0; k < dim; ++k)
          for (int q = 0; q < P; ++q) ev.J(st.to, k)[q] = ev.J(st.from, k)[q];
        ev.J(st.to, 0)[pi] += dcu * cv;
        ev.J(st.to, 1)[pi] += dcu * sv;
        ev.J(st.to, 2)[pi] += dsu;
        ev.J(st.to, 0)[pi + 1] += cu * dcv;
        ev.J(st.to, 1)[pi + 1] += cu * dsv;
      }
      pi += 2;
    }
  }

  // orbit expansion
  if (p.symmetry) {
    const auto& spec = *p.symmetry;
    using std::cos;
    using std::sin;
    T ang = T(2) * pi_value<T>() / T(spec.rotation_order);
    T gc = cos(ang), gs = sin(ang);
    for (const auto& o : spec.orbits) {
      for (size_t i = 0; i + 1 < o.vertices.size(); ++i) {
        int src = o.vertices[i], dst = o.vertices[i + 1];
        const T* a = ev.pts.row(src);
        T* b = ev.pts.row(dst);
        T x = a[0] * gc - a[1] * gs;
        T y = a[0] * gs + a[1] * gc;
        if (spec.mirror) x = -x;
        b[0] = x;
        b[1] = y;
        if (dim == 3) b[2] = a[2];
        if (with_jacobian) {
          for (int q = 0; q < P; ++q) {
            T jx = ev.J(src, 0)[q] * gc - ev.J(src, 1)[q] * gs;
            T jy = ev.J(src, 0)[q] * gs + ev.J(src, 1)[q] * gc;
            if (spec.mirror) jx = -jx;
            ev.J(dst, 0)[q] = jx;
            ev.J(dst, 1)[q] = jy;
            if (dim == 3) ev.J(dst, 2)[q] = ev.J(src, 2)[q];
          }
        }
      }
    }
  }
  return ev;
}

template <class T>
std::vector<T> residuals_t(const Problem& p, const Eval<T>& ev,
                           const std::vector<Edge>& redges) {
  std::vector<T> r;
  r.reserve(redges.size());
  for (auto [u, v] : redges) {
    T s = T(0);
    for (int k = 0; k < p.dim; ++k) {
      T d = ev.pts.row(u)[k] - ev.pts.row(v)[k];
      s += d * d;
    }
    r.push_back(s - T(1));
  }
  return r;
}

template <class T>
std::vector<T> jacobian_t(const Problem& p, const Eval<T>& ev, const std::vector<Edge>& redges) {
  int P = ev.P;
  std::vector<T> J(redges.size() * P, T(0));
  for (size_t e = 0; e < redges.size(); ++e) {
    auto [u, v] = redges[e];
    for (int k = 0; k < p.dim; ++k) {
      T d = T(2) * (ev.pts.row(u)[k] - ev.pts.row(v)[k]);
      const T* ju = ev.J(u, k);
      const T* jv = ev.J(v, k);
      for (int q = 0; q < P; ++q) J[e * P + q] += d * (ju[q] - jv[q]);
    }
  }
  return J;
}

template <class T>
T norm2(const std::vector<T>& r) {
  using std::sqrt;
  T s = T(0);
  for (const auto& x : r) s += x * x;
  return sqrt(s);
}

// Solve A x = b in place by Gaussian elimination with partial pivoting.
template <class T>
bool dense_solve(std::vector<T> A, std::vector<T> b, int n, std::vector<T>& x) {
  using std::abs;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (abs(A[r * n + c]) > abs(A[piv * n + c])) piv = r;
    if (A[piv * n + c] == T(0)) return false;
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(A[piv * n + k], A[c * n + k]);
      std::swap(b[piv], b[c]);
    }
    for (int r = c + 1; r < n; ++r) {
      T f = A[r * n + c] / A[c * n + c];
      if (f == T(0)) continue;
      for (int k = c; k < n; ++k) A[r * n + k] -= f * A[c * n + k];
      b[r] -= f * b[c];
    }
  }
  x.assign(n, T(0));
  for (int r = n - 1; r >= 0; --r) {
    T s = b[r];
    for (int k = r + 1; k < n; ++k) s -= A[r * n + k] * x[k];
    x[r] = s / A[r * n + r];
  }
  return true;
}

// normal matrix J^T J + mu I and right-hand side -J^T r
template <class T>
void normal_system(const std::vector<T>& J, const std::vector<T>& r, int m, int P, const T& mu,
                   std::vector<T>& A, std::vector<T>& b) {
  A.assign(static_cast<size_t>(P) * P, T(0));
  b.assign(P, T(0));
  for (int e = 0; e < m; ++e) {
    const T* row = J.data() + static_cast<size_t>(e) * P;
    for (int i = 0; i < P; ++i) {
      for (int j = i; j < P; ++j) A[i * P + j] += row[i] * row[j];
      b[i] -= row[i] * r[e];
    }
  }
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < i; ++j) A[i * P + j] = A[j * P + i];
    A[i * P + i] += mu;
  }
}

// Levenberg-Marquardt at double precision; returns final parameters in place.
double lm_minimize(const Problem& p, const std::vector<Edge>& redges, std::vector<double>& x,
                   const SolverConfig& cfg) {
  auto ev = evaluate(p, x, true);
  auto r = residuals_t(p, ev, redges);
  auto J = jacobian_t(p, ev, redges);
  double nr = to_double(norm2(r));
  double lambda = cfg.initial_damping;
  int P = p.param_count();
  int m = static_cast<int>(redges.size());
  for (int it = 0; it < cfg.max_iterations && nr >= cfg.lm_exit_residual; ++it) {
    std::vector<double> A, b, delta;
    normal_system(J, r, m, P, lambda, A, b);
    if (!dense_solve(A, b, P, delta)) {
      lambda = std::min(lambda * 10, 1e14);
      continue;
    }
    std::vector<double> xn(x);
    for (int q = 0; q < P; ++q) xn[q] += delta[q];
    auto evn = evaluate(p, xn, false);
    auto rn = residuals_t(p, evn, redges);
    double nrn = to_double(norm2(rn));
    if (nrn < nr) {
      x = std::move(xn);
      nr = nrn;
      ev = evaluate(p, x, true);
      r = residuals_t(p, ev, redges);
      J = jacobian_t(p, ev, redges);
      lambda = std::max(lambda / 3, 1e-14);
    } else {
      lambda = lambda * 2;
      if (lambda > 1e14) break;
    }
  }
  return nr;
}

// Gauss-Newton polish at precision T with monotone step acceptance.
template <class T>
T refine(const Problem& p, const std::vector<Edge>& redges, std::vector<T>& x, double target,
         int max_iter = 80) {
  int P = p.param_count();
  int m = static_cast<int>(redges.size());
  auto ev = evaluate(p, x, true);
  auto r = residuals_t(p, ev, redges);
  T nr = norm2(r);
  for (int it = 0; it < max_iter && !(nr < T(target)); ++it) {
    auto J = jacobian_t(p, ev, redges);
    T mu = nr / 1000;
    std::vector<T> A, b, delta;
    normal_system(J, r, m, P, mu, A, b);
    if (!dense_solve(A, b, P, delta)) break;
    T scale = T(1);
    bool improved = false;
    for (int h = 0; h < 60; ++h) {
      std::vector<T> xn(x);
      for (int q = 0; q < P; ++q) xn[q] += scale * delta[q];
      auto evn = evaluate(p, xn, true);
      auto rn = residuals_t(p, evn, redges);
      T nrn = norm2(rn);
      if (nrn < nr) {
        x = std::move(xn);
        ev = std::move(evn);
        r = std::move(rn);
        nr = nrn;
        improved = true;
        break;
      }
      scale /= 2;
    }
    if (!improved) break;
  }
  return nr;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct SampleRng {
  std::uint64_t state;
  explicit SampleRng(std::uint64_t seed) : state(seed) {}
  double uniform(double a, double b) {
    state = splitmix64(state);
    return a + (b - a) * ((state >> 11) * 0x1.0p-53);
  }
};

std::vector<double> sample_params(const Problem& p, std::uint64_t seed) {
  SampleRng rng(seed);
  std::vector<double> x;
  size_t nfree = p.free_coords().size();
  int total = p.param_count();
  for (size_t i = 0; i < nfree; ++i) x.push_back(rng.uniform(-2, 2));
  for (int i = static_cast<int>(nfree); i < total; ++i) x.push_back(rng.uniform(-5, 5));
  return x;
}

}  // namespace

std::vector<double> residuals(const Problem& p, const std::vector<double>& params) {
  p.validate();
  auto ev = evaluate(p, params, false);
  auto redges = p.residual_edges();
  return residuals_t(p, ev, redges);
}

std::vector<double> residual_jacobian(const Problem& p, const std::vector<double>& params) {
  p.validate();
  auto ev = evaluate(p, params, true);
  auto redges = p.residual_edges();
  return jacobian_t(p, ev, redges);
}

double check_gradient(const Problem& p, const std::vector<double>& params) {
  p.validate();
  auto redges = p.residual_edges();
  auto J = residual_jacobian(p, params);
  int P = p.param_count();
  double h = 1e-6;
  double worst = 0;
  for (int q = 0; q < P; ++q) {
    std::vector<double> hi(params), lo(params);
    hi[q] += h;
    lo[q] -= h;
    auto rh = residuals(p, hi);
    auto rl = residuals(p, lo);
    for (size_t e = 0; e < redges.size(); ++e) {
      double fd = (rh[e] - rl[e]) / (2 * h);
      worst = std::max(worst, std::abs(fd - J[e * P + q]));
    }
  }
  return worst;
}

SolveOutcome solve(const Problem& p, const SolverConfig& cfg) {
  p.validate();
  auto redges = p.residual_edges();
  double target = cfg.effective_target();
  SolveOutcome out;

  for (int t = 0; t < cfg.restarts; ++t) {
    std::uint64_t seed_t = splitmix64(cfg.seed + static_cast<std::uint64_t>(t));
    std::vector<double> x = sample_params(p, seed_t);
    double nr = lm_minimize(p, redges, x, cfg);
    out.best_residual = std::min(out.best_residual, nr);
    out.restarts_used = t + 1;
    if (!(nr < cfg.lm_exit_residual)) continue;

    Solution sol;
    sol.restart_index = t;
    if (cfg.refine == SolverConfig::Refine::Decimal50) {
      std::vector<Dec50> xt(x.begin(), x.end());
      Dec50 nrt = refine<Dec50>(p, redges, xt, target);
      if (!(nrt < Dec50(target))) {
        out.best_residual = std::min(out.best_residual, to_double(nrt));
        continue;
      }
      auto ev = evaluate(p, xt, false);
      sol.embedding = Embedding::from_decimal50(std::move(ev.pts));
      sol.residual_norm = to_double(nrt);
      sol.params.assign(xt.size(), 0.0);
      for (size_t i = 0; i < xt.size(); ++i) sol.params[i] = to_double(xt[i]);
    } else {
      double nrt = to_double(refine<double>(p, redges, x, target));
      if (!(nrt < target)) {
        out.best_residual = std::min(out.best_residual, nrt);
        continue;
      }
      auto ev = evaluate(p, x, false);
      sol.embedding = Embedding::from_float64(std::move(ev.pts));
      sol.residual_norm = nrt;
      sol.params = x;
    }
    sol.report = verify(p.graph, sol.embedding);
    sol.pass = sol.report.pass;
    out.converged = true;
    out.solution = std::move(sol);
    return out;
  }
  return out;
}

namespace {

using nlohmann::json;

Graph graph_from_json(const json& j) {
  if (j.is_string()) {
    std::string ref = j.get<std::string>();
    if (ref.rfind("catalog:", 0) == 0) {
      auto id = catalog_id_from_string(ref.substr(8));
      if (!id) throw std::invalid_argument("problem: unknown catalog graph " + ref);
      return catalog_get(*id);
    }
    throw std::invalid_argument("problem: bad graph reference " + ref);
  }
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) es.push_back({e[0].get<int>(), e[1].get<int>()});
  return Graph(j.at("n").get<int>(), std::move(es));
}

std::string pin_value_from_json(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream os;
  os.precision(17);
  os << v.get<double>();
  return os.str();
}

}  // namespace

Problem read_problem_json(const std::string& text) {
  json j = json::parse(text);
  Problem p;
  p.graph = graph_from_json(j.at("graph"));
  p.dim = j.at("dim").get<int>();
  for (const auto& pin : j.value("gauge", json::array()))
    p.gauge.push_back(
        {pin.at("vertex").get<int>(), pin.at("coord").get<int>(), pin_value_from_json(pin.at("value"))});
  if (j.contains("symmetry")) {
    SymmetrySpec s;
    s.dim = p.dim;
    s.rotation_order = j["symmetry"].at("rotation_order").get<int>();
    s.mirror = j["symmetry"].value("mirror", false);
    for (const auto& o : j["symmetry"].at("orbits")) {
      SymmetrySpec::Orbit orb;
      orb.rep = o.at("rep").get<int>();
      for (const auto& v : o.at("vertices")) orb.vertices.push_back(v.get<int>());
      s.orbits.push_back(std::move(orb));
    }
    p.symmetry = std::move(s);
  }
  for (const auto& st : j.value("chain", json::array()))
    p.chain.steps.push_back({st.at("from").get<int>(), st.at("to").get<int>()});
  p.validate();
  return p;
}

std::string write_problem_json(const Problem& p) {
  json j;
  json ge = json::array();
  for (const auto& e : p.graph.edges()) ge.push_back({e.first, e.second});
  j["graph"] = {{"n", p.graph.vertex_count()}, {"edges", ge}};
  j["dim"] = p.dim;
  json pins = json::array();
  for (const auto& pin : p.gauge)
    pins.push_back({{"vertex", pin.vertex}, {"coord", pin.coord}, {"value", pin.value}});
  j["gauge"] = pins;
  if (p.symmetry) {
    json orbits = json::array();
    for (const auto& o : p.symmetry->orbits)
      orbits.push_back({{"rep", o.rep}, {"vertices", o.vertices}});
    j["symmetry"] = {{"rotation_order", p.symmetry->rotation_order},
                     {"mirror", p.symmetry->mirror},
                     {"orbits", orbits}};
  }
  if (!p.chain.steps.empty()) {
    json steps = json::array();
    for (const auto& st : p.chain.steps) steps.push_back({{"from", st.from}, {"to", st.to}});
    j["chain"] = steps;
  }
  return j.dump(2) + "\n";
}

SolverConfig read_config_json(const std::string& text) {
  json j = json::parse(text);
  SolverConfig cfg;
  cfg.restarts = j.value("restarts", cfg.restarts);
  cfg.max_iterations = j.value("max_iterations", cfg.max_iterations);
  cfg.initial_damping = j.value("initial_damping", cfg.initial_damping);
  cfg.residual_target = j.value("residual_target", cfg.residual_target);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.value("refine", std::string("decimal50")) == "float64")
    cfg.refine = SolverConfig::Refine::Float64;
  return cfg;
}

}  // namespace udg
