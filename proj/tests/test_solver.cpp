#include <doctest.h>

#include <cmath>
#include <random>

#include "udg/catalog.hpp"
#include "udg/catalog_embeddings.hpp"
#include "udg/solver.hpp"

using namespace udg;

namespace {

Problem durer_problem() {
  Problem p;
  p.graph = catalog_get(CatalogId::Durer);
  p.dim = 2;
  SymmetrySpec s;
  s.dim = 2;
  s.rotation_order = 6;
  s.orbits = {{0, {0, 3, 1, 4, 2, 5}}, {6, {6, 7, 8, 9, 10, 11}}};
  p.symmetry = s;
  p.gauge = {{0, 0, "0.57735026918962576450914878050195745564760175127013"}, {0, 1, "0"}};
  return p;
}

}  // namespace

TEST_CASE("residuals of K2 on the line") {
  Problem p;
  p.graph = Graph(2, {{0, 1}});
  p.dim = 1;
  p.gauge = {{0, 0, "0"}};
  CHECK(p.param_count() == 1);
  auto r = residuals(p, {1.0});
  REQUIRE(r.size() == 1);
  CHECK(r[0] == 0.0);
  auto r2 = residuals(p, {2.0});
  CHECK(r2[0] == doctest::Approx(3.0));
}

TEST_CASE("durer symmetric residuals at and off the solution") {
  Problem p = durer_problem();
  CHECK(p.param_count() == 2);
  double s3 = std::sqrt(3.0), s33 = std::sqrt(33.0);
  auto r = residuals(p, {s3 / 6, s33 / 6});
  for (double x : r) CHECK(std::abs(x) < 1e-14);

  auto redges = p.residual_edges();
  auto r2 = residuals(p, {0.0, 1.0});
  bool found = false;
  for (size_t e = 0; e < redges.size(); ++e)
    if (redges[e] == Edge{0, 6}) {
      found = true;
      CHECK(std::abs(r2[e]) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    }
  CHECK(found);
}

TEST_CASE("residual parameter count is checked") {
  Problem p = durer_problem();
  CHECK_THROWS_AS(residuals(p, {1.0}), std::invalid_argument);
}

TEST_CASE("gauge translation invariance without pins") {
  Problem p;
  p.graph = make_family(FamilySpec::cycle(4));
  p.dim = 2;  // fully free, no gauge
  REQUIRE(p.param_count() == 8);
  std::vector<double> x = {0.1, -0.3, 1.05, -0.2, 1.2, 0.9, 0.05, 0.7};
  auto r1 = residuals(p, x);
  for (size_t i = 0; i < x.size(); ++i) x[i] += (i % 2 == 0 ? 0.37 : -1.4);
  auto r2 = residuals(p, x);
  for (size_t e = 0; e < r1.size(); ++e) CHECK(r1[e] == doctest::Approx(r2[e]).epsilon(1e-12));
}

TEST_CASE("check_gradient on assorted problems") {
  std::mt19937_64 rng(2024);
  auto uniform = [&](double a, double b) { return a + (b - a) * ((rng() >> 11) * 0x1.0p-53); };

  // free
  Problem free_p;
  free_p.graph = catalog_get(CatalogId::Mobius6);
  free_p.dim = 2;
  free_p.gauge = default_gauge(free_p.graph, 2);
  for (int t = 0; t < 4; ++t) {
    std::vector<double> x;
    for (int i = 0; i < free_p.param_count(); ++i) x.push_back(uniform(-2, 2));
    CHECK(check_gradient(free_p, x) < 1e-6);
  }

  // symmetric (chain rule through the rotation)
  Problem sym = durer_problem();
  for (int t = 0; t < 4; ++t) CHECK(check_gradient(sym, {uniform(-2, 2), uniform(-2, 2)}) < 1e-6);

  // chain in 2D and 3D
  Problem chain2;
  chain2.graph = make_family(FamilySpec::cycle(4));
  chain2.dim = 2;
  chain2.gauge = {{0, 0, "0"}, {0, 1, "0"}};
  chain2.chain.steps = {{0, 1}, {1, 2}};
  for (int t = 0; t < 4; ++t) {
    std::vector<double> x;
    for (int i = 0; i < chain2.param_count(); ++i) x.push_back(uniform(-4, 4));
    CHECK(check_gradient(chain2, x) < 1e-6);
  }

  Problem chain3;
  chain3.graph = make_family(FamilySpec::complete(4));
  chain3.dim = 3;
  chain3.gauge = {{0, 0, "0"}, {0, 1, "0"}, {0, 2, "0"}};
  chain3.chain.steps = {{0, 1}};
  for (int t = 0; t < 4; ++t) {
    std::vector<double> x;
    for (int i = 0; i < chain3.param_count(); ++i) x.push_back(uniform(-3, 3));
    CHECK(check_gradient(chain3, x) < 1e-6);
  }

  // exact solution point: residual zero, jacobian nonzero, still smooth
  Problem k2;
  k2.graph = Graph(2, {{0, 1}});
  k2.dim = 2;
  k2.gauge = {{0, 0, "0"}, {0, 1, "0"}, {1, 1, "0"}};
  CHECK(check_gradient(k2, {1.0}) < 1e-6);
  CHECK(residuals(k2, {1.0})[0] == 0.0);
  CHECK(residual_jacobian(k2, {1.0})[0] == doctest::Approx(2.0));
}

TEST_CASE("solve durer (6-fold reduction, seed 42)") {
  Problem p = durer_problem();
  SolverConfig cfg;
  cfg.restarts = 100;
  cfg.seed = 42;
  SolveOutcome out = solve(p, cfg);
  REQUIRE(out.converged);
  const Solution& s = *out.solution;
  CHECK(s.residual_norm < 1e-12);
  CHECK(s.pass);
  double x = s.params[0], y = s.params[1];
  double tx = std::sqrt(3.0) / 6, ty = std::sqrt(33.0) / 6;
  double err = std::min(std::hypot(x - tx, y - ty), std::hypot(x - tx, y + ty));
  CHECK(err < 1e-9);

  // stored residual matches a recomputation from the embedding coordinates
  const auto& pts = std::get<Points<Dec50>>(s.embedding.data);
  Dec50 acc = 0;
  for (auto [u, v] : p.residual_edges()) {
    Dec50 d2 = 0;
    for (int k = 0; k < pts.dim; ++k) {
      Dec50 d = pts.row(u)[k] - pts.row(v)[k];
      d2 += d * d;
    }
    acc += (d2 - 1) * (d2 - 1);
  }
  double recomputed = to_double(Dec50(sqrt(acc)));
  CHECK(std::abs(recomputed - s.residual_norm) <= 1e-14 * std::max(1.0, s.residual_norm));
}

TEST_CASE("solve determinism") {
  Problem p = durer_problem();
  SolverConfig cfg;
  cfg.restarts = 20;
  cfg.seed = 7;
  SolveOutcome a = solve(p, cfg);
  SolveOutcome b = solve(p, cfg);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK(a.solution->params == b.solution->params);  // bit-for-bit
  CHECK(a.solution->restart_index == b.solution->restart_index);
}

TEST_CASE("solve cycle4 free") {
  Problem p;
  p.graph = make_family(FamilySpec::cycle(4));
  p.dim = 2;
  p.gauge = {{0, 0, "0"}, {0, 1, "0"}, {1, 0, "1"}, {1, 1, "0"}};
  // the solution manifold is a one-parameter family of rhombi, including
  // degenerate folds; every converged solution has all four edges unit
  for (std::uint64_t seed : {3, 4, 5, 6}) {
    SolverConfig cfg;
    cfg.restarts = 50;
    cfg.seed = seed;
    SolveOutcome out = solve(p, cfg);
    REQUIRE(out.converged);
    CHECK(out.solution->residual_norm < 1e-40);
    CHECK(out.solution->report.edge_violations.empty());
  }
  SolverConfig cfg;
  cfg.restarts = 50;
  cfg.seed = 4;  // lands on a proper (injective) rhombus
  SolveOutcome out = solve(p, cfg);
  REQUIRE(out.converged);
  CHECK(out.solution->pass);
  CHECK(verify(p.graph, out.solution->embedding).pass);
}

TEST_CASE("solve mobius6 in the plane never passes screening") {
  Problem p;
  p.graph = catalog_get(CatalogId::Mobius6);
  p.dim = 2;
  p.gauge = default_gauge(p.graph, 2);
  SolverConfig cfg;
  cfg.restarts = 200;
  cfg.seed = 1;
  SolveOutcome out = solve(p, cfg);
  if (out.converged) {
    CHECK(!out.solution->pass);
    CHECK((!out.solution->report.coincidences.empty() ||
           !out.solution->report.nonedge_violations.empty()));
  }
}

TEST_CASE("problem json round trip") {
  Problem p = durer_problem();
  Problem q = read_problem_json(write_problem_json(p));
  CHECK(q.graph == p.graph);
  CHECK(q.dim == p.dim);
  CHECK(q.param_count() == p.param_count());
  REQUIRE(q.symmetry.has_value());
  CHECK(q.symmetry->rotation_order == 6);
  CHECK(q.gauge.size() == 2);

  Problem c = read_problem_json(R"({"graph": "catalog:mobius6", "dim": 2,
      "gauge": [{"vertex": 0, "coord": 0, "value": 0}]})");
  CHECK(c.graph.vertex_count() == 6);
  CHECK_THROWS_AS(read_problem_json(R"({"graph": "catalog:nope", "dim": 2})"),
                  std::invalid_argument);
}

TEST_CASE("problem validation") {
  Problem p = durer_problem();
  p.gauge.push_back({1, 0, "0"});  // not a representative
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  Problem q;
  q.graph = make_family(FamilySpec::cycle(4));
  q.dim = 2;
  q.chain.steps = {{0, 1}};
  q.gauge = {{1, 0, "0"}};  // pin on a chain child
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
}
