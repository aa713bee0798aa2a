#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/symmetry.hpp"

namespace udg {

// Pin one coordinate of a vertex; the value is kept as a decimal string so
// high-precision refinement can parse it at full working precision.
struct GaugePin {
  int vertex = 0;
  int coord = 0;
  std::string value = "0";
};

// A realization problem: find points for all vertices so that every edge has
// unit length. Vertices are placed in three stages: base vertices from pins
// and free parameters, chain children from unit half-angle steps, then orbit
// expansion under the symmetry. Residuals cover every non-chain edge as
// |p_u - p_v|^2 - 1.
struct Problem {
  Graph graph;
  int dim = 2;
  std::vector<GaugePin> gauge;
  std::optional<SymmetrySpec> symmetry;
  ChainSpec chain;

  int param_count() const;
  // Edges not produced by a chain step (the residual system).
  std::vector<Edge> residual_edges() const;
  // (vertex, coord) pairs backed by free parameters, ascending; chain
  // parameters follow them in step order.
  std::vector<std::pair<int, int>> free_coords() const;
  void validate() const;
};

// Gauge fixing that removes rigid motions for a Free problem: vertex 0 at the
// origin, vertex 1 on the positive first axis, vertex 2 in the first-second
// plane when dim = 3.
std::vector<GaugePin> default_gauge(const Graph& g, int dim);

struct SolverConfig {
  int restarts = 100;
  int max_iterations = 200;
  double initial_damping = 1e-3;
  double lm_exit_residual = 1e-8;  // hand off to refinement below this
  enum class Refine { Float64, Decimal50 };
  Refine refine = Refine::Decimal50;
  // 0 selects the default for the refinement precision: 1e-12 at Float64,
  // 1e-40 at Decimal(50).
  double residual_target = 0;
  std::uint64_t seed = 0;

  double effective_target() const {
    if (residual_target > 0) return residual_target;
    return refine == Refine::Decimal50 ? 1e-40 : 1e-12;
  }
};

struct Solution {
  bool pass = false;  // screening verdict (non-edge band, coincidences)
  std::vector<double> params;
  Embedding embedding;
  double residual_norm = 0;
  int restart_index = -1;
  VerificationReport report;
};

struct SolveOutcome {
  bool converged = false;
  std::optional<Solution> solution;
  double best_residual = std::numeric_limits<double>::infinity();
  int restarts_used = 0;
};

// Residual vector at the given parameters (one entry per non-chain edge).
std::vector<double> residuals(const Problem& p, const std::vector<double>& params);

// Analytic Jacobian, row-major (residual index major).
std::vector<double> residual_jacobian(const Problem& p, const std::vector<double>& params);

// Max entry-wise deviation between the analytic Jacobian and central finite
// differences with step 1e-6.
double check_gradient(const Problem& p, const std::vector<double>& params);

// Multi-start damped least squares, then Newton refinement at high precision.
// The first restart reaching the residual target wins; its embedding is then
// screened against the non-edge band and coincidence tolerance (a screening
// failure is still returned, with pass = false).
SolveOutcome solve(const Problem& p, const SolverConfig& cfg);

// Problem files: {"graph": "catalog:<id>"| {n, edges}, "dim": d,
// "gauge": [...], "symmetry": {...}?, "chain": [...]?, "config": {...}?}.
Problem read_problem_json(const std::string& text);
std::string write_problem_json(const Problem& p);
SolverConfig read_config_json(const std::string& text);  // the "config" object

}  // namespace udg
