#pragma once

#include <string>
#include <variant>
#include <vector>

#include "udg/graph.hpp"
#include "udg/numeric.hpp"

namespace udg {

enum class Precision { Float64, Decimal, Rational };

// Flattened n x dim coordinate block.
template <class T>
struct Points {
  int dim = 0;
  std::vector<T> coords;  // size n*dim

  int size() const { return dim == 0 ? 0 : static_cast<int>(coords.size()) / dim; }
  const T* row(int v) const { return coords.data() + static_cast<size_t>(v) * dim; }
  T* row(int v) { return coords.data() + static_cast<size_t>(v) * dim; }
};

struct Embedding {
  Precision precision = Precision::Float64;
  int digits = 0;  // meaningful for Decimal
  std::variant<Points<double>, Points<Dec50>, Points<Dec100>, Points<Rational>> data;

  int dim() const;
  int size() const;
  Points<double> as_float64() const;

  static Embedding from_float64(Points<double> pts);
  static Embedding from_decimal50(Points<Dec50> pts, int digits = 50);
  static Embedding from_decimal100(Points<Dec100> pts, int digits = 100);
  static Embedding from_rational(Points<Rational> pts);
};

struct ToleranceConfig {
  double edge_tol = 1e-9;        // max allowed |dist - 1| on edges
  double nonedge_band = 1e-6;    // min required |dist - 1| on non-edges
  double coincidence_tol = 1e-6; // min allowed pairwise distance

  void validate() const;
};

struct VerificationReport {
  bool pass = false;
  std::vector<std::pair<Edge, double>> edge_violations;
  std::vector<std::pair<std::pair<int, int>, double>> nonedge_violations;
  std::vector<std::pair<std::pair<int, int>, double>> coincidences;
  double max_edge_error = 0.0;
};

// Strict unit-distance check at the embedding's precision: edges within
// edge_tol of 1, non-edges at least nonedge_band away from 1, all pairs at
// least coincidence_tol apart.
VerificationReport verify(const Graph& g, const Embedding& e, const ToleranceConfig& tol = {});

struct ExactReport {
  bool pass = false;
  std::vector<Edge> edge_failures;                   // squared distance != 1
  std::vector<std::pair<int, int>> nonedge_failures; // squared distance == 1
  std::vector<std::pair<int, int>> coincidences;     // equal points
};

// Exact check in rational arithmetic via squared distances. Requires Rational precision.
ExactReport verify_exact(const Graph& g, const Embedding& e);

// JSON embedding file: {"dim": d, "precision": "float64"|"decimal:<digits>"|"rational",
// "coords": [[...], ...]}. Rational and decimal coordinates are serialized as strings.
std::string write_embedding_json(const Embedding& e);
Embedding read_embedding_json(const std::string& text);

}  // namespace udg
