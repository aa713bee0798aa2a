#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace udg {

using Edge = std::pair<int, int>;  // u < v

// Simple undirected graph. Vertices are 0..n-1; the edge list is kept sorted
// and duplicate-free so iteration and serialization are deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // sorted descending
  bool has_cycle() const;
  bool connected() const;
  bool is_complete() const;
  bool is_odd_cycle() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  // Applies a vertex permutation: vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct FamilySpec {
  enum class Kind {
    Complete,
    CompleteBipartite,
    CompleteTripartite,
    Cycle,
    Path,
    Empty,
    Wheel,             // W_{1,n}: cycle 0..n-1, hub last
    GeneralizedWheel,  // W_{m,n}: cycle 0..n-1, m hubs last
    MobiusLadder,      // even n >= 6: rim 0..n-1 plus chords i <-> i+n/2
    JoinOfCycles,      // C_m + C_n
  };
  Kind kind;
  int a = 0, b = 0, c = 0;

  static FamilySpec complete(int n) { return {Kind::Complete, n}; }
  static FamilySpec complete_bipartite(int m, int n) { return {Kind::CompleteBipartite, m, n}; }
  static FamilySpec complete_tripartite(int m, int n, int p) { return {Kind::CompleteTripartite, m, n, p}; }
  static FamilySpec cycle(int n) { return {Kind::Cycle, n}; }
  static FamilySpec path(int n) { return {Kind::Path, n}; }
  static FamilySpec empty(int n) { return {Kind::Empty, n}; }
  static FamilySpec wheel(int n) { return {Kind::Wheel, n}; }
  static FamilySpec generalized_wheel(int m, int n) { return {Kind::GeneralizedWheel, m, n}; }
  static FamilySpec mobius_ladder(int n) { return {Kind::MobiusLadder, n}; }
  static FamilySpec join_of_cycles(int m, int n) { return {Kind::JoinOfCycles, m, n}; }
};

Graph make_family(const FamilySpec& spec);

// Disjoint union plus all cross edges; g2's vertices are shifted by g1.vertex_count().
Graph join(const Graph& g1, const Graph& g2);

// Every cyclically-distinct 4-cycle (v0,v1,v2,v3) with all four cycle edges present,
// once each in canonical form: v0 smallest, v1 the smaller cycle-neighbor of v0.
// Output sorted lexicographically.
std::vector<std::array<int, 4>> four_cycles(const Graph& g);

// Exact chromatic number by backtracking (greedy upper bound, clique lower bound).
// Throws if g.vertex_count() > limit.
int chromatic_number(const Graph& g, int limit = 24);

// Edge-list text format: line 1 "n m", then m lines "u v" (0-based, u < v, sorted).
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);

}  // namespace udg
