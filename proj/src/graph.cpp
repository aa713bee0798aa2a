#include "udg/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace udg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u < 0 || v >= n) throw std::invalid_argument("graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds(n_);
  for (int v = 0; v < n_; ++v) ds[v] = degree(v);
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

bool Graph::has_cycle() const {
  std::vector<int> parent(n_, -2);
  for (int s = 0; s < n_; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v]) {
        if (parent[v] == w) continue;
        if (parent[w] != -2) return true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  return false;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

bool Graph::is_odd_cycle() const {
  if (n_ < 3 || n_ % 2 == 0 || edge_count() != n_) return false;
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 2) return false;
  return connected();
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: bad permutation size");
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.push_back({perm[u], perm[v]});
  return Graph(n_, std::move(es));
}

namespace {

std::vector<Edge> cycle_edges(int n, int offset = 0) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({offset + i, offset + (i + 1) % n});
  return es;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph make_family(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Complete: {
      require(spec.a >= 1, "Complete(n): n >= 1");
      std::vector<Edge> es;
      for (int i = 0; i < spec.a; ++i)
        for (int j = i + 1; j < spec.a; ++j) es.push_back({i, j});
      return Graph(spec.a, std::move(es));
    }
    case K::CompleteBipartite: {
      require(spec.a >= 1 && spec.b >= 1, "CompleteBipartite(m,n): m,n >= 1");
      return join(make_family(FamilySpec::empty(spec.a)), make_family(FamilySpec::empty(spec.b)));
    }
    case K::CompleteTripartite: {
      require(spec.a >= 1 && spec.b >= 1 && spec.c >= 1, "CompleteTripartite(m,n,p): m,n,p >= 1");
      return join(join(make_family(FamilySpec::empty(spec.a)), make_family(FamilySpec::empty(spec.b))),
                  make_family(FamilySpec::empty(spec.c)));
    }
    case K::Cycle:
      require(spec.a >= 3, "Cycle(n): n >= 3");
      return Graph(spec.a, cycle_edges(spec.a));
    case K::Path: {
      require(spec.a >= 1, "Path(n): n >= 1");
      std::vector<Edge> es;
      for (int i = 0; i + 1 < spec.a; ++i) es.push_back({i, i + 1});
      return Graph(spec.a, std::move(es));
    }
    case K::Empty:
      require(spec.a >= 0, "Empty(n): n >= 0");
      return Graph(spec.a, {});
    case K::Wheel:
      require(spec.a >= 3, "Wheel(n): n >= 3");
      return join(make_family(FamilySpec::cycle(spec.a)), make_family(FamilySpec::empty(1)));
    case K::GeneralizedWheel:
      require(spec.a >= 1 && spec.b >= 3, "GeneralizedWheel(m,n): m >= 1, n >= 3");
      return join(make_family(FamilySpec::cycle(spec.b)), make_family(FamilySpec::empty(spec.a)));
    case K::MobiusLadder: {
      require(spec.a >= 6 && spec.a % 2 == 0, "MobiusLadder(n): n even, n >= 6");
      auto es = cycle_edges(spec.a);
      for (int i = 0; i < spec.a / 2; ++i) es.push_back({i, i + spec.a / 2});
      return Graph(spec.a, std::move(es));
    }
    case K::JoinOfCycles:
      require(spec.a >= 3 && spec.b >= 3, "JoinOfCycles(m,n): m,n >= 3");
      return join(make_family(FamilySpec::cycle(spec.a)), make_family(FamilySpec::cycle(spec.b)));
  }
  throw std::invalid_argument("make_family: unknown kind");
}

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> es = g1.edges();
  for (auto [u, v] : g2.edges()) es.push_back({u + n1, v + n1});
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) es.push_back({u, n1 + v});
  return Graph(n1 + n2, std::move(es));
}

std::vector<std::array<int, 4>> four_cycles(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  int n = g.vertex_count();
  for (int v0 = 0; v0 < n; ++v0) {
    const auto& nb = g.neighbors(v0);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] <= v0) continue;
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int v1 = nb[i], v3 = nb[j];
        // common neighbors of v1 and v3 other than v0 close the cycle
        for (int v2 : g.neighbors(v1)) {
          if (v2 <= v0 || v2 == v3) continue;
          if (g.has_edge(v2, v3)) out.push_back({v0, v1, v2, v3});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Backtracking k-colorability on a fixed vertex order, new colors introduced in order.
bool colorable(const Graph& g, int k, const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  struct Frame {
    int next_color;
  };
  // iterative backtracking
  std::vector<int> choice(n, -1);
  int i = 0;
  int used = 0;  // number of colors used so far among order[0..i-1]
  std::vector<int> used_stack(n + 1, 0);
  used_stack[0] = 0;
  while (true) {
    if (i == n) return true;
    int v = order[i];
    int start = choice[i] + 1;
    int cap = std::min(k - 1, used_stack[i]);  // may open one new color
    int c = -1;
    for (int t = start; t <= cap; ++t) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == t) {
          ok = false;
          break;
        }
      if (ok) {
        c = t;
        break;
      }
    }
    if (c == -1) {
      choice[i] = -1;
      color[v] = -1;
      if (i == 0) return false;
      --i;
      color[order[i]] = -1;  // will retry its next color
      continue;
    }
    choice[i] = c;
    color[v] = c;
    used_stack[i + 1] = std::max(used_stack[i], c + 1);
    ++i;
    choice[i] = -1;
  }
}

int greedy_coloring(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(g.vertex_count(), -1);
  int maxc = 0;
  for (int v : order) {
    std::set<int> used;
    for (int w : g.neighbors(v))
      if (color[w] >= 0) used.insert(color[w]);
    int c = 0;
    while (used.count(c)) ++c;
    color[v] = c;
    maxc = std::max(maxc, c + 1);
  }
  return maxc;
}

int greedy_clique(const Graph& g, const std::vector<int>& order) {
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int w : clique)
      if (!g.has_edge(v, w)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace

int chromatic_number(const Graph& g, int limit) {
  int n = g.vertex_count();
  if (n > limit) throw std::invalid_argument("chromatic_number: size limit exceeded");
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  int ub = greedy_coloring(g, order);
  int lb = std::max(2, greedy_clique(g, order));
  for (int k = lb; k < ub; ++k)
    if (colorable(g, k, order)) return k;
  return ub;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  std::vector<Edge> es(m);
  for (auto& [u, v] : es)
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
  return Graph(n, std::move(es));
}

Graph read_edge_list_string(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

}  // namespace udg
