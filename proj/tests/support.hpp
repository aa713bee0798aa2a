#pragma once

// Shared test oracles.

#include <cstdint>
#include <vector>

#include "udg/graph.hpp"

namespace udg::testing {

// Exhaustive search for an injective unit-distance embedding into the line.
// Within a connected component every position differs from the root by an
// integer, so backtracking over +-1 steps along a DFS tree is exhaustive;
// components can always be translated apart, so they are independent.
inline bool line_embeddable(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) verts.push_back(v);
    if (verts.size() == 1) continue;
    // DFS order within the component
    std::vector<int> order;
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
    }
    std::vector<int> pos(n, 0);
    // place order[i] at parent position +-1, checking all pairs inside the prefix
    std::vector<int> choice(order.size(), 0);
    size_t i = 1;
    bool ok = false;
    while (true) {
      if (i == order.size()) {
        ok = true;
        break;
      }
      if (choice[i] == 2) {
        choice[i] = 0;
        if (i == 1) break;
        --i;
        ++choice[i];
        continue;
      }
      int v = order[i];
      pos[v] = pos[parent[v]] + (choice[i] == 0 ? 1 : -1);
      bool valid = true;
      for (size_t j = 0; j < i && valid; ++j) {
        int w = order[j];
        int d = pos[v] - pos[w];
        if (d < 0) d = -d;
        if (d == 0) valid = false;
        else if (g.has_edge(v, w) ? d != 1 : d == 1) valid = false;
      }
      if (valid) {
        ++i;
      } else {
        ++choice[i];
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace udg::testing
