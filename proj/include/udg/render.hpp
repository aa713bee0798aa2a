#pragma once

#include <string>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"

namespace udg {

struct RenderOptions {
  // 3D embeddings are projected orthographically by dropping this axis.
  int drop_axis = 2;
  double unit_px = 100.0;  // one unit of distance in pixels
  bool labels = true;      // 1-based vertex labels
};

// Deterministic SVG 1.1 document; y axis flipped to mathematical orientation.
std::string render_svg(const Graph& g, const Embedding& e, const RenderOptions& opts = {});

}  // namespace udg
