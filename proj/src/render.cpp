#include "udg/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace udg {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x + 0.0);  // normalize -0
  return buf;
}

}  // namespace

std::string render_svg(const Graph& g, const Embedding& e, const RenderOptions& opts) {
  int dim = e.dim();
  if (dim != 2 && dim != 3) throw std::invalid_argument("render: dim must be 2 or 3");
  if (dim == 3 && (opts.drop_axis < 0 || opts.drop_axis > 2))
    throw std::invalid_argument("render: bad projection axis");
  if (e.size() != g.vertex_count()) throw std::invalid_argument("render: size mismatch");

  Points<double> pts = e.as_float64();
  int ax = dim == 2 ? 0 : (opts.drop_axis == 0 ? 1 : 0);
  int ay = dim == 2 ? 1 : (opts.drop_axis == 2 ? 1 : 2);

  int n = g.vertex_count();
  std::vector<std::pair<double, double>> xy(n);
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (int v = 0; v < n; ++v) {
    double x = pts.row(v)[ax] * opts.unit_px;
    double y = -pts.row(v)[ay] * opts.unit_px;  // flip y
    xy[v] = {x, y};
    if (v == 0) {
      minx = maxx = x;
      miny = maxy = y;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  double margin = 30;
  double w = maxx - minx + 2 * margin, h = maxy - miny + 2 * margin;
  auto X = [&](int v) { return xy[v].first - minx + margin; };
  auto Y = [&](int v) { return xy[v].second - miny + margin; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
     << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
  for (auto [u, v] : g.edges())
    os << "  <line x1=\"" << fmt(X(u)) << "\" y1=\"" << fmt(Y(u)) << "\" x2=\"" << fmt(X(v))
       << "\" y2=\"" << fmt(Y(v)) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (int v = 0; v < n; ++v) {
    os << "  <circle cx=\"" << fmt(X(v)) << "\" cy=\"" << fmt(Y(v))
       << "\" r=\"9\" fill=\"gold\" stroke=\"black\"/>\n";
    if (opts.labels)
      os << "  <text x=\"" << fmt(X(v)) << "\" y=\"" << fmt(Y(v))
         << "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"central\">" << v + 1
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace udg
