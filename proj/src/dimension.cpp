#include "udg/dimension.hpp"

#include <algorithm>
#include <stdexcept>

namespace udg {

namespace {

std::optional<int> bipartite_dimension(int m, int n) {
  if (m > n) std::swap(m, n);
  if (m == 1 && n == 1) return 1;
  if (m == 1) return 2;
  if (m == 2 && n == 2) return 2;
  if (m == 2) return 3;
  return 4;  // 3 <= m <= n
}

}  // namespace

std::optional<int> known_dimension(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Complete:
      return spec.a - 1;
    case K::CompleteBipartite:
      return bipartite_dimension(spec.a, spec.b);
    case K::CompleteTripartite: {
      int lo = std::min({spec.a, spec.b, spec.c});
      if (lo >= 3) return 6;
      return std::nullopt;  // settled elsewhere but values not tabulated here
    }
    case K::Wheel:
      return spec.a == 6 ? 2 : 3;
    case K::GeneralizedWheel:
      if (spec.a == 1) return spec.b == 6 ? 2 : 3;
      return std::nullopt;
    case K::JoinOfCycles: {
      int m = std::min(spec.a, spec.b), n = std::max(spec.a, spec.b);
      if (m == 4 && n == 4) return 4;
      if (m == 5 && n == 5) return 4;
      if (m == 6 && n == 6) return 6;
      return 5;
    }
    case K::Cycle:
    case K::Path:
    case K::Empty:
    case K::MobiusLadder:
      return std::nullopt;
  }
  return std::nullopt;
}

DimensionBounds bounds(const Graph& g, const BoundsEvidence& ev) {
  DimensionBounds b;
  bool has_edges = g.edge_count() > 0;

  b.lo = 0;
  b.lo_reason = "structural: no edges";
  if (has_edges) {
    b.lo = 1;
    b.lo_reason = "structural: has an edge";
  }
  if (g.max_degree() >= 3 || g.has_cycle()) {
    b.lo = 2;
    b.lo_reason = "structural: degree >= 3 or contains a cycle (no line embedding)";
  }
  if (ev.certificate != nullptr) {
    if (!verify_certificate(g, *ev.certificate))
      throw std::invalid_argument("bounds: certificate does not verify");
    b.lo = std::max(b.lo, 3);
    b.lo_reason = "certificate: forced coincidence rules out the plane";
  }

  bool have_hi = false;
  auto take_hi = [&](int v, const std::string& reason) {
    if (!have_hi || v < b.hi) {
      b.hi = v;
      b.hi_reason = reason;
    }
    have_hi = true;
  };
  if (has_edges) take_hi(2 * g.max_degree(), "MaeharaRodl: 2 * max degree");
  if (ev.embedding != nullptr) {
    if (!verify(g, *ev.embedding, ev.tolerances).pass)
      throw std::invalid_argument("bounds: embedding does not verify");
    take_hi(ev.embedding->dim(), "embedding: verified unit-distance embedding");
  }
  if (ev.family) {
    if (make_family(*ev.family) == g) {
      if (auto d = known_dimension(*ev.family)) take_hi(*d, "formula: known family dimension");
    } else {
      throw std::invalid_argument("bounds: family spec does not build this graph");
    }
  }
  if (!have_hi) take_hi(g.vertex_count() >= 2 ? 1 : 0, "structural: edgeless line embedding");

  if (b.lo > b.hi) throw std::logic_error("bounds: inconsistent evidence (lo > hi)");
  return b;
}

ConjectureReport conjecture_report(const Graph& g, const DimensionBounds& b, int chi_limit) {
  ConjectureReport r;
  r.chi = chromatic_number(g, chi_limit);
  r.two_chi = 2 * r.chi;
  r.bounds = b;
  r.consistent = b.lo <= r.two_chi;
  r.improves_on_degree_bound = g.edge_count() > 0 && r.two_chi < 2 * g.max_degree();
  return r;
}

}  // namespace udg
