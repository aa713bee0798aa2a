#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "udg/graph.hpp"
#include "udg/numeric.hpp"

namespace udg {

// Diagonal-sum identity of a unit 4-cycle drawn in the plane:
// p_{v0} + p_{v2} - p_{v1} - p_{v3} = 0. In any injective planar
// unit-distance embedding a closed chain of four unit steps has its opposite
// steps antiparallel (the degenerate pairings collapse adjacent vertices),
// so every 4-cycle is a parallelogram and the identity holds.
struct RhombusRelation {
  std::array<int, 4> cycle;  // canonical (v0,v1,v2,v3)
};

// One relation per canonical 4-cycle of four_cycles(g), same order.
std::vector<RhombusRelation> relations(const Graph& g);

// A rational combination of rhombus relations summing to e_i - e_j: in the
// plane the combination forces p_i = p_j, contradicting injectivity.
struct RhombusCertificate {
  std::pair<int, int> pair;                            // i < j
  std::vector<std::pair<int, Rational>> coefficients;  // (relation index, weight), nonzero
};

struct ProverResult {
  bool contradiction = false;
  // One certificate per forced pair, ascending by pair; primary is front().
  std::vector<RhombusCertificate> certificates;
  int rank = 0;
  int relation_count = 0;
};

// Exact rational row reduction over the relation matrix. Sound: a
// Contradiction always carries verifying certificates. Not complete:
// Inconclusive does not imply a planar embedding exists.
ProverResult prove(const Graph& g);

// Exact recomputation: sum of coefficient * relation equals e_i - e_j with
// i != j. Throws on relation indices out of range.
bool verify_certificate(const Graph& g, const RhombusCertificate& c);

std::string write_certificate_json(const Graph& g, const RhombusCertificate& c);
// Resolves the stored cycles back to relation indices of g.
RhombusCertificate read_certificate_json(const Graph& g, const std::string& text);

// Human-readable proof in 1-based vertex labels.
std::string describe_proof(const Graph& g, const ProverResult& r);

}  // namespace udg
