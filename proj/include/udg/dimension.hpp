#pragma once

#include <optional>
#include <string>

#include "udg/embedding.hpp"
#include "udg/graph.hpp"
#include "udg/prover.hpp"

namespace udg {

struct DimensionBounds {
  int lo = 0;
  int hi = 0;
  std::string lo_reason;  // formula | certificate | embedding | MaeharaRodl | structural
  std::string hi_reason;
};

// Exact dimension for the families covered by known results; nullopt otherwise.
// Covered: K_n, K_{m,n}, K_{m,n,p} with min >= 3, W_{1,n}, C_m + C_n.
std::optional<int> known_dimension(const FamilySpec& spec);

struct BoundsEvidence {
  const Embedding* embedding = nullptr;          // must pass verify
  const RhombusCertificate* certificate = nullptr;  // must pass verify_certificate
  std::optional<FamilySpec> family;              // formula match by construction
  ToleranceConfig tolerances{};                  // used to validate the embedding
};

// lo: structural rules (edge -> 1, max degree >= 3 or a cycle -> 2, rhombus
// certificate -> 3). hi: min of 2*maxdeg, a verified embedding's dimension,
// and a family formula. Throws std::logic_error if the interval inverts.
DimensionBounds bounds(const Graph& g, const BoundsEvidence& evidence = {});

struct ConjectureReport {
  int chi = 0;
  int two_chi = 0;
  DimensionBounds bounds;
  bool consistent = false;              // lo <= 2*chi
  bool improves_on_degree_bound = false;  // 2*chi < 2*maxdeg
};

ConjectureReport conjecture_report(const Graph& g, const DimensionBounds& b, int chi_limit = 24);

}  // namespace udg
