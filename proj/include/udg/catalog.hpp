#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udg/graph.hpp"

namespace udg {

// The named graphs shipped with the library. Vertex numbering is 0-based;
// human-facing output uses label = index + 1.
enum class CatalogId {
  Durer,
  Franklin,
  Desargues,
  Heawood,
  Tietze,
  Chvatal,
  GoldnerHarary,
  Herschel,
  Fritsch,
  Grotzsch,
  Hoffman,
  Soifer,
  Mobius6,
};

// The twelve graphs with shipped embeddings (excludes Mobius6).
const std::vector<CatalogId>& catalog_embedded_ids();
// All ids including Mobius6.
const std::vector<CatalogId>& catalog_all_ids();

std::string catalog_name(CatalogId id);
std::optional<CatalogId> catalog_id_from_string(const std::string& name);

Graph catalog_get(CatalogId id);

// Spatial dimension of the shipped embedding (2 or 3).
int catalog_embedding_dim(CatalogId id);

// Recommended edge tolerance for verifying the shipped embedding.
double catalog_edge_tol(CatalogId id);

}  // namespace udg
