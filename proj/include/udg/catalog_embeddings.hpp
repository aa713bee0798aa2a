#pragma once

#include "udg/catalog.hpp"
#include "udg/embedding.hpp"

namespace udg {

// The shipped embedding for a catalog graph at the requested precision.
// Rational precision is available for herschel only; Decimal supports up to
// 100 digits. Every shipped embedding passes verify against catalog_get(id)
// at default_tolerances(id).
Embedding paper_embedding(CatalogId id, Precision precision = Precision::Float64, int digits = 50);

ToleranceConfig default_tolerances(CatalogId id);

}  // namespace udg
