#include "udg/catalog.hpp"

#include <map>
#include <stdexcept>

namespace udg {

namespace {

struct Entry {
  const char* name;
  int n;
  int dim;
  std::vector<Edge> edges;  // 0-based
};

const std::map<CatalogId, Entry>& table() {
  static const std::map<CatalogId, Entry> t = {
      {CatalogId::Durer,
       {"durer", 12, 2,
        {{0, 1}, {0, 2}, {0, 6}, {1, 2}, {1, 8}, {2, 10}, {3, 4}, {3, 5}, {3, 7}, {4, 5}, {4, 9},
         {5, 11}, {6, 7}, {6, 11}, {7, 8}, {8, 9}, {9, 10}, {10, 11}}}},
      {CatalogId::Franklin,
       {"franklin", 12, 2,
        {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {1, 8}, {2, 3}, {2, 11}, {3, 6}, {4, 5}, {4, 6}, {4, 9},
         {5, 7}, {6, 7}, {7, 10}, {8, 9}, {8, 10}, {9, 11}, {10, 11}}}},
      {CatalogId::Desargues,
       {"desargues", 20, 2,
        {{0, 1},   {0, 6},   {0, 14},  {1, 3},   {1, 19},  {2, 3},   {2, 8},   {2, 16},
         {3, 5},   {4, 5},   {4, 10},  {4, 18},  {5, 7},   {6, 7},   {6, 12},  {7, 9},
         {8, 9},   {8, 14},  {9, 11},  {10, 11}, {10, 16}, {11, 13}, {12, 13}, {12, 18},
         {13, 15}, {14, 15}, {15, 17}, {16, 17}, {17, 19}, {18, 19}}}},
      {CatalogId::Heawood,
       {"heawood", 14, 2,
        {{0, 1},   {0, 5},   {0, 13},  {1, 2},  {1, 10},  {2, 3},   {2, 7},   {3, 4},
         {3, 12},  {4, 5},   {4, 9},   {5, 6},  {6, 7},   {6, 11},  {7, 8},   {8, 9},
         {8, 13},  {9, 10},  {10, 11}, {11, 12}, {12, 13}}}},
      {CatalogId::Tietze,
       {"tietze", 12, 2,
        {{0, 1},  {0, 4},  {0, 8},  {1, 2},  {1, 3},  {1, 10}, {1, 11}, {2, 5},
         {2, 7},  {2, 11}, {3, 5},  {3, 6},  {3, 10}, {4, 5},  {4, 8},  {5, 6},
         {5, 7},  {6, 9},  {6, 11}, {7, 9},  {7, 10}, {8, 9},  {9, 10}, {9, 11}}}},
      {CatalogId::Chvatal,
       {"chvatal", 12, 3,
        {{0, 1},  {0, 2},  {0, 3},  {0, 9},  {1, 7},  {1, 8},  {1, 11}, {2, 4},
         {2, 7},  {2, 8},  {3, 4},  {3, 5},  {3, 6},  {4, 10}, {4, 11}, {5, 7},
         {5, 10}, {5, 11}, {6, 7},  {6, 8},  {6, 9},  {8, 10}, {9, 10}, {9, 11}}}},
      {CatalogId::GoldnerHarary,
       {"goldner_harary", 11, 3,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {0, 8}, {0, 9}, {1, 2},
         {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7},
         {4, 9}, {4, 10}, {5, 6}, {5, 8}, {5, 9}, {5, 10}, {7, 9}, {8, 9}, {9, 10}}}},
      {CatalogId::Herschel,
       {"herschel", 11, 3,
        {{0, 1}, {0, 3}, {0, 6}, {0, 8}, {1, 2}, {1, 9}, {2, 3}, {2, 5}, {2, 10},
         {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}, {7, 8}, {7, 10}, {8, 9}, {9, 10}}}},
      {CatalogId::Fritsch,
       {"fritsch", 9, 3,
        {{0, 1}, {0, 2}, {0, 6}, {0, 7}, {0, 8}, {1, 2}, {1, 3}, {1, 5}, {1, 7},
         {2, 3}, {2, 4}, {2, 8}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 8}, {5, 6},
         {5, 7}, {6, 7}, {6, 8}}}},
      {CatalogId::Grotzsch,
       {"grotzsch", 11, 3,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 6}, {1, 10}, {2, 6}, {2, 7},
         {3, 7}, {3, 8}, {4, 8}, {4, 9}, {5, 9}, {5, 10}, {6, 8}, {6, 9}, {7, 9},
         {7, 10}, {8, 10}}}},
      {CatalogId::Hoffman,
       {"hoffman", 16, 3,
        {{0, 1},   {0, 7},   {0, 8},   {0, 11},  {1, 2},   {1, 12},  {1, 14},  {2, 3},
         {2, 8},   {2, 9},   {3, 4},   {3, 13},  {3, 15},  {4, 5},   {4, 9},   {4, 10},
         {5, 6},   {5, 13},  {5, 14},  {6, 7},   {6, 10},  {6, 11},  {7, 12},  {7, 15},
         {8, 13},  {8, 14},  {9, 12},  {9, 15},  {10, 12}, {10, 14}, {11, 13}, {11, 15}}}},
      {CatalogId::Soifer,
       {"soifer", 9, 3,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4},
         {2, 5}, {2, 7}, {3, 4}, {3, 6}, {3, 8}, {4, 7}, {5, 6}, {5, 7}, {5, 8},
         {6, 8}, {7, 8}}}},
      {CatalogId::Mobius6,
       {"mobius6", 6, 0,
        {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}}},
  };
  return t;
}

}  // namespace

const std::vector<CatalogId>& catalog_embedded_ids() {
  static const std::vector<CatalogId> ids = {
      CatalogId::Durer,   CatalogId::Franklin, CatalogId::Desargues,     CatalogId::Heawood,
      CatalogId::Tietze,  CatalogId::Chvatal,  CatalogId::GoldnerHarary, CatalogId::Herschel,
      CatalogId::Fritsch, CatalogId::Grotzsch, CatalogId::Hoffman,       CatalogId::Soifer,
  };
  return ids;
}

const std::vector<CatalogId>& catalog_all_ids() {
  static const std::vector<CatalogId> ids = [] {
    auto v = catalog_embedded_ids();
    v.push_back(CatalogId::Mobius6);
    return v;
  }();
  return ids;
}

std::string catalog_name(CatalogId id) {
  return table().at(id).name;
}

std::optional<CatalogId> catalog_id_from_string(const std::string& name) {
  for (const auto& [id, e] : table())
    if (name == e.name) return id;
  return std::nullopt;
}

Graph catalog_get(CatalogId id) {
  const auto& e = table().at(id);
  return Graph(e.n, e.edges);
}

int catalog_embedding_dim(CatalogId id) {
  int d = table().at(id).dim;
  if (d == 0) throw std::invalid_argument("no shipped embedding for " + catalog_name(id));
  return d;
}

double catalog_edge_tol(CatalogId id) {
  // Heawood coordinates are transcribed at 10 digits; everything else is closed form.
  return id == CatalogId::Heawood ? 1e-7 : 1e-9;
}

}  // namespace udg
