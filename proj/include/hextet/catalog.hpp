#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hextet/decomposition_graph.hpp"
#include "hextet/enumerator.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

/// One isomorphism class of hexahedron triangulations.
///
/// Ids are "<tets>_<letters>" with letters A, B, ..., Z, AA, AB, ... assigned
/// by increasing canonical key within each tet count. The representative is
/// the canonical representative of the class.
struct CatalogEntry {
  std::string id;
  int tetCount = 0;
  Triangulation tets;
  CanonicalKey key;
  int orbitSize = 0;
  int boundaryClass = 0;
  BoundaryTriangulation boundary;
  DecompGraph graph;
};

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const CatalogEntry* find(const CanonicalKey& key) const;
  const CatalogEntry* findId(const std::string& id) const;
  /// Class of any labeled triangulation, or nullptr when unknown.
  const CatalogEntry* classify(const Triangulation& t) const;

  /// Number of classes per tet count (5..maxTets).
  std::map<int, int> countsByTets() const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<CanonicalKey, std::size_t> byKey_;
};

/// Letters for the n-th class (0-based): A..Z, AA..AZ, BA, ...
std::string classLetters(int n);

/// Deduplicates labeled triangulations into classes.
Catalog catalogFromTriangulations(const std::vector<Triangulation>& labeled);

/// Enumerates every boundary and classifies the result.
Catalog buildCatalog(const EnumerationOptions& opts = {}, int workers = 1);

nlohmann::ordered_json toJson(const CatalogEntry& e);
nlohmann::ordered_json toJson(const Catalog& c);
Catalog catalogFromJson(const nlohmann::json& j);

/// Table-1 style CSV: header "#tets,5,...,15,Sum" and a "combinatorial" row.
std::string countsCsv(const Catalog& c, const std::map<std::string, std::map<int, int>>& extraRows = {});

}  // namespace hextet
