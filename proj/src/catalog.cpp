#include "hextet/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hextet {

namespace {

nlohmann::ordered_json pairsJson(const std::vector<std::pair<int, int>>& pairs) {
  auto arr = nlohmann::ordered_json::array();
  for (auto [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

}  // namespace

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) byKey_.emplace(entries_[i].key, i);
}

const CatalogEntry* Catalog::find(const CanonicalKey& key) const {
  auto it = byKey_.find(key);
  return it == byKey_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry* Catalog::findId(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

const CatalogEntry* Catalog::classify(const Triangulation& t) const { return find(canonicalForm(t)); }

std::map<int, int> Catalog::countsByTets() const {
  std::map<int, int> counts;
  for (const auto& e : entries_) ++counts[e.tetCount];
  return counts;
}

std::string classLetters(int n) {
  std::string s;
  ++n;
  while (n > 0) {
    --n;
    s.insert(s.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return s;
}

Catalog catalogFromTriangulations(const std::vector<Triangulation>& labeled) {
  std::map<CanonicalKey, int> orbitCount;
  for (const auto& t : labeled) ++orbitCount[canonicalForm(t)];

  const auto boundaryClasses = enumerateBoundaryTriangulations();
  std::vector<CatalogEntry> entries;
  std::map<int, int> perTets;
  // std::map orders keys by (size, code), so letters follow canonical order.
  for (const auto& [key, count] : orbitCount) {
    CatalogEntry e;
    e.tets = decode(key.code);
    e.tetCount = e.tets.size();
    e.key = key;
    e.id = std::to_string(e.tetCount) + "_" + classLetters(perTets[e.tetCount]++);
    e.orbitSize = orbitSize(e.tets);
    if (e.orbitSize != count)
      throw std::logic_error("class " + e.id + ": orbit size " + std::to_string(e.orbitSize) + " but " +
                             std::to_string(count) + " labeled instances");
    e.boundary = *BoundaryTriangulation::fromTriangles(BoundaryTriangulation::boundaryTrianglesOf(e.tets.tets()));
    e.boundaryClass = boundaryClasses[e.boundary.bits()].classId;
    e.graph = decompositionGraph(e.tets, e.boundary);
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

Catalog buildCatalog(const EnumerationOptions& opts, int workers) {
  return catalogFromTriangulations(enumerateAllTriangulations(opts, workers));
}

nlohmann::ordered_json toJson(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["id"] = e.id;
  j["tetCount"] = e.tetCount;
  auto tets = nlohmann::ordered_json::array();
  for (const auto& t : e.tets.labels()) tets.push_back(t);
  j["tets"] = tets;
  j["orbitSize"] = e.orbitSize;
  j["boundaryClass"] = e.boundaryClass;
  j["decompGraph"] = {{"black", pairsJson(e.graph.black)}, {"grey", pairsJson(e.graph.grey)}};
  return j;
}

nlohmann::ordered_json toJson(const Catalog& c) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : c.entries()) arr.push_back(toJson(e));
  return arr;
}

Catalog catalogFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("catalog JSON must be an array");
  std::vector<CatalogEntry> entries;
  for (const auto& item : j) {
    CatalogEntry e;
    e.id = item.at("id").get<std::string>();
    e.tetCount = item.at("tetCount").get<int>();
    e.tets = Triangulation::fromLabels(item.at("tets").get<std::vector<std::array<Label, 4>>>());
    if (e.tets.size() != e.tetCount) throw std::runtime_error("catalog entry " + e.id + ": tetCount mismatch");
    e.key = canonicalForm(e.tets);
    e.orbitSize = item.at("orbitSize").get<int>();
    e.boundaryClass = item.at("boundaryClass").get<int>();
    auto b = BoundaryTriangulation::fromTriangles(BoundaryTriangulation::boundaryTrianglesOf(e.tets.tets()));
    if (!b) throw std::runtime_error("catalog entry " + e.id + ": boundary is not a hexahedron boundary");
    e.boundary = *b;
    e.graph = decompositionGraph(e.tets, e.boundary);
    entries.push_back(std::move(e));
  }
  return Catalog(std::move(entries));
}

std::string countsCsv(const Catalog& c, const std::map<std::string, std::map<int, int>>& extraRows) {
  std::ostringstream out;
  out << "#tets";
  for (int n = 5; n <= 15; ++n) out << ',' << n;
  out << ",Sum\n";
  auto row = [&](const std::string& name, const std::map<int, int>& counts) {
    out << name;
    int sum = 0;
    for (int n = 5; n <= 15; ++n) {
      auto it = counts.find(n);
      const int v = it == counts.end() ? 0 : it->second;
      sum += v;
      out << ',' << v;
    }
    out << ',' << sum << '\n';
  };
  row("combinatorial", c.countsByTets());
  for (const auto& [name, counts] : extraRows) row(name, counts);
  return out.str();
}

}  // namespace hextet
