#include "support.hpp"

#include <filesystem>
#include <fstream>

#include <unistd.h>

namespace hextet::testing {

const Catalog& catalog() {
  static const Catalog c = [] {
    namespace fs = std::filesystem;
    const fs::path dir = HEXTET_TEST_CACHE;
    const fs::path file = dir / "catalog.json";
    if (fs::exists(file)) {
      try {
        std::ifstream in(file);
        return catalogFromJson(nlohmann::json::parse(in));
      } catch (const std::exception&) {
        // rebuilt below
      }
    }
    Catalog built = buildCatalog();
    fs::create_directories(dir);
    const fs::path tmp = dir / ("catalog.json.tmp" + std::to_string(::getpid()));
    std::ofstream(tmp) << toJson(built).dump();
    fs::rename(tmp, file);
    return built;
  }();
  return c;
}

const CatalogEntry& entry(const std::string& id) {
  const auto* e = catalog().findId(id);
  if (!e) throw std::out_of_range("no class " + id);
  return *e;
}

}  // namespace hextet::testing
