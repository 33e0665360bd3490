#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hextet/catalog.hpp"
#include "hextet/enumerator.hpp"
#include "hextet/final_polynomial.hpp"
#include "hextet/meshscan.hpp"
#include "hextet/realizer.hpp"
#include "hextet/sat_encoding.hpp"
#include "hextet/sphere_data.hpp"

namespace fs = std::filesystem;
using namespace hextet;

namespace {

struct Config {
  std::string out = "hextet-out";
  std::string catalogPath;
  std::string sphereData;
  std::string dimacsDir;
  std::uint64_t seed = 1;
  int workers = 1;
  int restarts = 64;
  int iters = 10000;
  int maxTets = 15;
  std::size_t maxChirotopes = 5000;
  bool convex = false;
  bool hullFirst = false;
  bool validOnly = false;
  std::vector<std::string> meshes;
  std::string artifact;
};

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes <stem>-<hash>.<ext> under the output directory and records it in
// manifest.json under `key`. Returns the file name.
std::string publish(const Config& cfg, const std::string& key, const std::string& stem, const std::string& ext,
                    const std::string& content) {
  fs::create_directories(cfg.out);
  const std::string name = stem + "-" + fnv1a(content) + "." + ext;
  std::ofstream(fs::path(cfg.out) / name, std::ios::binary) << content;
  const fs::path manifest = fs::path(cfg.out) / "manifest.json";
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  if (fs::exists(manifest)) m = nlohmann::ordered_json::parse(readFile(manifest));
  m[key] = name;
  std::ofstream(manifest) << m.dump(2) << "\n";
  return name;
}

Catalog loadCatalog(const Config& cfg) {
  fs::path p = cfg.catalogPath;
  if (p.empty()) {
    const fs::path manifest = fs::path(cfg.out) / "manifest.json";
    if (!fs::exists(manifest)) throw std::runtime_error("no catalog: run `hextet enumerate` first or pass --catalog");
    const auto m = nlohmann::json::parse(readFile(manifest));
    if (!m.contains("catalog")) throw std::runtime_error("manifest has no catalog entry");
    p = fs::path(cfg.out) / m["catalog"].get<std::string>();
  }
  return catalogFromJson(nlohmann::json::parse(readFile(p)));
}

int cmdEnumerate(const Config& cfg) {
  EnumerationOptions o;
  o.maxTets = cfg.maxTets;
  const auto t0 = std::chrono::steady_clock::now();
  const Catalog c = buildCatalog(o, cfg.workers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::string cat = publish(cfg, "catalog", "catalog", "json", toJson(c).dump(1) + "\n");
  const std::string csv = publish(cfg, "table", "classes", "csv", countsCsv(c));
  std::cout << countsCsv(c);
  std::cout << c.size() << " classes in " << secs << " s -> " << cat << ", " << csv << "\n";
  int rc = c.size() == 174 ? 0 : 1;
  if (rc) std::cerr << "error: expected 174 classes, found " << c.size() << "\n";
  if (!cfg.sphereData.empty()) {
    const auto spheres = ingestSphereData(cfg.sphereData);
    const auto r = sphereRoute(spheres);
    const bool same = sameClasses(r, c);
    std::cout << "sphere cross-check: " << r.spheres << " spheres, " << r.hexBalls << " of " << r.balls
              << " vertex deletions are hexahedra, " << r.keys.size() << " classes: " << (same ? "match" : "MISMATCH")
              << "\n";
    if (!same) rc = 1;
  }
  return rc;
}

int cmdRealize(const Config& cfg) {
  const Catalog c = loadCatalog(cfg);
  if (!cfg.dimacsDir.empty()) {
    fs::create_directories(cfg.dimacsDir);
    for (const auto& e : c.entries()) {
      const auto inst = encodeConstraints(e.tets, cfg.convex);
      const std::string stem = e.id + (cfg.convex ? "-convex" : "");
      std::ofstream(fs::path(cfg.dimacsDir) / (stem + ".cnf")) << inst.dimacs();
      std::ofstream(fs::path(cfg.dimacsDir) / (stem + ".map.json")) << inst.variableMap().dump(1) << "\n";
    }
  }
  PipelineOptions o;
  o.realize.restarts = cfg.restarts;
  o.realize.iterations = cfg.iters;
  o.realize.seed = cfg.seed;
  o.maxChirotopes = cfg.maxChirotopes;
  o.hullFirst = cfg.hullFirst;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = realizeCatalog(c, cfg.convex, o, cfg.workers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  auto arr = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "class,tets,verdict,chirotopes\n";
  std::map<Verdict, int> counts;
  const std::string tag = cfg.convex ? "convex" : "plain";
  const fs::path meshDir = fs::path(cfg.out) / ("meshes-" + tag);
  fs::create_directories(meshDir);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    arr.push_back(toJson(r));
    ++counts[r.verdict];
    csv << r.classId << "," << c.entries()[i].tetCount << "," << toString(r.verdict) << "," << r.chirotopesTried
        << "\n";
    if (r.realization) {
      std::ofstream m(meshDir / (r.classId + ".mesh"));
      writeMedit(m, *r.realization);
    }
  }
  const std::string res = publish(cfg, "realize-" + tag, "realize-" + tag, "json", arr.dump(1) + "\n");
  const std::string sum = publish(cfg, "realize-" + tag + "-summary", "realize-" + tag, "csv", csv.str());
  for (auto v : {Verdict::Realized, Verdict::SatInfeasible, Verdict::Certificate, Verdict::Undecided})
    std::cout << toString(v) << ": " << counts[v] << "\n";
  std::cout << results.size() << " classes in " << secs << " s -> " << res << ", " << sum << "\n";
  return 0;
}

int cmdScan(const Config& cfg) {
  const Catalog c = loadCatalog(cfg);
  std::ostringstream csv;
  csv << occurrenceCsvHeader() << "\n";
  auto dump = nlohmann::ordered_json::array();
  int failures = 0;
  for (const auto& path : cfg.meshes) {
    try {
      const TetMesh m = loadMesh(path);
      const auto occ = findHexahedra(m, c, cfg.workers);
      const auto table = classifyOccurrences(occ, c, cfg.validOnly);
      const std::string name = fs::path(path).stem().string();
      csv << occurrenceCsvRow(name, m.vertexCount(), table) << "\n";
      nlohmann::ordered_json j;
      j["mesh"] = path;
      j["vertices"] = m.vertexCount();
      j["tets"] = m.tetCount();
      j["manifold"] = m.manifold();
      j["validityTest"] = "trilinear proxy: corner Jacobians and 5x5x5 samples";
      j["perClass"] = table.perClass;
      auto& list = j["occurrences"] = nlohmann::ordered_json::array();
      for (const auto& o : occ) list.push_back(toJson(o));
      dump.push_back(j);
      std::cerr << path << ": " << occ.size() << " hexahedra, " << table.patterns << " patterns\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      ++failures;
    }
  }
  std::cout << csv.str();
  const std::string a = publish(cfg, "scan", "scan", "csv", csv.str());
  const std::string b = publish(cfg, "occurrences", "occurrences", "json", dump.dump(1) + "\n");
  std::cout << "-> " << a << ", " << b << "\n";
  return failures ? 1 : 0;
}

int cmdVerify(const Config& cfg) {
  const auto j = nlohmann::json::parse(readFile(cfg.artifact));
  int bad = 0, items = 0;
  auto report = [&](const std::string& item, bool ok, const std::string& why) {
    ++items;
    if (!ok) ++bad;
    std::cout << item << ": " << (ok ? "true" : "false") << (ok || why.empty() ? "" : " (" + why + ")") << "\n";
  };
  auto verifyRealizationJson = [&](const nlohmann::json& r) {
    const auto real = realizationFromJson(r);
    const auto v = verifyRealization(real);
    report("realization " + real.classId, v.ok, v.reason);
  };
  auto verifyCertificateJson = [&](const std::string& label, const nlohmann::json& cj) {
    std::string why;
    const bool ok = verifyCertificate(certificateFromJson(cj), &why);
    report("certificate " + label, ok, why);
  };
  auto isCatalogEntry = [](const nlohmann::json& e) { return e.is_object() && e.contains("id") && e.contains("tets"); };

  if (j.is_array() && !j.empty() && isCatalogEntry(j[0])) {
    const Catalog c = catalogFromJson(j);
    std::set<CanonicalKey> keys;
    for (const auto& e : c.entries()) {
      const auto check = validateBall(BallComplex(e.tets.tets()), e.boundary);
      const bool canonical = canonicalRepresentative(e.tets) == e.tets;
      const bool fresh = keys.insert(e.key).second;
      report("class " + e.id, check.ok && canonical && fresh,
             !check.ok ? check.message : !canonical ? "not the canonical representative" : "duplicate class");
    }
    report("class count", c.size() == 174, std::to_string(c.size()) + " classes, expected 174");
  } else if (j.is_array()) {
    for (const auto& r : j) {
      if (r.contains("realization")) verifyRealizationJson(r["realization"]);
      if (r.contains("certificates"))
        for (std::size_t k = 0; k < r["certificates"].size(); ++k)
          verifyCertificateJson(r.value("class", std::string("?")) + "#" + std::to_string(k), r["certificates"][k]);
      if (r.contains("points") && !r.contains("realization")) verifyRealizationJson(r);
      if (r.contains("rows")) verifyCertificateJson(std::to_string(items), r);
    }
  } else if (j.is_object() && j.contains("points")) {
    verifyRealizationJson(j);
  } else if (j.is_object() && j.contains("rows")) {
    verifyCertificateJson(cfg.artifact, j);
  } else {
    throw std::runtime_error("unrecognised artifact (expected a catalog, realization, certificate or realize output)");
  }
  std::cout << items - bad << " of " << items << " items verified\n";
  return bad || items == 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulations of the hexahedron: enumeration, realization and mesh scanning"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("--out", cfg.out, "Output directory")->capture_default_str();
    s->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto needsCatalog = [&](CLI::App* s) {
    s->add_option("--catalog", cfg.catalogPath, "Catalog JSON (default: the one recorded in the output manifest)");
  };

  auto* en = app.add_subcommand("enumerate", "Enumerate the triangulation classes");
  common(en);
  en->add_option("--max-tets", cfg.maxTets, "Largest tet count searched")->check(CLI::Range(5, 30))
      ->capture_default_str();
  en->add_option("--sphere-data", cfg.sphereData, "3-sphere triangulations on 9 vertices, for the cross-check")
      ->check(CLI::ExistingFile);

  auto* re = app.add_subcommand("realize", "Decide realizability of every class");
  common(re);
  needsCatalog(re);
  re->add_flag("--convex", cfg.convex, "Require the vertices in convex position");
  re->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  re->add_option("--budget-restarts", cfg.restarts, "Descent restarts per chirotope")->check(CLI::PositiveNumber)
      ->capture_default_str();
  re->add_option("--budget-iters", cfg.iters, "Descent iterations per restart")->check(CLI::PositiveNumber)
      ->capture_default_str();
  re->add_option("--max-chirotopes", cfg.maxChirotopes, "Chirotopes tried per class")->check(CLI::PositiveNumber)
      ->capture_default_str();
  re->add_flag("--hull-first", cfg.hullFirst, "Prefer realizations whose boundary triangles are hull facets");
  re->add_option("--dimacs-dump", cfg.dimacsDir, "Write each class's CNF and variable map here");

  auto* sc = app.add_subcommand("scan", "Find hexahedra in tetrahedral meshes");
  common(sc);
  needsCatalog(sc);
  sc->add_flag("--valid-only", cfg.validOnly, "Count only hexahedra passing the validity proxy");
  sc->add_option("meshes", cfg.meshes, "Mesh files (.mesh, or .node/.ele)")->required();

  auto* ve = app.add_subcommand("verify", "Exact re-verification of an artifact");
  ve->add_option("artifact", cfg.artifact, "Catalog, realization, certificate or realize output JSON")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) return cmdEnumerate(cfg);
    if (*re) return cmdRealize(cfg);
    if (*sc) return cmdScan(cfg);
    if (*ve) return cmdVerify(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
