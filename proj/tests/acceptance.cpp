// One line per acceptance criterion. Exit status 0 when every criterion
// passes or is skipped for lack of input data, or fails only where the
// failure comes with a machine-checked proof that it cannot be met.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "hextet/catalog.hpp"
#include "hextet/decomposition_graph.hpp"
#include "hextet/enumerator.hpp"
#include "hextet/final_polynomial.hpp"
#include "hextet/meshscan.hpp"
#include "hextet/realizer.hpp"
#include "hextet/sat_encoding.hpp"
#include "hextet/sphere_data.hpp"
#include "mesh_oracle.hpp"

using namespace hextet;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  enum Status { Pass, Fail, Skip } status = Pass;
  std::string detail;
  bool proven = false;  // a Fail backed by a checked impossibility proof
};

int exitCode = 0;

void report(const std::string& id, const Outcome& o) {
  static const char* names[] = {"PASS", "FAIL", "SKIP"};
  std::cout << "criterion " << id << ": " << names[o.status] << " - " << o.detail << std::endl;
  if (o.status == Outcome::Fail && !o.proven) exitCode = 1;
}

std::string join(const std::map<int, int>& m) {
  std::ostringstream s;
  bool first = true;
  for (auto [k, v] : m) {
    s << (first ? "" : ",") << v;
    first = false;
  }
  return s.str();
}

// Proof that no realization of t has its tets fill the convex hull: the
// tets fill the hull exactly when every boundary triangle is a hull facet,
// which the hull clauses encode. Either no chirotope satisfies them or each
// one has a verified final polynomial.
std::string hullImpossibility(const Triangulation& t) {
  auto inst = encodeConstraints(t, false);
  addHullConstraints(inst);
  const std::size_t limit = 100000;
  const auto chis = solveAll(inst, limit);
  if (chis.empty()) return "no chirotope with hull boundary";
  if (chis.size() >= limit) return "";
  for (const auto& chi : chis) {
    const auto cert = findFinalPolynomial(chi);
    if (!cert || !verifyCertificate(*cert)) return "";
  }
  return std::to_string(chis.size()) + " hull chirotope(s), each with a verified final polynomial";
}

}  // namespace

int main(int argc, char** argv) {
  std::string sphereData;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--sphere-data") sphereData = argv[i + 1];
  if (sphereData.empty())
    if (const char* env = std::getenv("HEXTET_SPHERE_DATA")) sphereData = env;

  // 1. Enumeration.
  auto t0 = Clock::now();
  const Catalog c = buildCatalog();
  const double enumSecs = since(t0);
  {
    const auto counts = c.countsByTets();
    const std::map<int, int> expected{{5, 1},   {6, 5},   {7, 5},   {8, 7},   {9, 13}, {10, 20},
                                      {11, 35}, {12, 30}, {13, 28}, {14, 19}, {15, 11}};
    Outcome o;
    o.status = c.size() == 174 && counts == expected && enumSecs < 300 ? Outcome::Pass : Outcome::Fail;
    o.detail = std::to_string(c.size()) + " classes, per tet count " + join(counts) + ", " +
               std::to_string(enumSecs) + " s";
    report("1", o);
  }

  // 2. Boundary classes.
  {
    t0 = Clock::now();
    const auto all = enumerateBoundaryTriangulations();
    std::set<int> ids;
    std::set<std::uint8_t> bits;
    for (const auto& b : all) {
      ids.insert(b.classId);
      bits.insert(b.boundary.bits());
    }
    // Orbits recomputed from the group action.
    std::set<std::set<std::uint8_t>> orbits;
    for (const auto& b : all) {
      std::set<std::uint8_t> orb;
      for (const auto& g : symmetryGroup()) orb.insert(b.boundary.relabel(g).bits());
      orbits.insert(orb);
    }
    const double secs = since(t0);
    Outcome o;
    o.status = all.size() == 64 && bits.size() == 64 && ids.size() == 7 && orbits.size() == 7 && secs < 1
                   ? Outcome::Pass
                   : Outcome::Fail;
    o.detail = std::to_string(all.size()) + " boundaries, " + std::to_string(ids.size()) + " classes (" +
               std::to_string(orbits.size()) + " orbits), " + std::to_string(secs) + " s";
    report("2", o);
  }

  // 3. Sphere cross-check.
  {
    Outcome o;
    if (sphereData.empty()) {
      o.status = Outcome::Skip;
      o.detail = "no 3-sphere dataset supplied (--sphere-data PATH or HEXTET_SPHERE_DATA)";
    } else {
      try {
        const auto spheres = ingestSphereData(sphereData);
        const auto r = sphereRoute(spheres);
        const bool same = sameClasses(r, c);
        o.status = same ? Outcome::Pass : Outcome::Fail;
        o.detail = std::to_string(r.spheres) + " spheres, " + std::to_string(r.hexBalls) + " hexahedral deletions, " +
                   std::to_string(r.keys.size()) + " classes, " + (same ? "identical to" : "different from") +
                   " the catalog";
      } catch (const std::exception& e) {
        o.status = Outcome::Fail;
        o.detail = std::string("cannot read dataset: ") + e.what();
      }
    }
    report("3", o);
  }

  // 4. SAT realizability.
  std::set<std::string> satisfiableIds;
  {
    t0 = Clock::now();
    std::vector<std::string> unsat;
    for (const auto& e : c.entries()) {
      if (satisfiable(encodeConstraints(e.tets, false)))
        satisfiableIds.insert(e.id);
      else
        unsat.push_back(e.id);
    }
    const double secs = since(t0);
    bool all15 = true;
    std::string list;
    for (const auto& id : unsat) {
      all15 = all15 && c.findId(id)->tetCount == 15;
      list += (list.empty() ? "" : " ") + id;
    }
    Outcome o;
    o.status = satisfiableIds.size() == 171 && unsat.size() == 3 && all15 && secs < 1800 ? Outcome::Pass
                                                                                         : Outcome::Fail;
    o.detail = std::to_string(satisfiableIds.size()) + " satisfiable, unsatisfiable: " + list + ", " +
               std::to_string(secs) + " s";
    report("4", o);
  }

  // 5. Convex variant.
  PipelineOptions defaults;
  t0 = Clock::now();
  const auto convex = realizeCatalog(c, true, defaults);
  {
    std::map<int, int> lacking;
    int satInfeasible = 0, certificates = 0, undecided = 0, total = 0;
    std::string certClass;
    bool certsOk = true;
    for (std::size_t i = 0; i < convex.size(); ++i) {
      const auto& r = convex[i];
      const auto& e = c.entries()[i];
      if (r.verdict == Verdict::Undecided) ++undecided;
      if (r.realization) certsOk = certsOk && verifyRealization(*r.realization) && inConvexPosition(r.realization->points);
      // Counted among the classes that have a realization at all.
      if (!satisfiableIds.count(e.id) || r.verdict == Verdict::Realized) continue;
      ++total;
      ++lacking[e.tetCount];
      if (r.verdict == Verdict::SatInfeasible) ++satInfeasible;
      if (r.verdict == Verdict::Certificate) {
        ++certificates;
        certClass = e.id;
        for (const auto& cert : r.certificates) certsOk = certsOk && verifyCertificate(cert);
      }
    }
    const std::map<int, int> expected{{12, 2}, {13, 2}, {14, 5}, {15, 4}};
    Outcome o;
    o.status = total == 13 && lacking == expected && satInfeasible == 12 && certificates == 1 && undecided == 0 &&
                       c.findId(certClass) && c.findId(certClass)->tetCount == 15 && certsOk
                   ? Outcome::Pass
                   : Outcome::Fail;
    o.detail = std::to_string(total) + " of the 171 lack a convex realization (12..15 tets: " + join(lacking) +
               "), " + std::to_string(satInfeasible) + " SAT-infeasible, " + std::to_string(certificates) +
               " certified (" + certClass + "), witnesses and certificates re-verified, " +
               std::to_string(since(t0)) + " s";
    report("5", o);
  }

  // 6. Realization witnesses under default budgets.
  t0 = Clock::now();
  const auto plain = realizeCatalog(c, false, defaults);
  {
    int verified = 0;
    std::string missing;
    for (std::size_t i = 0; i < plain.size(); ++i) {
      const auto& id = c.entries()[i].id;
      if (!satisfiableIds.count(id)) continue;
      if (plain[i].realization && verifyRealization(*plain[i].realization))
        ++verified;
      else
        missing += " " + id;
    }
    Outcome o;
    o.status = verified == 171 ? Outcome::Pass : Outcome::Fail;
    o.detail = std::to_string(verified) + " of 171 classes have an exactly verified realization (default budgets: " +
               std::to_string(defaults.realize.restarts) + " restarts x " +
               std::to_string(defaults.realize.iterations) + " iterations, no extension needed)" +
               (missing.empty() ? "" : "; missing:" + missing) + ", " + std::to_string(since(t0)) + " s";
    report("6", o);
  }

  // 7. Cube oracle.
  {
    const auto cube = chirotopeOfPointsAllowDegenerate(unitCube());
    std::set<Triangulation> labeled;
    std::set<std::string> classes;
    int fiveTet = 0;
    for (const auto& e : c.entries())
      for (const auto& t : orbit(e.tets))
        if (compatibleWith(cube, t)) {
          labeled.insert(t);
          classes.insert(e.id);
          fiveTet += t.size() == 5;
        }
    Outcome o;
    o.status = labeled.size() == 74 && classes.size() == 6 && fiveTet == 2 ? Outcome::Pass : Outcome::Fail;
    o.detail = std::to_string(labeled.size()) + " labeled triangulations, " + std::to_string(classes.size()) +
               " classes, " + std::to_string(fiveTet) + " with 5 tets";
    report("7", o);
  }

  // 8. Round-trip properties.
  {
    // (a) the chirotope of every realizer output is its target.
    int checked = 0, identity = 0;
    for (const auto* set : {&plain, &convex})
      for (const auto& r : *set)
        if (r.realization) {
          ++checked;
          identity += chirotopeOfPoints(r.realization->points) == r.realization->chirotope;
        }
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> d(-100, 100);
    for (int t = 0; t < 50; ++t) {
      ExactConfig p;
      for (auto& q : p) q = {mpq_class(d(rng)), mpq_class(d(rng)), mpq_class(d(rng))};
      const auto chi = chirotopeOfPoints(p);
      ++checked;
      if (const auto back = realize(chi)) identity += chirotopeOfPoints(*back) == chi;
    }
    Outcome a;
    a.status = identity == checked ? Outcome::Pass : Outcome::Fail;
    a.detail = std::to_string(identity) + " of " + std::to_string(checked) +
               " realizations reproduce their chirotope (pipeline outputs and 50 random point sets)";
    report("8a", a);

    // (b) canonical form.
    int canon = 0, pairs = 0;
    for (const auto& e : c.entries()) {
      const bool idem = canonicalRepresentative(e.tets) == e.tets;
      for (const auto& g : symmetryGroup()) {
        ++pairs;
        const auto h = e.tets.relabel(g);
        canon += idem && canonicalRepresentative(h) == e.tets && canonicalForm(h) == e.key;
      }
    }
    Outcome b;
    b.status = canon == pairs && pairs == 174 * 48 ? Outcome::Pass : Outcome::Fail;
    b.detail = std::to_string(canon) + " of " + std::to_string(pairs) + " (class, symmetry) pairs";
    report("8b", b);

    // (c) tets fill the hull, for the realizations the pipeline ships when it
    // prefers hull-boundary realizations.
    PipelineOptions hullFirst = defaults;
    hullFirst.hullFirst = true;
    const auto shipped = realizeCatalog(c, false, hullFirst);
    int equal = 0, consistent = 0, total = 0;
    std::vector<std::string> proven, unproven;
    for (std::size_t i = 0; i < shipped.size(); ++i) {
      const auto& r = shipped[i];
      if (!r.realization) continue;
      ++total;
      const auto& p = r.realization->points;
      const auto& tets = r.realization->triangulation.tets();
      const auto vol = totalVolume(p, tets);
      consistent += vol == enclosedVolume(p, BoundaryTriangulation::boundaryTrianglesOf(tets));
      if (vol == hullVolume(p)) {
        ++equal;
        continue;
      }
      const std::string why = hullImpossibility(c.entries()[i].tets);
      (why.empty() ? unproven : proven).push_back(r.classId + (why.empty() ? "" : " (" + why + ")"));
    }
    Outcome cc;
    cc.status = equal == total ? Outcome::Pass : Outcome::Fail;
    cc.proven = unproven.empty() && consistent == total;
    std::ostringstream s;
    s << equal << " of " << total << " shipped realizations have volume sum = hull volume; " << consistent << " of "
      << total << " have volume sum = volume enclosed by their boundary";
    if (!proven.empty()) {
      s << "; impossible for " << proven.size() << " classes:";
      for (const auto& x : proven) s << " " << x << ";";
    }
    if (!unproven.empty()) {
      s << " UNPROVEN:";
      for (const auto& x : unproven) s << " " << x;
    }
    cc.detail = s.str();
    report("8c", cc);

    // (d) decomposition-graph classification against orbit classification
    // over every labeled triangulation.
    std::map<std::vector<int>, std::set<std::string>> byGraph;
    std::map<std::string, std::set<std::vector<int>>> byClass;
    int labeled = 0;
    for (const auto& e : c.entries())
      for (const auto& t : orbit(e.tets)) {
        ++labeled;
        const auto b = *BoundaryTriangulation::fromTriangles(BoundaryTriangulation::boundaryTrianglesOf(t.tets()));
        const auto cert = canonicalCertificate(decompositionGraph(t, b));
        byGraph[cert].insert(c.classify(t)->id);
        byClass[e.id].insert(cert);
      }
    bool agree = byGraph.size() == 174;
    for (const auto& [cert, ids] : byGraph) agree = agree && ids.size() == 1;
    for (const auto& [id, certs] : byClass) agree = agree && certs.size() == 1;
    Outcome dd;
    dd.status = agree && labeled == 6966 ? Outcome::Pass : Outcome::Fail;
    dd.detail = std::to_string(labeled) + " labeled triangulations, " + std::to_string(byGraph.size()) +
                " graph classes, one-to-one with the symmetry classes: " + (agree ? "yes" : "no");
    report("8d", dd);
  }

  // 9. Meshscan oracle equivalence.
  {
    std::mt19937_64 rng(99);
    int meshes = 0, equal = 0, occurrences = 0;
    const std::array<std::array<int, 3>, 4> dims{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {2, 2, 1}}};
    for (int t = 0; t < 12; ++t) {
      const auto d = dims[t % dims.size()];
      auto m = cubeGridMesh(d[0], d[1], d[2], rng, 0.2);
      if (t % 2) m = dropTets(m, 0.8, rng);
      if (m.vertexCount() > 20) continue;
      std::vector<int> perm(m.vertexCount());
      for (int i = 0; i < m.vertexCount(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      m = permuteVertices(m, perm);
      const auto occ = findHexahedra(m, c);
      occurrences += static_cast<int>(occ.size());
      ++meshes;
      equal += oracle::keysOf(occ) == oracle::bruteForceHexahedra(m, c);
    }
    Outcome o;
    o.status = meshes >= 10 && equal == meshes ? Outcome::Pass : Outcome::Fail;
    o.detail = std::to_string(equal) + " of " + std::to_string(meshes) +
               " randomized meshes (<= 20 vertices) match the exhaustive search, " + std::to_string(occurrences) +
               " occurrences in total";
    report("9", o);
  }

  return exitCode;
}
