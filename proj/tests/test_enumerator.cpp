#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "hextet/ball.hpp"
#include "hextet/catalog.hpp"
#include "hextet/enumerator.hpp"
#include "hextet/sphere_data.hpp"
#include "support.hpp"

using namespace hextet;

namespace {

BoundaryTriangulation boundaryWithDiagonals(std::set<std::string> diags) {
  for (int bits = 0; bits < 64; ++bits) {
    BoundaryTriangulation b(static_cast<std::uint8_t>(bits));
    std::set<std::string> d;
    for (auto [x, y] : b.diagonals()) d.insert(maskString(maskOf({x, y})));
    if (d == diags) return b;
  }
  throw std::invalid_argument("no such boundary");
}

// 5-tet triangulations of one boundary by exhaustive search over all 5-subsets
// of the 64 admissible tets.
std::set<Triangulation> fiveTetOracle(const BoundaryTriangulation& b) {
  std::vector<VertexMask> cand;
  for (int i = 0; i < kNumBases; ++i)
    if (!HexTemplate::isFacetQuadruple(kBases.mask(i))) cand.push_back(kBases.mask(i));
  const auto flags = b.triangleFlags();
  std::vector<std::array<int, 4>> faces(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    int k = 0;
    for (Label l : labelsOf(cand[i])) faces[i][k++] = kTriangles.index(static_cast<VertexMask>(cand[i] & ~bitOf(l)));
  }
  std::set<Triangulation> out;
  const int n = static_cast<int>(cand.size());
  std::array<int, 5> s{};
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == 5) {
      std::array<int, kNumTriangles> cover{};
      for (int i : s)
        for (int f : faces[i]) ++cover[f];
      for (int f = 0; f < kNumTriangles; ++f)
        if (cover[f] != (flags[f] ? 1 : (cover[f] ? 2 : 0))) return;
      std::vector<VertexMask> tets;
      for (int i : s) tets.push_back(cand[i]);
      BallComplex bc(tets);
      if (validateBall(bc, b)) out.insert(Triangulation(tets));
      return;
    }
    for (int i = from; i < n; ++i) {
      s[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

TEST_CASE("boundary triangulations") {
  const auto all = enumerateBoundaryTriangulations();
  CHECK(all.size() == 64);
  std::map<int, int> sizes;
  for (const auto& bc : all) ++sizes[bc.classId];
  CHECK(sizes.size() == 7);
  // Orbit sizes under the 48 symmetries computed directly.
  std::map<int, std::set<int>> orbit;
  for (const auto& bc : all)
    for (const auto& g : symmetryGroup()) orbit[bc.classId].insert(bc.boundary.relabel(g).bits());
  int total = 0;
  for (auto [id, n] : sizes) {
    CHECK(static_cast<int>(orbit[id].size()) == n);
    CHECK(48 % n == 0);
    total += n;
  }
  CHECK(total == 64);
  std::multiset<int> ms;
  for (auto [id, n] : sizes) ms.insert(n);
    // Orbits of the 64 diagonal choices, counted separately over explicit point sets.
  CHECK(ms == std::multiset<int>{2, 4, 4, 6, 12, 12, 24});
}

TEST_CASE("boundary triangles") {
  for (int bits = 0; bits < 64; ++bits) {
    BoundaryTriangulation b(static_cast<std::uint8_t>(bits));
    const auto tris = b.triangles();
    std::vector<VertexMask> v(tris.begin(), tris.end());
    CHECK(BoundaryTriangulation::fromTriangles(v) == b);
    for (auto [x, y] : b.diagonals()) CHECK_FALSE(HexTemplate::isEdge(x, y));
  }
}

TEST_CASE("validateBall on the 5-tet triangulation") {
  const auto t = Triangulation::parse("1245 2347 2567 4578 2457");
  BallComplex c(t.tets());
  // Direct counts: 8 vertices, 12 cube edges + 6 diagonals, 12 + 4 triangles.
  CHECK(c.vertexCount == 8);
  CHECK(c.edges.size() == 18);
  CHECK(c.triangles.size() == 16);
  CHECK(c.tets.size() == 5);
  CHECK(c.eulerCharacteristic() == 1);
  CHECK(c.boundary.size() == 12);
  CHECK(validateBall(c).ok);
  CHECK(validateBall(c, boundaryWithDiagonals({"24", "25", "45", "27", "47", "57"})).ok);
  const auto wrong = validateBall(c, boundaryWithDiagonals({"13", "16", "18", "27", "47", "57"}));
  CHECK_FALSE(wrong.ok);
  CHECK((wrong.failure == BallFailure::BoundaryMismatch));
}

TEST_CASE("validateBall failures") {
  const auto split = validateBall(BallComplex({maskOf({1, 2, 3, 5}), maskOf({1, 2, 3, 6}), maskOf({4, 6, 7, 8}),
                                               maskOf({4, 5, 7, 8})}));
  CHECK_FALSE(split.ok);
  const auto three = validateBall(BallComplex({maskOf({1, 2, 3, 5}), maskOf({1, 2, 3, 6}), maskOf({1, 2, 3, 7})}));
  CHECK_FALSE(three.ok);
  CHECK((three.failure == BallFailure::PseudoManifold));
  CHECK(three.simplex == maskOf({1, 2, 3}));
}

TEST_CASE("5-tet triangulations of single boundaries agree with exhaustive search") {
  EnumerationOptions o;
  o.maxTets = 5;
  for (int bits : {0, 5, 17, 42, 63}) {
    BoundaryTriangulation b(static_cast<std::uint8_t>(bits));
    const auto got = enumerateTriangulations(b, o);
    CHECK(std::set<Triangulation>(got.begin(), got.end()) == fiveTetOracle(b));
  }
  // Diagonals through the antipodal corners 1 and 7: no 5-tet triangulation;
  // the smallest have 6 tets.
  const auto antipodal = boundaryWithDiagonals({"13", "16", "18", "27", "47", "57"});
  CHECK(fiveTetOracle(antipodal).empty());
  const auto all = enumerateTriangulations(antipodal);
  REQUIRE_FALSE(all.empty());
  int smallest = 99;
  for (const auto& t : all) smallest = std::min(smallest, t.size());
  CHECK(smallest == 6);
  // The 5-tet triangulation's own boundary: diagonals at 2, 4, 5 and 7.
  const auto tripod = boundaryWithDiagonals({"24", "25", "45", "27", "47", "57"});
  CHECK(fiveTetOracle(tripod) == std::set<Triangulation>{Triangulation::parse("1245 2347 2567 4578 2457")});
}

TEST_CASE("catalog counts") {
  const auto& c = testing::catalog();
  CHECK(c.size() == 174);
  const std::map<int, int> expected{{5, 1},   {6, 5},   {7, 5},   {8, 7},   {9, 13},  {10, 20},
                                    {11, 35}, {12, 30}, {13, 28}, {14, 19}, {15, 11}};
  CHECK(c.countsByTets() == expected);
  int labeled = 0;
  for (const auto& e : c.entries()) {
    labeled += e.orbitSize;
    CHECK(validateBall(BallComplex(e.tets.tets()), e.boundary).ok);
  }
  CHECK(labeled == static_cast<int>(enumerateAllTriangulations().size()));
  CHECK(labeled == 6966);
  CHECK(countsCsv(c) == "#tets,5,6,7,8,9,10,11,12,13,14,15,Sum\ncombinatorial,1,5,5,7,13,20,35,30,28,19,11,174\n");
}

TEST_CASE("boundary classes per tet count match the reference table") {
  // Reference counts of classes per (tet count, boundary class letter). Our
  // boundary class ids are numbered differently; some relabeling of the 7 ids
  // must reproduce the table.
  const std::map<int, std::map<char, int>> table{
      {5, {{'a', 1}}},
      {6, {{'a', 1}, {'b', 1}, {'c', 1}, {'d', 1}, {'e', 1}}},
      {7, {{'b', 2}, {'c', 1}, {'d', 1}, {'g', 1}}},
      {8, {{'b', 1}, {'d', 3}, {'f', 1}, {'g', 2}}},
      {9, {{'b', 1}, {'d', 5}, {'e', 1}, {'f', 4}, {'g', 2}}},
      {10, {{'b', 1}, {'d', 4}, {'e', 2}, {'f', 4}, {'g', 9}}},
      {11, {{'b', 1}, {'c', 1}, {'d', 5}, {'e', 4}, {'f', 5}, {'g', 19}}},
      {12, {{'c', 1}, {'d', 8}, {'e', 5}, {'f', 1}, {'g', 15}}},
      {13, {{'c', 2}, {'d', 10}, {'e', 3}, {'f', 3}, {'g', 10}}},
      {14, {{'c', 4}, {'d', 8}, {'e', 3}, {'f', 1}, {'g', 3}}},
      {15, {{'c', 4}, {'d', 2}, {'f', 2}, {'g', 3}}},
  };
  std::map<int, std::map<int, int>> ours;
  for (const auto& e : testing::catalog().entries()) ++ours[e.tetCount][e.boundaryClass];
  std::array<char, 7> letters{'a', 'b', 'c', 'd', 'e', 'f', 'g'};
  int matches = 0;
  do {
    bool ok = true;
    for (const auto& [n, row] : table)
      for (int id = 0; id < 7; ++id) {
        auto it = row.find(letters[id]);
        const int want = it == row.end() ? 0 : it->second;
        auto jt = ours[n].find(id);
        if ((jt == ours[n].end() ? 0 : jt->second) != want) ok = false;
      }
    matches += ok;
  } while (std::next_permutation(letters.begin(), letters.end()));
  CHECK(matches == 1);
}

TEST_CASE("catalog does not depend on the worker count") {
  EnumerationOptions o;
  o.maxTets = 9;
  const Catalog a = buildCatalog(o, 1);
  const Catalog b = buildCatalog(o, 3);
  CHECK(toJson(a).dump() == toJson(b).dump());
  CHECK(a.size() == 31);
}

TEST_CASE("sphere data parsing") {
  std::istringstream empty("");
  CHECK(ingestSphereData(empty).empty());

  std::istringstream five("x=[[1,2,3,4,5]]\n");
  try {
    ingestSphereData(five);
    FAIL("expected a parse error");
  } catch (const SphereDataError& e) {
    CHECK(e.line() == 1);
  }

  // Boundary of the 4-simplex on 1..5 is closed but misses labels 6..9.
  std::istringstream small("\n\ns=[[1,2,3,4],[1,2,3,5],[1,2,4,5],[1,3,4,5],[2,3,4,5]]\n");
  try {
    ingestSphereData(small);
    FAIL("expected a vertex-count error");
  } catch (const SphereDataError& e) {
    CHECK(e.line() == 3);
  }

  std::istringstream open("s=[[1,2,3,4],[5,6,7,8],[1,2,3,9]]\n");
  CHECK_THROWS_AS(ingestSphereData(open), SphereDataError);
}

TEST_CASE("sphere route on coned catalog balls") {
  const auto& c = testing::catalog();
  std::ostringstream text;
  for (const auto& e : c.entries()) {
    const auto s = coneOverBoundary(BallComplex(e.tets.tets()), "cone_" + e.id);
    text << s.name << "=[";
    for (std::size_t i = 0; i < s.tets.size(); ++i) {
      const auto& t = s.tets[i];
      text << (i ? ",\n  " : "") << "[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
    }
    text << "]\n";
  }
  std::istringstream in(text.str());
  const auto spheres = ingestSphereData(in);
  REQUIRE(spheres.size() == 174);
  CHECK(spheres[0].name == "cone_5_A");
  for (const auto& e : c.entries()) {
    const auto s = coneOverBoundary(BallComplex(e.tets.tets()));
    const auto ball = deleteVertexLink(s, 9);
    auto expected = e.tets.tets();
    std::sort(expected.begin(), expected.end());
    CHECK(ball.tets == expected);
    CHECK(coneOverBoundary(ball).tets == s.tets);
  }
  const auto r = sphereRoute(spheres);
  CHECK(r.balls == 174 * 9);
  CHECK(r.keys.size() == 174);
  CHECK(sameClasses(r, c));
  // A sphere from a strict subset of the classes cannot match.
  const auto partial = sphereRoute({spheres.begin(), spheres.begin() + 10});
  CHECK_FALSE(sameClasses(partial, c));
}

TEST_CASE("hexahedron structures of a ball") {
  const auto t = Triangulation::parse("1245 2347 2567 4578 2457");
  const auto found = hexahedronTriangulationsOf(BallComplex(t.tets()));
  REQUIRE_FALSE(found.empty());
  for (const auto& f : found) CHECK(canonicalForm(f) == canonicalForm(t));
  // A ball whose boundary has 8 vertices but is not a triangulated cube: the
  // cone over a hexagonal bipyramid boundary... here simply a single tet.
  CHECK(hexahedronTriangulationsOf(BallComplex({maskOf({1, 2, 3, 4})})).empty());
}
