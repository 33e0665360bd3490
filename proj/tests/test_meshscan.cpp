#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hextet/meshscan.hpp"
#include "hextet/realizer.hpp"
#include "mesh_oracle.hpp"
#include "support.hpp"

using namespace hextet;

namespace {

const std::vector<Realization>& smallRealizations() {
  static const std::vector<Realization> rs = [] {
    std::vector<Realization> out;
    for (const auto& e : testing::catalog().entries()) {
      if (e.tetCount > 7) break;
      auto r = realizeClass(e, false);
      REQUIRE(r.realization);
      out.push_back(*r.realization);
    }
    return out;
  }();
  return rs;
}

// Corner determinant of the trilinear map at corner (a, b, c) of the
// reference cube: the three edge vectors along u, v, w.
double cornerDeterminant(const HexCorners& p, int a, int b, int c) {
  auto at = [&](int i, int j, int k) {
    static const int lab[2][2][2] = {{{1, 5}, {4, 8}}, {{2, 6}, {3, 7}}};  // [u][v][w]
    return p[lab[i][j][k] - 1];
  };
  auto diff = [](const Vec3& x, const Vec3& y) { return Vec3{x[0] - y[0], x[1] - y[1], x[2] - y[2]}; };
  const Vec3 du = diff(at(1, b, c), at(0, b, c));
  const Vec3 dv = diff(at(a, 1, c), at(a, 0, c));
  const Vec3 dw = diff(at(a, b, 1), at(a, b, 0));
  return du[0] * (dv[1] * dw[2] - dv[2] * dw[1]) - du[1] * (dv[0] * dw[2] - dv[2] * dw[0]) +
         du[2] * (dv[0] * dw[1] - dv[1] * dw[0]);
}

// Two unit cubes sharing the facet x = 1, each split into five tets with the
// second the mirror image of the first.
TetMesh gluedCubes() {
  std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                         {1, 1, 1}, {0, 1, 1}, {2, 0, 0}, {2, 1, 0}, {2, 0, 1}, {2, 1, 1}};
  std::vector<std::array<int, 4>> a = {{0, 1, 2, 5}, {0, 2, 3, 7}, {0, 4, 5, 7}, {2, 5, 6, 7}, {0, 2, 5, 7}};
  const int mirror[8] = {8, 1, 2, 9, 10, 5, 6, 11};
  auto t = a;
  for (const auto& x : a) t.push_back({mirror[x[0]], mirror[x[1]], mirror[x[2]], mirror[x[3]]});
  return TetMesh(v, t);
}

const char* kCubeSixTets = R"(MeshVersionFormatted 2
Dimension 3
# unit cube around the diagonal 1-7
Vertices
8
0 0 0 0
1 0 0 0
1 1 0 0
0 1 0 0
0 0 1 0
1 0 1 0
1 1 1 0
0 1 1 0
Tetrahedra
6
1 2 3 7 0
1 3 4 7 0
1 4 8 7 0
1 8 5 7 0
1 5 6 7 0
1 6 2 7 0
End
)";

std::multiset<std::pair<std::array<int, 8>, std::string>> shapes(const std::vector<HexOccurrence>& occ,
                                                                 const std::vector<int>& perm = {}) {
  std::multiset<std::pair<std::array<int, 8>, std::string>> out;
  for (const auto& o : occ) {
    auto k = o.vertexKey();
    if (!perm.empty()) {
      for (int& v : k) v = perm[v];
      std::sort(k.begin(), k.end());
    }
    out.emplace(k, o.classId);
  }
  return out;
}

}  // namespace

TEST_CASE("tetgen input") {
  std::istringstream node("4 3 0 0\n1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n");
  std::istringstream ele("1 4 0\n1 1 2 3 4\n");
  const auto m = readTetgen(node, ele);
  CHECK(m.tetCount() == 1);
  CHECK(m.vertexCount() == 4);
  CHECK(m.triangleCount() == 4);
  CHECK(m.edgeCount() == 6);
  CHECK(m.manifold());
  CHECK(m.hasTriangle(2, 0, 1));
  CHECK(m.findTet({3, 2, 1, 0}) == 0);

  // Zero-based with a comment and a marker column.
  std::istringstream node0("# comment\n4 3 0 1\n0 0 0 0 1\n1 1 0 0 1\n2 0 1 0 1\n3 0 0 1 1\n");
  std::istringstream ele0("1 4 0\n0 0 1 2 3\n");
  const auto m0 = readTetgen(node0, ele0);
  CHECK(m0.tets() == m.tets());
  CHECK(m0.vertices() == m.vertices());

  std::istringstream nodeBad("4 3 0 0\n1 0 0 0\n2 1 0 0\n3 0 1 0\n4 0 0 1\n");
  std::istringstream eleBad("1 4 0\n1 1 2 3 5\n");
  try {
    readTetgen(nodeBad, eleBad, "bad");
    CHECK(false);
  } catch (const MeshError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  std::istringstream nodeShort("4 3 0 0\n1 0 0 0\n2 1 0 0\n");
  std::istringstream eleOk("1 4 0\n1 1 2 3 4\n");
  CHECK_THROWS_AS(readTetgen(nodeShort, eleOk), MeshError);

  std::ostringstream on, oe;
  writeTetgen(on, oe, m);
  std::istringstream in(on.str()), ie(oe.str());
  const auto back = readTetgen(in, ie);
  CHECK(back.tets() == m.tets());
  CHECK(back.vertices() == m.vertices());
}

TEST_CASE("medit input") {
  std::istringstream in(kCubeSixTets);
  const auto m = readMedit(in);
  CHECK(m.tetCount() == 6);
  CHECK(m.vertexCount() == 8);
  for (const auto& t : m.tets()) {
    CHECK(std::count(t.begin(), t.end(), 0) == 1);
    CHECK(std::count(t.begin(), t.end(), 6) == 1);
  }
  CHECK(m.star(0).size() == 6);
  CHECK(m.triangleTets(0, 6, 2).size() == 2);
  // 12 cube edges, 6 facet diagonals, 1 body diagonal.
  CHECK(m.edgeCount() == 19);
  std::ostringstream out;
  writeMedit(out, m);
  std::istringstream again(out.str());
  CHECK(readMedit(again).tets() == m.tets());

  std::istringstream unknown("MeshVersionFormatted 2\nDimension 3\nBogus\n1\n");
  try {
    readMedit(unknown, "u.mesh");
    CHECK(false);
  } catch (const MeshError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream range("Dimension 3\nVertices\n1\n0 0 0 0\nTetrahedra\n1\n1 2 3 4 0\nEnd\n");
  CHECK_THROWS_AS(readMedit(range), MeshError);
  CHECK_THROWS_AS(TetMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 2}}), MeshError);
  CHECK_THROWS_AS(TetMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}, {3, 2, 1, 0}}), MeshError);
  CHECK_THROWS_AS(loadMesh("/nonexistent/x.mesh"), MeshError);
  CHECK_THROWS_AS(loadMesh("x.obj"), MeshError);
}

TEST_CASE("six-tet cube") {
  std::istringstream in(kCubeSixTets);
  const auto m = readMedit(in);
  const auto& c = testing::catalog();
  const auto occ = findHexahedra(m, c);
  REQUIRE(occ.size() >= 1);
  CHECK(occ[0].vertexKey() == std::array<int, 8>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(occ[0].tetCount == 6);
  CHECK(oracle::keysOf(occ) == oracle::bruteForceHexahedra(m, c));
  CHECK(occ[0].validityProxy);
}

TEST_CASE("self-detection of one realized hexahedron") {
  const auto& c = testing::catalog();
  const auto& r = smallRealizations()[0];
  const auto m = disjointHexMesh({r});
  const auto occ = findHexahedra(m, c);
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].classId == "5_A");
  CHECK(c.classify(occ[0].triangulation)->id == "5_A");
  // Corner map: template edges are mesh edges.
  for (auto [a, b] : HexTemplate::edges()) CHECK(m.hasEdge(occ[0].corners[a - 1], occ[0].corners[b - 1]));
}

TEST_CASE("glued cubes") {
  const auto& c = testing::catalog();
  const auto m = gluedCubes();
  const auto occ = findHexahedra(m, c);
  CHECK(oracle::keysOf(occ) == oracle::bruteForceHexahedra(m, c));
  // Both cubes, plus one 6-tet hexahedron straddling the shared facet.
  REQUIRE(occ.size() == 3);
  std::multiset<std::string> ids;
  int valid = 0;
  for (const auto& o : occ) {
    ids.insert(o.classId);
    valid += o.validityProxy;
  }
  CHECK(ids == std::multiset<std::string>{"5_A", "5_A", "6_B"});
  CHECK(valid == 2);
  const auto t = classifyOccurrences(occ, c, true);
  CHECK(t.total == 2);
  CHECK(t.perClass.at("5_A") == 2);
  CHECK(classifyOccurrences(occ, c).total == 3);
}

TEST_CASE("randomized meshes against the brute-force oracle") {
  const auto& c = testing::catalog();
  std::mt19937_64 rng(2024);
  int meshes = 0, withHexes = 0;
  const std::array<std::array<int, 3>, 4> dims{{{2, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 1, 2}}};
  for (int trial = 0; trial < 16; ++trial) {
    const auto d = dims[trial % dims.size()];
    auto m = cubeGridMesh(d[0], d[1], d[2], rng, 0.15);
    if (trial % 3 == 2) m = dropTets(m, 0.85, rng);
    REQUIRE(m.vertexCount() <= 20);
    const auto occ = findHexahedra(m, c, 1 + trial % 3);
    const auto brute = oracle::bruteForceHexahedra(m, c);
    CHECK(oracle::keysOf(occ) == brute);
    ++meshes;
    withHexes += !occ.empty();
    for (const auto& o : occ) {
      CHECK(o.classId != "?");
      CHECK(o.tetCount == static_cast<int>(o.tets.size()));
    }
  }
  CHECK(meshes >= 10);
  CHECK(withHexes >= 5);
}

TEST_CASE("worker count and vertex order do not matter") {
  const auto& c = testing::catalog();
  std::mt19937_64 rng(7);
  const auto m = cubeGridMesh(3, 2, 2, rng, 0.1);
  const auto one = findHexahedra(m, c, 1);
  const auto four = findHexahedra(m, c, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].corners == four[i].corners);
    CHECK(one[i].tets == four[i].tets);
  }
  CHECK(one.size() >= 12);
  std::vector<int> perm(m.vertexCount());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto pm = permuteVertices(m, perm);
  CHECK(shapes(findHexahedra(pm, c)) == shapes(one, perm));
}

TEST_CASE("disjoint realized hexahedra") {
  const auto& c = testing::catalog();
  const auto& rs = smallRealizations();
  REQUIRE(rs.size() == 11);
  const auto m = disjointHexMesh(rs);
  const auto occ = findHexahedra(m, c);
  // Expected occurrences per hexahedron from the oracle on that hexahedron
  // alone. A triangulation can contain a second hexahedron on the same eight
  // vertices: 7_C holds a 5_A under another corner map.
  std::multiset<std::string> built, found;
  for (const auto& r : rs)
    for (const auto& [w, tets, id] : oracle::bruteForceHexahedra(disjointHexMesh({r}), c)) built.insert(id);
  for (const auto& o : occ) found.insert(o.classId);
  CHECK(found == built);
  CHECK(occ.size() == 12);
  CHECK(found.count("5_A") == 2);
  const auto t = classifyOccurrences(occ, c);
  CHECK(t.patternsPerTets.at(5) == 1);
  CHECK(t.patternsPerTets.at(6) == 5);
  CHECK(t.patternsPerTets.at(7) == 5);
  CHECK(occurrenceCsvRow("small", m.vertexCount(), t) == "small,88,1,5,5,0,0,0,0,0,0,0,0,11");
  CHECK(t.total == 12);
  CHECK(occurrenceCsvHeader() == "mesh,vertices,5,6,7,8,9,10,11,12,13,14,15,total");
  int sum = 0;
  for (const auto& [id, n] : t.perClass) sum += n;
  CHECK(sum == t.total);

  // Duplicating a subset of them doubles their counts.
  std::vector<Realization> twice(rs.begin(), rs.begin() + 3);
  twice.insert(twice.end(), rs.begin(), rs.begin() + 3);
  const auto t2 = classifyOccurrences(findHexahedra(disjointHexMesh(twice), c), c);
  CHECK(t2.total == 6);
  CHECK(t2.patterns == 3);
  for (const auto& [id, n] : t2.perClass) CHECK(n == 2);
}

TEST_CASE("tables") {
  const auto& c = testing::catalog();
  const auto empty = classifyOccurrences({}, c);
  CHECK(empty.total == 0);
  CHECK(empty.patterns == 0);
  CHECK(occurrenceCsvRow("none", 0, empty) == "none,0,0,0,0,0,0,0,0,0,0,0,0,0");
  HexOccurrence bogus;
  bogus.triangulation = Triangulation::parse("1235 2346");
  CHECK_THROWS_AS(classifyOccurrences({bogus}, c), UnknownPattern);
  const auto m = gluedCubes();
  const auto occ = findHexahedra(m, c);
  const auto j = toJson(occ[0]);
  CHECK(j["corners"].size() == 8);
  CHECK(j["class"] == occ[0].classId);
}

TEST_CASE("validity proxy") {
  CHECK(trilinearValidityProxy(toDouble(unitCube())));
  auto swapped = toDouble(unitCube());
  std::swap(swapped[0], swapped[6]);
  CHECK_FALSE(trilinearValidityProxy(swapped));
  // Realizer outputs, including strongly sheared ones, against the corner
  // determinants computed directly.
  int agreeing = 0;
  for (const auto& r : smallRealizations()) {
    for (const auto& pts : {r.points, mirrored(r.points)}) {
      const auto h = toDouble(pts);
      bool allPositive = true;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int cc = 0; cc < 2; ++cc) {
            const double d = cornerDeterminant(h, a, b, cc);
            static const int lab[2][2][2] = {{{1, 5}, {4, 8}}, {{2, 6}, {3, 7}}};
            CHECK(cornerJacobians(h)[lab[a][b][cc] - 1] == doctest::Approx(d));
            allPositive = allPositive && d > 0;
          }
      if (!allPositive) CHECK_FALSE(trilinearValidityProxy(h));
      ++agreeing;
    }
  }
  CHECK(agreeing == 22);
  // A shear keeps the proxy true.
  auto sheared = toDouble(unitCube());
  for (auto& p : sheared) p[0] += 3 * p[2];
  CHECK(trilinearValidityProxy(sheared));
}
