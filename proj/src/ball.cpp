#include "hextet/ball.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace hextet {

namespace {

BallCheck fail(BallFailure f, VertexMask simplex, std::string msg) {
  return BallCheck{false, f, simplex, std::move(msg)};
}

// Union-find over at most a few dozen items.
struct Components {
  std::vector<int> parent;
  explicit Components(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int count() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

// Link of an edge: a graph on labels whose edges are tet \ e. Checks that it is
// a single cycle (interior) or a single path with boundary endpoints.
BallCheck checkEdgeLink(const std::vector<VertexMask>& tets, VertexMask edge, bool onBoundary,
                        const std::set<VertexMask>& boundaryTris) {
  std::array<int, 9> degree{};
  std::vector<VertexMask> linkEdges;
  for (VertexMask t : tets)
    if ((t & edge) == edge) linkEdges.push_back(static_cast<VertexMask>(t & ~edge));
  VertexMask verts = 0;
  for (VertexMask le : linkEdges) {
    verts |= le;
    for (Label l : labelsOf(le)) ++degree[l];
  }
  std::vector<Label> vs = labelsOf(verts);
  Components comp(9);
  for (VertexMask le : linkEdges) {
    auto ab = labelsOf(le);
    comp.unite(ab[0], ab[1]);
  }
  std::set<int> roots;
  for (Label v : vs) roots.insert(comp.find(v));
  if (roots.size() != 1) return fail(BallFailure::EdgeLink, edge, "edge link disconnected");

  int ends = 0;
  for (Label v : vs) {
    if (degree[v] == 1) {
      ++ends;
      if (!boundaryTris.count(static_cast<VertexMask>(edge | bitOf(v))))
        return fail(BallFailure::EdgeLink, edge, "edge link path ends off the boundary");
    } else if (degree[v] != 2) {
      return fail(BallFailure::EdgeLink, edge, "edge link vertex of degree " + std::to_string(degree[v]));
    }
  }
  if (onBoundary && ends != 2) return fail(BallFailure::EdgeLink, edge, "boundary edge link is not a path");
  if (!onBoundary && ends != 0) return fail(BallFailure::EdgeLink, edge, "interior edge link is not a cycle");
  return {};
}

// Link of a vertex must be a triangulated disk.
BallCheck checkVertexLink(const std::vector<VertexMask>& tets, Label v) {
  const VertexMask bit = bitOf(v);
  std::vector<VertexMask> tris;
  for (VertexMask t : tets)
    if (t & bit) tris.push_back(static_cast<VertexMask>(t & ~bit));
  if (tris.empty()) return fail(BallFailure::VertexLink, bit, "vertex has empty link");

  std::map<VertexMask, int> edgeCount;
  VertexMask verts = 0;
  for (VertexMask tri : tris) {
    verts |= tri;
    for (Label l : labelsOf(tri)) ++edgeCount[static_cast<VertexMask>(tri & ~bitOf(l))];
  }
  int boundaryEdges = 0;
  for (auto [e, n] : edgeCount) {
    if (n > 2) return fail(BallFailure::VertexLink, bit, "vertex link edge in more than two triangles");
    boundaryEdges += n == 1;
  }
  const int chi = popcount(verts) - static_cast<int>(edgeCount.size()) + static_cast<int>(tris.size());
  if (chi != 1 || boundaryEdges == 0)
    return fail(BallFailure::VertexLink, bit, "vertex link is not a disk (chi=" + std::to_string(chi) + ")");

  Components comp(static_cast<int>(tris.size()));
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t j = i + 1; j < tris.size(); ++j)
      if (popcount(tris[i] & tris[j]) == 2) comp.unite(static_cast<int>(i), static_cast<int>(j));
  if (comp.count() != 1) return fail(BallFailure::VertexLink, bit, "vertex link disconnected");
  return {};
}

}  // namespace

BallComplex::BallComplex(std::vector<VertexMask> t) : tets(std::move(t)) {
  std::array<int, 256> triCount{};
  std::set<VertexMask> tri, edge;
  VertexMask verts = 0;
  for (VertexMask m : tets) {
    verts |= m;
    auto l = labelsOf(m);
    for (int i = 0; i < 4; ++i) {
      ++triCount[m & ~bitOf(l[i])];
      tri.insert(static_cast<VertexMask>(m & ~bitOf(l[i])));
      for (int j = i + 1; j < 4; ++j) edge.insert(static_cast<VertexMask>(bitOf(l[i]) | bitOf(l[j])));
    }
  }
  triangles.assign(tri.begin(), tri.end());
  edges.assign(edge.begin(), edge.end());
  for (VertexMask m : triangles)
    if (triCount[m] == 1) boundary.push_back(m);
  vertexCount = popcount(verts);
}

int BallComplex::eulerCharacteristic() const {
  return vertexCount - static_cast<int>(edges.size()) + static_cast<int>(triangles.size()) -
         static_cast<int>(tets.size());
}

const char* toString(BallFailure f) {
  switch (f) {
    case BallFailure::None: return "none";
    case BallFailure::PseudoManifold: return "pseudo-manifold";
    case BallFailure::BoundaryMismatch: return "boundary-mismatch";
    case BallFailure::Euler: return "euler-characteristic";
    case BallFailure::EdgeLink: return "edge-link";
    case BallFailure::VertexLink: return "vertex-link";
    case BallFailure::Disconnected: return "disconnected";
  }
  return "unknown";
}

BallCheck validateBall(const BallComplex& c, std::optional<BoundaryTriangulation> expected) {
  if (c.tets.empty()) return fail(BallFailure::Disconnected, 0, "empty complex");

  std::array<int, 256> triCount{};
  for (VertexMask m : c.tets)
    for (Label l : labelsOf(m)) {
      const auto tri = static_cast<VertexMask>(m & ~bitOf(l));
      if (++triCount[tri] > 2) return fail(BallFailure::PseudoManifold, tri, "triangle " + maskString(tri) + " in 3 or more tets");
    }

  std::optional<BoundaryTriangulation> b = BoundaryTriangulation::fromTriangles(c.boundary);
  if (!b) return fail(BallFailure::BoundaryMismatch, 0, "boundary is not a triangulated hexahedron boundary");
  if (expected && *expected != *b) return fail(BallFailure::BoundaryMismatch, 0, "boundary differs from the expected one");

  if (c.eulerCharacteristic() != 1)
    return fail(BallFailure::Euler, 0, "Euler characteristic " + std::to_string(c.eulerCharacteristic()));

  Components comp(static_cast<int>(c.tets.size()));
  for (std::size_t i = 0; i < c.tets.size(); ++i)
    for (std::size_t j = i + 1; j < c.tets.size(); ++j)
      if (popcount(c.tets[i] & c.tets[j]) == 3) comp.unite(static_cast<int>(i), static_cast<int>(j));
  if (comp.count() != 1) return fail(BallFailure::Disconnected, 0, "tets are not face-connected");

  const std::set<VertexMask> boundaryTris(c.boundary.begin(), c.boundary.end());
  for (VertexMask e : c.edges) {
    bool onBoundary = false;
    for (VertexMask t : c.boundary) onBoundary |= (t & e) == e;
    if (auto r = checkEdgeLink(c.tets, e, onBoundary, boundaryTris); !r) return r;
  }
  for (Label v = 1; v <= 8; ++v)
    if (auto r = checkVertexLink(c.tets, v); !r) return r;
  return {};
}

}  // namespace hextet
