#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hextet/ball.hpp"
#include "hextet/catalog.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

/// Closed combinatorial 3-manifold on labels 1..9 given by its facets.
struct SphereTriangulation {
  std::string name;
  std::vector<std::array<Label, 4>> tets;  // each sorted
};

class SphereDataError : public std::runtime_error {
 public:
  SphereDataError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One triangulation per non-empty line, facets as bracketed 4-tuples, with
/// an optional "name=" prefix:
///   manifold_3_9_1=[[1,2,3,4],[1,2,3,5],...]
/// Every triangle must lie in exactly two facets and the labels must be
/// exactly 1..9.
std::vector<SphereTriangulation> ingestSphereData(std::istream& in);
std::vector<SphereTriangulation> ingestSphereData(const std::string& path);

/// Facets not containing v, relabelled order-preservingly to 1..8.
BallComplex deleteVertexLink(const SphereTriangulation& s, Label v);

/// Cone over the boundary of a ball on 1..8 with apex 9; the inverse of
/// deleteVertexLink(., 9).
SphereTriangulation coneOverBoundary(const BallComplex& ball, const std::string& name = "");

/// Every labelling of the ball's vertices under which it is a hexahedron
/// triangulation (boundary a triangulated cube, no facet quadruple as a tet,
/// ball conditions hold), one representative per hexahedral structure.
std::vector<Triangulation> hexahedronTriangulationsOf(const BallComplex& ball);

struct SphereCrossCheck {
  std::size_t spheres = 0;
  std::size_t balls = 0;     // spheres x 9
  std::size_t hexBalls = 0;  // deletions carrying at least one hexahedral structure
  std::set<CanonicalKey> keys;
};

/// The vertex-deletion route: canonical keys of all hexahedron
/// triangulations reachable from the spheres.
SphereCrossCheck sphereRoute(const std::vector<SphereTriangulation>& spheres);

/// True iff the deletion route yields exactly the catalog's classes.
bool sameClasses(const SphereCrossCheck& r, const Catalog& c);

}  // namespace hextet
