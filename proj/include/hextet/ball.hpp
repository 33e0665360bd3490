#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hextet/boundary.hpp"
#include "hextet/combinatorics.hpp"

namespace hextet {

/// A tet set together with its derived faces.
struct BallComplex {
  std::vector<VertexMask> tets;
  std::vector<VertexMask> triangles;  // every triangle of some tet
  std::vector<VertexMask> edges;      // every edge of some tet
  std::vector<VertexMask> boundary;   // triangles in exactly one tet
  int vertexCount = 0;

  explicit BallComplex(std::vector<VertexMask> tets);

  int eulerCharacteristic() const;
};

enum class BallFailure {
  None,
  PseudoManifold,    // a triangle in three or more tets
  BoundaryMismatch,  // boundary is not the expected hexahedron boundary
  Euler,             // V - E + F - T != 1
  EdgeLink,          // interior edge link not a cycle / boundary edge link not a path
  VertexLink,        // vertex link not a disk
  Disconnected,      // dual graph of tets disconnected
};

const char* toString(BallFailure f);

struct BallCheck {
  bool ok = true;
  BallFailure failure = BallFailure::None;
  VertexMask simplex = 0;  // offending simplex when applicable
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks the combinatorial 3-ball conditions. When `expected` is given the
/// boundary must be exactly its 12 triangles; otherwise it must be the
/// boundary of some hexahedron boundary triangulation.
BallCheck validateBall(const BallComplex& c, std::optional<BoundaryTriangulation> expected = std::nullopt);

}  // namespace hextet
