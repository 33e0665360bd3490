#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "hextet/boundary.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

struct BoundaryClass {
  BoundaryTriangulation boundary;
  int classId = 0;  // 0..6, ordered by the smallest bit pattern in each orbit
};

/// All 64 labeled boundary triangulations with their symmetry class.
std::vector<BoundaryClass> enumerateBoundaryTriangulations();

struct EnumerationOptions {
  int minTets = 5;
  int maxTets = 15;
  /// Restricts the tets the search may use (indexed by basis index). Defaults
  /// to every non-facet 4-subset.
  std::bitset<kNumBases> allowed = defaultAllowed();

  static std::bitset<kNumBases> defaultAllowed();
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t closedComplexes = 0;  // pseudo-manifolds reaching closure
  std::uint64_t rejectedByValidation = 0;
};

/// Every labeled triangulation of the hexahedron whose boundary is `b`,
/// sorted. Complexes are grown triangle by triangle from the boundary and
/// validated with validateBall when no open triangle remains.
std::vector<Triangulation> enumerateTriangulations(const BoundaryTriangulation& b,
                                                   const EnumerationOptions& opts = {},
                                                   EnumerationStats* stats = nullptr);

/// Union over all 64 boundaries; `workers` threads share the boundaries.
std::vector<Triangulation> enumerateAllTriangulations(const EnumerationOptions& opts = {}, int workers = 1);

}  // namespace hextet
