#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hextet/boundary.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

/// Edge-colored multigraph with one node per tet: black edges join tets
/// sharing a triangle, grey edges join the two tets carrying the two
/// triangles of a facet. Node i is the i-th tet of the triangulation.
struct DecompGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> black;  // sorted, first < second
  std::vector<std::pair<int, int>> grey;   // sorted, may repeat a pair

  int degree(int node) const;
};

class DecompGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws DecompGraphError if some tet does not account for exactly four faces.
DecompGraph decompositionGraph(const Triangulation& t, const BoundaryTriangulation& b);

/// Canonical certificate: adjacency weights (black + 4 * grey) read in a
/// canonical node order obtained by colour refinement and individualisation.
std::vector<int> canonicalCertificate(const DecompGraph& g);

bool graphIsomorphic(const DecompGraph& a, const DecompGraph& b);

}  // namespace hextet
