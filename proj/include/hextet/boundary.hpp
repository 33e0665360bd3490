#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "hextet/combinatorics.hpp"
#include "hextet/hex_template.hpp"

namespace hextet {

/// One diagonal per quadrilateral facet. Bit i of `bits` selects diagonal 1
/// (the one not through the smallest label) of facet i.
class BoundaryTriangulation {
 public:
  constexpr BoundaryTriangulation() = default;
  explicit constexpr BoundaryTriangulation(std::uint8_t bits) : bits_(bits & 0x3f) {}

  std::uint8_t bits() const { return bits_; }
  int choice(int facet) const { return (bits_ >> facet) & 1; }
  std::pair<Label, Label> diagonal(int facet) const;
  std::array<std::pair<Label, Label>, 6> diagonals() const;
  /// The two triangles into which the chosen diagonal splits each facet.
  std::array<VertexMask, 12> triangles() const;
  /// Boundary triangle masks indexed like kTriangles (true = boundary).
  std::array<bool, kNumTriangles> triangleFlags() const;

  BoundaryTriangulation relabel(const Permutation& g) const;

  /// The boundary whose 12 triangles are exactly `tris`, if any.
  static std::optional<BoundaryTriangulation> fromTriangles(const std::vector<VertexMask>& tris);
  /// Boundary triangles of a tet set (triangles covered exactly once).
  static std::vector<VertexMask> boundaryTrianglesOf(const std::vector<VertexMask>& tets);

  friend bool operator==(const BoundaryTriangulation&, const BoundaryTriangulation&) = default;
  friend auto operator<=>(const BoundaryTriangulation&, const BoundaryTriangulation&) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Smallest bit pattern in the symmetry orbit of b.
std::uint8_t canonicalBoundaryBits(const BoundaryTriangulation& b);

}  // namespace hextet
