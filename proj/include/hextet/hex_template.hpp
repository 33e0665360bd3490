#pragma once

#include <array>
#include <utility>
#include <vector>

#include "hextet/combinatorics.hpp"

namespace hextet {

/// A facet of the hexahedron template, with its vertices in cyclic order.
struct Facet {
  std::array<Label, 4> cycle;

  VertexMask mask() const { return maskOf(cycle); }

  /// The two diagonals; index 0 is the one through the facet's smallest label.
  std::array<std::pair<Label, Label>, 2> diagonals() const;
};

/// Combinatorial hexahedron {12345678}: 12 edges and 6 quadrilateral facets.
struct HexTemplate {
  static const std::array<std::pair<Label, Label>, 12>& edges();
  static const std::array<Facet, 6>& facets();

  static bool isEdge(Label a, Label b);
  static bool isFacetQuadruple(VertexMask m);
  /// Index of the facet whose four labels form `m`, or -1.
  static int facetIndex(VertexMask m);
};

/// Relabeling of {1..8}; image[l-1] is the image of label l.
class Permutation {
 public:
  Permutation();
  explicit Permutation(std::array<Label, 8> image);

  Label operator()(Label l) const { return image_[l - 1]; }
  VertexMask apply(VertexMask m) const;
  const std::array<Label, 8>& image() const { return image_; }

  Permutation compose(const Permutation& inner) const;  // (*this)(inner(l))
  Permutation inverse() const;
  bool isIdentity() const;
  /// Sign of the permutation as an element of S_8.
  int parity() const;
  bool preservesTemplate() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<Label, 8> image_;
};

/// All 48 relabelings mapping the template edge set onto itself, sorted.
const std::vector<Permutation>& symmetryGroup();

}  // namespace hextet
