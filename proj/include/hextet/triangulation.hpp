#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hextet/combinatorics.hpp"
#include "hextet/hex_template.hpp"

namespace hextet {

class InvalidTriangulation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of tetrahedra on the labels 1..8, none of which is a facet quadruple.
/// Tets are kept as masks, sorted by the lexicographic order of their labels.
class Triangulation {
 public:
  Triangulation() = default;
  /// Throws InvalidTriangulation on repeated tets, facet quadruples, or
  /// masks that are not 4-subsets.
  explicit Triangulation(std::vector<VertexMask> tets);
  static Triangulation fromLabels(const std::vector<std::array<Label, 4>>& tets);
  /// Parses "1245 2347 ..." (whitespace or comma separated).
  static Triangulation parse(const std::string& text);

  const std::vector<VertexMask>& tets() const { return tets_; }
  int size() const { return static_cast<int>(tets_.size()); }
  bool contains(VertexMask tet) const;
  std::vector<std::array<Label, 4>> labels() const;
  std::string toString() const;

  Triangulation relabel(const Permutation& g) const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
    return a.tets_ <=> b.tets_;
  }

 private:
  std::vector<VertexMask> tets_;
};

/// Lexicographically minimal sorted basis-index encoding over the 48 symmetries.
struct CanonicalKey {
  std::vector<std::uint8_t> code;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    if (a.code.size() != b.code.size()) return a.code.size() <=> b.code.size();
    return a.code <=> b.code;
  }
};

/// Sorted basis indices of the tets (the encoding minimised by canonicalForm).
std::vector<std::uint8_t> encode(const Triangulation& t);
Triangulation decode(const std::vector<std::uint8_t>& code);

CanonicalKey canonicalForm(const Triangulation& t);
/// The triangulation whose encoding is the canonical key.
Triangulation canonicalRepresentative(const Triangulation& t);
/// Number of distinct images of t under the 48 symmetries.
int orbitSize(const Triangulation& t);
/// All distinct images of t, sorted.
std::vector<Triangulation> orbit(const Triangulation& t);

}  // namespace hextet
