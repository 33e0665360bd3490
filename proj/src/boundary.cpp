#include "hextet/boundary.hpp"

#include <algorithm>

namespace hextet {

std::pair<Label, Label> BoundaryTriangulation::diagonal(int facet) const {
  return HexTemplate::facets()[facet].diagonals()[choice(facet)];
}

std::array<std::pair<Label, Label>, 6> BoundaryTriangulation::diagonals() const {
  std::array<std::pair<Label, Label>, 6> out{};
  for (int f = 0; f < 6; ++f) out[f] = diagonal(f);
  return out;
}

std::array<VertexMask, 12> BoundaryTriangulation::triangles() const {
  std::array<VertexMask, 12> out{};
  for (int f = 0; f < 6; ++f) {
    const VertexMask quad = HexTemplate::facets()[f].mask();
    auto [a, b] = diagonal(f);
    const VertexMask rest = quad & ~(bitOf(a) | bitOf(b));
    int k = 0;
    for (Label l = 1; l <= 8; ++l)
      if (rest & bitOf(l)) out[2 * f + k++] = static_cast<VertexMask>(bitOf(a) | bitOf(b) | bitOf(l));
  }
  return out;
}

std::array<bool, kNumTriangles> BoundaryTriangulation::triangleFlags() const {
  std::array<bool, kNumTriangles> flags{};
  for (VertexMask t : triangles()) flags[kTriangles.index(t)] = true;
  return flags;
}

BoundaryTriangulation BoundaryTriangulation::relabel(const Permutation& g) const {
  std::vector<VertexMask> tris;
  for (VertexMask t : triangles()) tris.push_back(g.apply(t));
  return *fromTriangles(tris);
}

std::optional<BoundaryTriangulation> BoundaryTriangulation::fromTriangles(const std::vector<VertexMask>& tris) {
  if (tris.size() != 12) return std::nullopt;
  std::vector<VertexMask> sorted(tris);
  std::sort(sorted.begin(), sorted.end());
  for (int bits = 0; bits < 64; ++bits) {
    BoundaryTriangulation b(static_cast<std::uint8_t>(bits));
    auto t = b.triangles();
    std::vector<VertexMask> cand(t.begin(), t.end());
    std::sort(cand.begin(), cand.end());
    if (cand == sorted) return b;
  }
  return std::nullopt;
}

std::vector<VertexMask> BoundaryTriangulation::boundaryTrianglesOf(const std::vector<VertexMask>& tets) {
  std::array<int, kNumTriangles> count{};
  for (VertexMask t : tets)
    for (Label l = 1; l <= 8; ++l)
      if (t & bitOf(l)) ++count[kTriangles.index(static_cast<VertexMask>(t & ~bitOf(l)))];
  std::vector<VertexMask> out;
  for (int i = 0; i < kNumTriangles; ++i)
    if (count[i] == 1) out.push_back(kTriangles.mask(i));
  return out;
}

std::uint8_t canonicalBoundaryBits(const BoundaryTriangulation& b) {
  std::uint8_t best = 0xff;
  for (const Permutation& g : symmetryGroup()) best = std::min(best, b.relabel(g).bits());
  return best;
}

}  // namespace hextet
