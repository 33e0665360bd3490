#include "hextet/hex_template.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hextet {

std::array<std::pair<Label, Label>, 2> Facet::diagonals() const {
  std::pair<Label, Label> d0{std::min(cycle[0], cycle[2]), std::max(cycle[0], cycle[2])};
  std::pair<Label, Label> d1{std::min(cycle[1], cycle[3]), std::max(cycle[1], cycle[3])};
  if (d1.first < d0.first) std::swap(d0, d1);
  return {d0, d1};
}

const std::array<std::pair<Label, Label>, 12>& HexTemplate::edges() {
  static const std::array<std::pair<Label, Label>, 12> kEdges{{{1, 2},
                                                               {1, 4},
                                                               {1, 5},
                                                               {2, 3},
                                                               {2, 6},
                                                               {3, 4},
                                                               {3, 7},
                                                               {4, 8},
                                                               {5, 6},
                                                               {5, 8},
                                                               {6, 7},
                                                               {7, 8}}};
  return kEdges;
}

const std::array<Facet, 6>& HexTemplate::facets() {
  static const std::array<Facet, 6> kFacets{{{{1, 2, 3, 4}},
                                             {{1, 2, 6, 5}},
                                             {{1, 4, 8, 5}},
                                             {{2, 3, 7, 6}},
                                             {{3, 4, 8, 7}},
                                             {{5, 6, 7, 8}}}};
  return kFacets;
}

bool HexTemplate::isEdge(Label a, Label b) {
  if (a > b) std::swap(a, b);
  const auto& e = edges();
  return std::find(e.begin(), e.end(), std::pair<Label, Label>{a, b}) != e.end();
}

int HexTemplate::facetIndex(VertexMask m) {
  const auto& f = facets();
  for (int i = 0; i < 6; ++i)
    if (f[i].mask() == m) return i;
  return -1;
}

bool HexTemplate::isFacetQuadruple(VertexMask m) { return facetIndex(m) >= 0; }

Permutation::Permutation() { std::iota(image_.begin(), image_.end(), 1); }

Permutation::Permutation(std::array<Label, 8> image) : image_(image) {
  std::array<bool, 8> seen{};
  for (Label l : image_) {
    if (l < 1 || l > 8 || seen[l - 1]) throw std::invalid_argument("Permutation: not a bijection on 1..8");
    seen[l - 1] = true;
  }
}

VertexMask Permutation::apply(VertexMask m) const {
  VertexMask out = 0;
  for (Label l = 1; l <= 8; ++l)
    if (m & bitOf(l)) out |= bitOf(image_[l - 1]);
  return out;
}

Permutation Permutation::compose(const Permutation& inner) const {
  std::array<Label, 8> img{};
  for (Label l = 1; l <= 8; ++l) img[l - 1] = (*this)(inner(l));
  return Permutation(img);
}

Permutation Permutation::inverse() const {
  std::array<Label, 8> img{};
  for (Label l = 1; l <= 8; ++l) img[image_[l - 1] - 1] = l;
  return Permutation(img);
}

bool Permutation::isIdentity() const { return *this == Permutation(); }

int Permutation::parity() const {
  int sign = 1;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (image_[i] > image_[j]) sign = -sign;
  return sign;
}

bool Permutation::preservesTemplate() const {
  for (auto [a, b] : HexTemplate::edges())
    if (!HexTemplate::isEdge((*this)(a), (*this)(b))) return false;
  return true;
}

const std::vector<Permutation>& symmetryGroup() {
  static const std::vector<Permutation> kGroup = [] {
    std::vector<Permutation> group;
    std::array<Label, 8> img{1, 2, 3, 4, 5, 6, 7, 8};
    do {
      Permutation p(img);
      if (p.preservesTemplate()) group.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return group;
  }();
  return kGroup;
}

}  // namespace hextet
