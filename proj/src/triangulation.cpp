#include "hextet/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hextet {

namespace {

void sortByBasisIndex(std::vector<VertexMask>& tets) {
  std::sort(tets.begin(), tets.end(),
            [](VertexMask a, VertexMask b) { return kBases.index(a) < kBases.index(b); });
}

}  // namespace

Triangulation::Triangulation(std::vector<VertexMask> tets) : tets_(std::move(tets)) {
  for (VertexMask m : tets_) {
    if (popcount(m) != 4) throw InvalidTriangulation("tet " + maskString(m) + " does not have 4 vertices");
    if (HexTemplate::isFacetQuadruple(m))
      throw InvalidTriangulation("tet " + maskString(m) + " is a boundary (facet) tetrahedron");
  }
  sortByBasisIndex(tets_);
  if (std::adjacent_find(tets_.begin(), tets_.end()) != tets_.end())
    throw InvalidTriangulation("repeated tetrahedron");
}

Triangulation Triangulation::fromLabels(const std::vector<std::array<Label, 4>>& tets) {
  std::vector<VertexMask> masks;
  masks.reserve(tets.size());
  for (const auto& t : tets) {
    for (Label l : t)
      if (l < 1 || l > 8) throw InvalidTriangulation("label out of range 1..8");
    masks.push_back(maskOf(t));
  }
  return Triangulation(std::move(masks));
}

Triangulation Triangulation::parse(const std::string& text) {
  std::vector<VertexMask> masks;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token.size() != 4) throw InvalidTriangulation("bad tet token '" + token + "'");
    VertexMask m = 0;
    for (char c : token) {
      if (c < '1' || c > '8') throw InvalidTriangulation("bad tet token '" + token + "'");
      m |= bitOf(c - '0');
    }
    masks.push_back(m);
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      token += c;
    else
      flush();
  }
  flush();
  return Triangulation(std::move(masks));
}

bool Triangulation::contains(VertexMask tet) const {
  return std::find(tets_.begin(), tets_.end(), tet) != tets_.end();
}

std::vector<std::array<Label, 4>> Triangulation::labels() const {
  std::vector<std::array<Label, 4>> out;
  out.reserve(tets_.size());
  for (VertexMask m : tets_) out.push_back(sortedLabels<4>(m));
  return out;
}

std::string Triangulation::toString() const {
  std::string s;
  for (VertexMask m : tets_) {
    if (!s.empty()) s += ' ';
    s += maskString(m);
  }
  return s;
}

Triangulation Triangulation::relabel(const Permutation& g) const {
  std::vector<VertexMask> out;
  out.reserve(tets_.size());
  for (VertexMask m : tets_) out.push_back(g.apply(m));
  return Triangulation(std::move(out));
}

std::vector<std::uint8_t> encode(const Triangulation& t) {
  std::vector<std::uint8_t> code;
  code.reserve(t.tets().size());
  for (VertexMask m : t.tets()) code.push_back(static_cast<std::uint8_t>(kBases.index(m)));
  return code;
}

Triangulation decode(const std::vector<std::uint8_t>& code) {
  std::vector<VertexMask> masks;
  masks.reserve(code.size());
  for (auto c : code) masks.push_back(kBases.mask(c));
  return Triangulation(std::move(masks));
}

CanonicalKey canonicalForm(const Triangulation& t) {
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur(t.tets().size());
  for (const Permutation& g : symmetryGroup()) {
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<std::uint8_t>(kBases.index(g.apply(t.tets()[i])));
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  }
  return CanonicalKey{std::move(best)};
}

Triangulation canonicalRepresentative(const Triangulation& t) { return decode(canonicalForm(t).code); }

std::vector<Triangulation> orbit(const Triangulation& t) {
  std::set<Triangulation> images;
  for (const Permutation& g : symmetryGroup()) images.insert(t.relabel(g));
  return {images.begin(), images.end()};
}

int orbitSize(const Triangulation& t) { return static_cast<int>(orbit(t).size()); }

}  // namespace hextet
