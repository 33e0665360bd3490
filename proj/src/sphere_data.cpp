#include "hextet/sphere_data.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>

namespace hextet {

namespace {

using Mask9 = std::uint16_t;

Mask9 bit9(Label l) { return static_cast<Mask9>(1u << (l - 1)); }

void checkClosed(const SphereTriangulation& s, int line) {
  std::map<Mask9, int> count;
  Mask9 used = 0;
  for (const auto& t : s.tets) {
    Mask9 m = 0;
    for (Label l : t) m |= bit9(l);
    used |= m;
    for (Label l : t) ++count[static_cast<Mask9>(m & ~bit9(l))];
  }
  if (used != 0x1ff) throw SphereDataError(line, "labels must be exactly 1..9");
  for (const auto& [tri, n] : count)
    if (n != 2) throw SphereDataError(line, "a triangle lies in " + std::to_string(n) + " facets");
}

}  // namespace

std::vector<SphereTriangulation> ingestSphereData(std::istream& in) {
  std::vector<SphereTriangulation> out;
  std::string line, record;
  int lineNo = 0, recordLine = 0, depth = 0;
  auto finish = [&] {
    SphereTriangulation s;
    std::string body = record;
    if (auto eq = body.find('='); eq != std::string::npos) {
      s.name = body.substr(0, eq);
      s.name.erase(std::remove_if(s.name.begin(), s.name.end(), [](unsigned char c) { return std::isspace(c); }),
                   s.name.end());
      body = body.substr(eq + 1);
    }
    int d = 0;
    std::vector<long> tuple;
    std::string num;
    auto flushNum = [&] {
      if (num.empty()) return;
      tuple.push_back(std::stol(num));
      num.clear();
    };
    for (char c : body) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (d != 2) throw SphereDataError(recordLine, "number outside a facet");
        num += c;
      } else if (c == '[') {
        if (++d > 2) throw SphereDataError(recordLine, "nesting too deep");
        tuple.clear();
      } else if (c == ']') {
        flushNum();
        if (d == 2) {
          if (tuple.size() != 4)
            throw SphereDataError(recordLine, "facet with " + std::to_string(tuple.size()) + " labels");
          std::array<Label, 4> t{};
          for (int k = 0; k < 4; ++k) {
            if (tuple[k] < 1 || tuple[k] > 9) throw SphereDataError(recordLine, "label out of range 1..9");
            t[k] = static_cast<Label>(tuple[k]);
          }
          std::sort(t.begin(), t.end());
          if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw SphereDataError(recordLine, "repeated label in a facet");
          s.tets.push_back(t);
        }
        --d;
      } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        flushNum();
      } else {
        throw SphereDataError(recordLine, std::string("unexpected character '") + c + "'");
      }
    }
    if (s.tets.empty()) throw SphereDataError(recordLine, "no facets");
    std::sort(s.tets.begin(), s.tets.end());
    if (std::adjacent_find(s.tets.begin(), s.tets.end()) != s.tets.end())
      throw SphereDataError(recordLine, "repeated facet");
    checkClosed(s, recordLine);
    out.push_back(std::move(s));
    record.clear();
  };
  while (std::getline(in, line)) {
    ++lineNo;
    if (depth == 0) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      recordLine = lineNo;
    }
    for (char c : line) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (depth < 0) throw SphereDataError(lineNo, "unbalanced ']'");
    }
    record += line;
    record += ' ';
    if (depth == 0) finish();
  }
  if (depth != 0) throw SphereDataError(recordLine, "unterminated triangulation");
  return out;
}

std::vector<SphereTriangulation> ingestSphereData(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ingestSphereData(in);
}

BallComplex deleteVertexLink(const SphereTriangulation& s, Label v) {
  if (v < 1 || v > 9) throw std::invalid_argument("deleteVertexLink: label must be in 1..9");
  std::vector<VertexMask> tets;
  for (const auto& t : s.tets) {
    if (std::find(t.begin(), t.end(), v) != t.end()) continue;
    VertexMask m = 0;
    for (Label l : t) m |= bitOf(l > v ? l - 1 : l);
    tets.push_back(m);
  }
  std::sort(tets.begin(), tets.end());
  return BallComplex(std::move(tets));
}

SphereTriangulation coneOverBoundary(const BallComplex& ball, const std::string& name) {
  SphereTriangulation s;
  s.name = name;
  for (VertexMask t : ball.tets) {
    const auto l = sortedLabels<4>(t);
    s.tets.push_back(l);
  }
  for (VertexMask tri : ball.boundary) {
    const auto l = sortedLabels<3>(tri);
    s.tets.push_back({l[0], l[1], l[2], 9});
  }
  std::sort(s.tets.begin(), s.tets.end());
  return s;
}

std::vector<Triangulation> hexahedronTriangulationsOf(const BallComplex& ball) {
  std::vector<Triangulation> out;
  const auto& tris = ball.boundary;
  if (tris.size() != 12 || ball.vertexCount != 8) return out;
  std::array<int, 12> mate;
  mate.fill(-1);

  auto tryMatching = [&] {
    std::array<std::array<bool, 9>, 9> adj{};
    std::array<int, 9> degree{};
    std::vector<VertexMask> quads;
    for (int i = 0; i < 12; ++i) {
      const auto l = sortedLabels<3>(tris[i]);
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) adj[l[a]][l[b]] = adj[l[b]][l[a]] = true;
      if (i < mate[i]) quads.push_back(static_cast<VertexMask>(tris[i] | tris[mate[i]]));
    }
    for (int i = 0; i < 12; ++i)
      if (i < mate[i]) {
        const auto d = sortedLabels<2>(static_cast<VertexMask>(tris[i] & tris[mate[i]]));
        adj[d[0]][d[1]] = adj[d[1]][d[0]] = false;
      }
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b) degree[a] += adj[a][b];
    for (int a = 1; a <= 8; ++a)
      if (degree[a] != 3) return;
    // Map vertex 1 and its neighbours to template labels 1, 2, 4, 5 and
    // complete by common neighbours.
    std::array<Label, 9> to{};
    std::vector<Label> n;
    for (int b = 1; b <= 8; ++b)
      if (adj[1][b]) n.push_back(b);
    auto common = [&](Label x, Label y, Label except) {
      for (Label c = 1; c <= 8; ++c)
        if (c != except && adj[x][c] && adj[y][c]) return c;
      return Label{0};
    };
    const Label v3 = common(n[0], n[1], 1), v6 = common(n[0], n[2], 1), v8 = common(n[1], n[2], 1);
    if (!v3 || !v6 || !v8) return;
    Label v7 = 0;
    for (Label c = 1; c <= 8; ++c)
      if (c != n[0] && c != n[1] && c != n[2] && c != 1 && c != v3 && c != v6 && c != v8) v7 = c;
    to[1] = 1;
    to[n[0]] = 2;
    to[n[1]] = 4;
    to[n[2]] = 5;
    to[v3] = 3;
    to[v6] = 6;
    to[v8] = 8;
    to[v7] = 7;
    std::array<bool, 9> seen{};
    for (Label l = 1; l <= 8; ++l) seen[to[l]] = true;
    for (Label l = 1; l <= 8; ++l)
      if (!seen[l]) return;
    auto map = [&](VertexMask m) {
      VertexMask r = 0;
      for (Label l : labelsOf(m)) r |= bitOf(to[l]);
      return r;
    };
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b)
        if (adj[a][b] && !HexTemplate::isEdge(to[a], to[b])) return;
    for (VertexMask q : quads)
      if (!HexTemplate::isFacetQuadruple(map(q))) return;
    std::vector<VertexMask> tets;
    for (VertexMask t : ball.tets) tets.push_back(map(t));
    try {
      Triangulation t(tets);
      if (!validateBall(BallComplex(t.tets()))) return;
      out.push_back(std::move(t));
    } catch (const InvalidTriangulation&) {
      // A facet quadruple is a tet: not a hexahedron triangulation.
    }
  };

  std::function<void()> match = [&] {
    int i = 0;
    while (i < 12 && mate[i] >= 0) ++i;
    if (i == 12) {
      tryMatching();
      return;
    }
    for (int j = i + 1; j < 12; ++j) {
      if (mate[j] >= 0 || popcount(static_cast<VertexMask>(tris[i] & tris[j])) != 2) continue;
      mate[i] = j;
      mate[j] = i;
      match();
      mate[i] = mate[j] = -1;
    }
  };
  match();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SphereCrossCheck sphereRoute(const std::vector<SphereTriangulation>& spheres) {
  SphereCrossCheck r;
  r.spheres = spheres.size();
  for (const auto& s : spheres)
    for (Label v = 1; v <= 9; ++v) {
      ++r.balls;
      const auto hexes = hexahedronTriangulationsOf(deleteVertexLink(s, v));
      if (!hexes.empty()) ++r.hexBalls;
      for (const auto& t : hexes) r.keys.insert(canonicalForm(t));
    }
  return r;
}

bool sameClasses(const SphereCrossCheck& r, const Catalog& c) {
  std::set<CanonicalKey> catalogKeys;
  for (const auto& e : c.entries()) catalogKeys.insert(e.key);
  return catalogKeys == r.keys;
}

}  // namespace hextet
