#include "hextet/meshscan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hextet/ball.hpp"
#include "hextet/enumerator.hpp"

namespace hextet {

namespace {

const std::vector<int> kNoTets;

template <std::size_t N>
std::array<int, N> sorted(std::array<int, N> a) {
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TetMesh::TetMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets)
    : vertices_(std::move(vertices)), tets_(std::move(tets)) {
  const int n = vertexCount();
  neighbours_.assign(n, {});
  star_.assign(n, {});
  for (std::size_t i = 0; i < tets_.size(); ++i) {
    auto& t = tets_[i];
    for (int v : t)
      if (v < 0 || v >= n)
        throw MeshError("mesh", 0, "tet " + std::to_string(i) + " references vertex " + std::to_string(v) +
                                       " of " + std::to_string(n));
    t = sorted(t);
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      throw MeshError("mesh", 0, "tet " + std::to_string(i) + " repeats a vertex");
    if (!tetIndex_.emplace(t, static_cast<int>(i)).second)
      throw MeshError("mesh", 0, "tet " + std::to_string(i) + " is a duplicate");
    for (int a = 0; a < 4; ++a) {
      star_[t[a]].push_back(static_cast<int>(i));
      for (int b = 0; b < 4; ++b)
        if (a != b) neighbours_[t[a]].push_back(t[b]);
      std::array<int, 3> tri{};
      for (int k = 0, j = 0; k < 4; ++k)
        if (k != a) tri[j++] = t[k];
      auto& inc = triangles_[tri];
      inc.push_back(static_cast<int>(i));
      if (inc.size() > 2) manifold_ = false;
    }
  }
  for (auto& nb : neighbours_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edgeCount_ += nb.size();
  }
  edgeCount_ /= 2;
}

bool TetMesh::hasEdge(int a, int b) const {
  const auto& nb = neighbours_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<int>& TetMesh::triangleTets(int a, int b, int c) const {
  auto it = triangles_.find(sorted(std::array<int, 3>{a, b, c}));
  return it == triangles_.end() ? kNoTets : it->second;
}

int TetMesh::findTet(std::array<int, 4> t) const {
  auto it = tetIndex_.find(sorted(t));
  return it == tetIndex_.end() ? -1 : it->second;
}

// ---------------------------------------------------------------- input

namespace {

// Whitespace tokens with their line numbers; '#' starts a comment.
struct Tokens {
  std::vector<std::pair<std::string, int>> items;
  std::size_t pos = 0;
  std::string file;

  Tokens(std::istream& in, std::string name) : file(std::move(name)) {
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) items.emplace_back(tok, n);
    }
  }
  bool done() const { return pos >= items.size(); }
  int line() const { return done() ? (items.empty() ? 0 : items.back().second) : items[pos].second; }
  const std::string& peek() const {
    if (done()) throw MeshError(file, line(), "unexpected end of file");
    return items[pos].first;
  }
  std::string next() {
    const std::string& s = peek();
    ++pos;
    return s;
  }
  long long integer() {
    const int l = line();
    const std::string s = next();
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw MeshError(file, l, "expected an integer, got '" + s + "'");
  }
  double real() {
    const int l = line();
    const std::string s = next();
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw MeshError(file, l, "expected a number, got '" + s + "'");
  }
};

TetMesh assemble(std::vector<Vec3> v, std::vector<std::array<int, 4>> t, const std::string& name) {
  try {
    return TetMesh(std::move(v), std::move(t));
  } catch (const MeshError& e) {
    std::string what = e.what();
    throw MeshError(name, 0, what.substr(what.find(": ") + 2));
  }
}

}  // namespace

TetMesh readTetgen(std::istream& node, std::istream& ele, const std::string& name) {
  Tokens nt(node, name + ".node");
  const long long n = nt.integer();
  const long long dim = nt.integer();
  const long long attrs = nt.integer();
  const long long markers = nt.integer();
  if (dim != 3) throw MeshError(nt.file, 1, "dimension must be 3");
  if (n < 0 || attrs < 0 || markers < 0 || markers > 1) throw MeshError(nt.file, 1, "bad header");
  std::vector<Vec3> verts(static_cast<std::size_t>(n));
  long long base = 0;
  for (long long i = 0; i < n; ++i) {
    const int l = nt.line();
    const long long idx = nt.integer();
    if (i == 0) {
      if (idx != 0 && idx != 1) throw MeshError(nt.file, l, "first index must be 0 or 1");
      base = idx;
    }
    if (idx != i + base) throw MeshError(nt.file, l, "indices must be consecutive");
    for (int k = 0; k < 3; ++k) verts[i][k] = nt.real();
    for (long long a = 0; a < attrs + markers; ++a) nt.real();
  }
  Tokens et(ele, name + ".ele");
  const long long m = et.integer();
  const long long per = et.integer();
  const long long eattrs = et.integer();
  if (m < 0 || (per != 4 && per != 10) || eattrs < 0) throw MeshError(et.file, 1, "bad header");
  std::vector<std::array<int, 4>> tets(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const int l = et.line();
    et.integer();
    for (long long k = 0; k < per; ++k) {
      const long long v = et.integer() - base;
      if (v < 0 || v >= n)
        throw MeshError(et.file, l, "vertex " + std::to_string(v + base) + " out of range");
      if (k < 4) tets[i][k] = static_cast<int>(v);
    }
    for (long long a = 0; a < eattrs; ++a) et.real();
  }
  return assemble(std::move(verts), std::move(tets), name);
}

TetMesh readMedit(std::istream& in, const std::string& name) {
  Tokens tk(in, name);
  // Records per entry for sections that are skipped.
  static const std::map<std::string, int> skip = {
      {"Edges", 3},        {"Triangles", 4},        {"Quadrilaterals", 5}, {"Hexahedra", 9},
      {"Prisms", 7},       {"Corners", 1},          {"Ridges", 1},         {"RequiredVertices", 1},
      {"RequiredEdges", 1}, {"RequiredTriangles", 1}, {"Normals", 3},       {"Tangents", 3},
  };
  std::vector<Vec3> verts;
  std::vector<std::array<int, 4>> tets;
  bool haveVerts = false;
  while (!tk.done()) {
    const int l = tk.line();
    const std::string key = tk.next();
    if (key == "End") break;
    if (key == "MeshVersionFormatted") {
      tk.integer();
    } else if (key == "Dimension") {
      if (tk.integer() != 3) throw MeshError(name, l, "dimension must be 3");
    } else if (key == "Vertices") {
      const long long n = tk.integer();
      if (n < 0) throw MeshError(name, l, "negative count");
      verts.resize(static_cast<std::size_t>(n));
      for (auto& p : verts) {
        for (int k = 0; k < 3; ++k) p[k] = tk.real();
        tk.integer();
      }
      haveVerts = true;
    } else if (key == "Tetrahedra") {
      const long long n = tk.integer();
      if (n < 0) throw MeshError(name, l, "negative count");
      for (long long i = 0; i < n; ++i) {
        const int tl = tk.line();
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
          const long long v = tk.integer();
          if (!haveVerts || v < 1 || v > static_cast<long long>(verts.size()))
            throw MeshError(name, tl, "vertex " + std::to_string(v) + " out of range");
          t[k] = static_cast<int>(v - 1);
        }
        tk.integer();
        tets.push_back(t);
      }
    } else if (auto it = skip.find(key); it != skip.end()) {
      const long long n = tk.integer();
      for (long long i = 0; i < n * it->second; ++i) tk.real();
    } else {
      throw MeshError(name, l, "unknown section '" + key + "'");
    }
  }
  return assemble(std::move(verts), std::move(tets), name);
}

TetMesh loadMesh(const std::string& path) {
  auto ext = [&](const std::string& e) { return path.size() >= e.size() && path.ends_with(e); };
  if (ext(".mesh")) {
    std::ifstream in(path);
    if (!in) throw MeshError(path, 0, "cannot open");
    return readMedit(in, path);
  }
  if (ext(".node") || ext(".ele")) {
    const std::string stem = path.substr(0, path.rfind('.'));
    std::ifstream node(stem + ".node"), ele(stem + ".ele");
    if (!node) throw MeshError(stem + ".node", 0, "cannot open");
    if (!ele) throw MeshError(stem + ".ele", 0, "cannot open");
    return readTetgen(node, ele, stem);
  }
  throw MeshError(path, 0, "unknown mesh format (expected .mesh, .node or .ele)");
}

void writeMedit(std::ostream& out, const TetMesh& m) {
  out << "MeshVersionFormatted 1\nDimension 3\nVertices\n" << m.vertexCount() << "\n";
  out.precision(17);
  for (const auto& p : m.vertices()) out << p[0] << " " << p[1] << " " << p[2] << " 0\n";
  out << "Tetrahedra\n" << m.tetCount() << "\n";
  for (const auto& t : m.tets()) out << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << " " << t[3] + 1 << " 0\n";
  out << "End\n";
}

void writeTetgen(std::ostream& node, std::ostream& ele, const TetMesh& m) {
  node.precision(17);
  node << m.vertexCount() << " 3 0 0\n";
  for (int i = 0; i < m.vertexCount(); ++i) {
    const auto& p = m.vertices()[i];
    node << i << " " << p[0] << " " << p[1] << " " << p[2] << "\n";
  }
  ele << m.tetCount() << " 4 0\n";
  for (int i = 0; i < m.tetCount(); ++i) {
    const auto& t = m.tets()[i];
    ele << i << " " << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  }
}

// ---------------------------------------------------------------- detection

std::array<int, 8> HexOccurrence::vertexKey() const { return sorted(corners); }

namespace {

struct Detector {
  const TetMesh& m;
  const Catalog& c;
  // (vertex key, tet set) -> occurrence with the smallest corner map
  std::map<std::pair<std::array<int, 8>, std::vector<int>>, HexOccurrence> found;

  void seed(int v1) {
    const auto& n1 = m.neighbours(v1);
    std::vector<int> up;
    for (int x : n1)
      if (x > v1) up.push_back(x);
    std::vector<int> c3, c6, c8;
    for (int a : up)
      for (int b : up) {
        if (b == a) continue;
        common(a, b, v1, c3);
        if (c3.empty()) continue;
        for (int d : up) {
          if (d == a || d == b) continue;
          common(a, d, v1, c6);
          common(b, d, v1, c8);
          for (int v3 : c3)
            for (int v6 : c6)
              for (int v8 : c8) {
                std::array<int, 8> k{v1, a, v3, b, d, v6, 0, v8};
                // 7 is a common neighbour of 3, 6 and 8.
                for (int v7 : m.neighbours(v3)) {
                  if (v7 <= v1 || !m.hasEdge(v6, v7) || !m.hasEdge(v8, v7)) continue;
                  k[6] = v7;
                  auto s = sorted(k);
                  if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
                  tryCorners(k);
                }
              }
        }
      }
  }

  // Neighbours of both a and b above v1 other than v1.
  void common(int a, int b, int v1, std::vector<int>& out) const {
    out.clear();
    const auto& na = m.neighbours(a);
    const auto& nb = m.neighbours(b);
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    std::erase_if(out, [&](int x) { return x <= v1; });
  }

  void tryCorners(const std::array<int, 8>& k) {
    auto at = [&](Label l) { return k[l - 1]; };
    // Diagonal choices per facet whose two triangles are in the mesh.
    std::array<std::vector<int>, 6> options;
    for (int f = 0; f < 6; ++f) {
      const auto diags = HexTemplate::facets()[f].diagonals();
      for (int d = 0; d < 2; ++d) {
        const auto [p, q] = diags[d];
        const VertexMask rest = static_cast<VertexMask>(HexTemplate::facets()[f].mask() & ~bitOf(p) & ~bitOf(q));
        const auto o = sortedLabels<2>(rest);
        if (m.hasTriangle(at(p), at(q), at(o[0])) && m.hasTriangle(at(p), at(q), at(o[1])))
          options[f].push_back(d);
      }
      if (options[f].empty()) return;
    }
    std::array<int, 6> pick{};
    std::function<void(int)> rec = [&](int f) {
      if (f == 6) {
        std::uint8_t bits = 0;
        for (int i = 0; i < 6; ++i) bits |= static_cast<std::uint8_t>(pick[i] << i);
        fill(k, BoundaryTriangulation(bits));
        return;
      }
      for (int d : options[f]) {
        pick[f] = d;
        rec(f + 1);
      }
    };
    rec(0);
  }

  // Flood the region bounded by b's triangles from each side of one of them.
  void fill(const std::array<int, 8>& k, const BoundaryTriangulation& b) {
    std::array<int, 8> key = sorted(k);
    auto inW = [&](int v) { return std::binary_search(key.begin(), key.end(), v); };
    auto labelOf = [&](int v) { return static_cast<Label>(std::find(k.begin(), k.end(), v) - k.begin() + 1); };
    std::set<std::array<int, 3>> bnd;
    for (VertexMask tri : b.triangles()) {
      const auto l = sortedLabels<3>(tri);
      bnd.insert(sorted(std::array<int, 3>{k[l[0] - 1], k[l[1] - 1], k[l[2] - 1]}));
    }
    const auto& first = *bnd.begin();
    for (int start : m.triangleTets(first[0], first[1], first[2])) {
      const auto& st = m.tets()[start];
      if (!std::all_of(st.begin(), st.end(), inW)) continue;
      std::vector<int> region{start};
      std::set<int> in{start};
      std::map<std::array<int, 3>, int> seen;
      bool ok = true;
      for (std::size_t q = 0; q < region.size() && ok; ++q) {
        const auto& t = m.tets()[region[q]];
        for (int a = 0; a < 4 && ok; ++a) {
          std::array<int, 3> tri{};
          for (int x = 0, j = 0; x < 4; ++x)
            if (x != a) tri[j++] = t[x];
          ++seen[tri];
          if (bnd.count(tri)) continue;
          int across = -1, count = 0;
          for (int o : m.triangleTets(tri[0], tri[1], tri[2]))
            if (o != region[q]) {
              across = o;
              ++count;
            }
          if (count != 1) {
            ok = false;
            break;
          }
          const auto& ot = m.tets()[across];
          if (!std::all_of(ot.begin(), ot.end(), inW)) {
            ok = false;
            break;
          }
          if (in.insert(across).second) region.push_back(across);
        }
      }
      if (!ok || region.size() > 15) continue;
      // Every boundary triangle once, every other triangle twice.
      for (const auto& [tri, n] : seen)
        if (n != (bnd.count(tri) ? 1 : 2)) ok = false;
      for (const auto& tri : bnd)
        if (!seen.count(tri)) ok = false;
      if (!ok) continue;
      std::vector<VertexMask> masks;
      for (int ti : region) {
        VertexMask mk = 0;
        for (int v : m.tets()[ti]) mk |= bitOf(labelOf(v));
        masks.push_back(mk);
      }
      Triangulation t;
      try {
        t = Triangulation(masks);
      } catch (const InvalidTriangulation&) {
        continue;
      }
      if (!validateBall(BallComplex(t.tets()), b)) continue;
      HexOccurrence occ;
      occ.corners = k;
      occ.tets = region;
      std::sort(occ.tets.begin(), occ.tets.end());
      occ.tetCount = static_cast<int>(region.size());
      occ.triangulation = t;
      if (const auto* e = c.classify(t)) occ.classId = e->id;
      auto [it, inserted] = found.try_emplace({key, occ.tets}, occ);
      if (!inserted && k < it->second.corners) it->second = occ;
    }
  }
};

}  // namespace

std::vector<HexOccurrence> findHexahedra(const TetMesh& m, const Catalog& c, int workers) {
  workers = std::max(1, workers);
  std::atomic<int> next{0};
  std::vector<Detector> dets;
  for (int w = 0; w < workers; ++w) dets.push_back(Detector{m, c, {}});
  auto run = [&](Detector& d) {
    for (int v; (v = next.fetch_add(1)) < m.vertexCount();) d.seed(v);
  };
  if (workers == 1) {
    run(dets[0]);
  } else {
    std::vector<std::thread> pool;
    for (auto& d : dets) pool.emplace_back(run, std::ref(d));
    for (auto& t : pool) t.join();
  }
  // Each occurrence is found only from its smallest vertex, so the maps are
  // disjoint by vertex set; merging in key order makes the output independent
  // of scheduling.
  std::map<std::pair<std::array<int, 8>, std::vector<int>>, HexOccurrence> all;
  for (auto& d : dets)
    for (auto& [k, occ] : d.found) {
      auto [it, inserted] = all.try_emplace(k, occ);
      if (!inserted && occ.corners < it->second.corners) it->second = occ;
    }
  std::vector<HexOccurrence> out;
  for (auto& [k, occ] : all) {
    occ.validityProxy = validityProxy(occ, m);
    out.push_back(std::move(occ));
  }
  return out;
}

bool validityProxy(const HexOccurrence& occ, const TetMesh& m) {
  HexCorners h{};
  for (int i = 0; i < 8; ++i) h[i] = m.vertices()[occ.corners[i]];
  if (cornerJacobians(h)[0] < 0) {
    // Reflection x <-> y of the template: 2 <-> 4, 6 <-> 8.
    std::swap(h[1], h[3]);
    std::swap(h[5], h[7]);
  }
  return trilinearValidityProxy(h, 5);
}

OccurrenceTable classifyOccurrences(const std::vector<HexOccurrence>& occ, const Catalog& c, bool validOnly) {
  OccurrenceTable t;
  std::map<int, std::set<std::string>> classes;
  for (const auto& o : occ) {
    if (validOnly && !o.validityProxy) continue;
    const auto* e = c.classify(o.triangulation);
    if (!e) throw UnknownPattern("triangulation " + o.triangulation.toString() + " is not in the catalog");
    ++t.perClass[e->id];
    ++t.occurrencesPerTets[e->tetCount];
    classes[e->tetCount].insert(e->id);
    ++t.total;
  }
  for (const auto& [n, s] : classes) {
    t.patternsPerTets[n] = static_cast<int>(s.size());
    t.patterns += static_cast<int>(s.size());
  }
  return t;
}

std::string occurrenceCsvHeader() {
  std::string s = "mesh,vertices";
  for (int n = 5; n <= 15; ++n) s += "," + std::to_string(n);
  return s + ",total";
}

std::string occurrenceCsvRow(const std::string& mesh, int vertices, const OccurrenceTable& t) {
  std::string s = mesh + "," + std::to_string(vertices);
  for (int n = 5; n <= 15; ++n) {
    auto it = t.patternsPerTets.find(n);
    s += "," + std::to_string(it == t.patternsPerTets.end() ? 0 : it->second);
  }
  return s + "," + std::to_string(t.patterns);
}

nlohmann::ordered_json toJson(const HexOccurrence& occ) {
  nlohmann::ordered_json j;
  j["corners"] = occ.corners;
  j["tets"] = occ.tets;
  j["class"] = occ.classId;
  j["tetCount"] = occ.tetCount;
  j["triangulation"] = occ.triangulation.toString();
  j["validityProxy"] = occ.validityProxy;
  return j;
}

// ---------------------------------------------------------------- synthetic meshes

TetMesh disjointHexMesh(const std::vector<Realization>& rs) {
  std::vector<Vec3> verts;
  std::vector<std::array<int, 4>> tets;
  double offset = 0;
  for (const auto& r : rs) {
    const HexCorners h = toDouble(r.points);
    double lo = h[0][0], hi = h[0][0];
    for (const auto& p : h) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    const int base = static_cast<int>(verts.size());
    for (const auto& p : h) verts.push_back({p[0] - lo + offset, p[1], p[2]});
    offset += hi - lo + 1.0;
    for (VertexMask t : r.triangulation.tets()) {
      const auto l = sortedLabels<4>(t);
      tets.push_back({base + l[0] - 1, base + l[1] - 1, base + l[2] - 1, base + l[3] - 1});
    }
  }
  return TetMesh(std::move(verts), std::move(tets));
}

namespace {

const std::vector<Triangulation>& cubeTriangulations() {
  static const std::vector<Triangulation> all = [] {
    EnumerationOptions o;
    o.maxTets = 6;
    const Chirotope cube = chirotopeOfPointsAllowDegenerate(unitCube());
    std::vector<Triangulation> out;
    for (auto& t : enumerateAllTriangulations(o))
      if (compatibleWith(cube, t)) out.push_back(t);
    return out;
  }();
  return all;
}

}  // namespace

TetMesh cubeGridMesh(int nx, int ny, int nz, std::mt19937_64& rng, double jitter) {
  auto id = [&](int i, int j, int k) { return (k * (ny + 1) + j) * (nx + 1) + i; };
  std::vector<Vec3> verts((nx + 1) * (ny + 1) * (nz + 1));
  std::uniform_real_distribution<double> u(-jitter, jitter);
  for (int k = 0; k <= nz; ++k)
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        verts[id(i, j, k)] = {i + (jitter > 0 ? u(rng) : 0.0), j + (jitter > 0 ? u(rng) : 0.0),
                              k + (jitter > 0 ? u(rng) : 0.0)};
  static constexpr int kOff[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                     {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  // Triangles already fixed on shared grid faces, per face.
  std::map<std::array<int, 4>, std::set<std::array<int, 3>>> faces;
  std::vector<std::array<int, 4>> tets;
  const auto& pool = cubeTriangulations();
  for (int k = 0; k < nz; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        std::array<int, 8> g{};
        for (int l = 0; l < 8; ++l) g[l] = id(i + kOff[l][0], j + kOff[l][1], k + kOff[l][2]);
        auto glob = [&](VertexMask mk) {
          std::vector<int> v;
          for (Label l : labelsOf(mk)) v.push_back(g[l - 1]);
          std::sort(v.begin(), v.end());
          return v;
        };
        std::vector<const Triangulation*> fits;
        for (const auto& t : pool) {
          bool ok = true;
          for (VertexMask tri : BoundaryTriangulation::boundaryTrianglesOf(t.tets())) {
            for (const auto& f : HexTemplate::facets()) {
              if ((tri & f.mask()) != tri) continue;
              auto q = glob(f.mask());
              auto it = faces.find({q[0], q[1], q[2], q[3]});
              if (it == faces.end()) continue;
              auto v = glob(tri);
              if (!it->second.count({v[0], v[1], v[2]})) ok = false;
            }
          }
          if (ok) fits.push_back(&t);
        }
        if (fits.empty()) continue;
        const Triangulation& t = *fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
        for (VertexMask tet : t.tets()) {
          auto v = glob(tet);
          tets.push_back({v[0], v[1], v[2], v[3]});
        }
        for (VertexMask tri : BoundaryTriangulation::boundaryTrianglesOf(t.tets()))
          for (const auto& f : HexTemplate::facets())
            if ((tri & f.mask()) == tri) {
              auto q = glob(f.mask());
              auto v = glob(tri);
              faces[{q[0], q[1], q[2], q[3]}].insert({v[0], v[1], v[2]});
            }
      }
  return TetMesh(std::move(verts), std::move(tets));
}

TetMesh permuteVertices(const TetMesh& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.vertexCount()) throw std::invalid_argument("permuteVertices: size");
  std::vector<Vec3> verts(m.vertexCount());
  for (int v = 0; v < m.vertexCount(); ++v) verts[perm[v]] = m.vertices()[v];
  std::vector<std::array<int, 4>> tets;
  for (const auto& t : m.tets()) tets.push_back({perm[t[0]], perm[t[1]], perm[t[2]], perm[t[3]]});
  return TetMesh(std::move(verts), std::move(tets));
}

TetMesh dropTets(const TetMesh& m, double keep, std::mt19937_64& rng) {
  std::bernoulli_distribution b(keep);
  std::vector<std::array<int, 4>> tets;
  for (const auto& t : m.tets())
    if (b(rng)) tets.push_back(t);
  return TetMesh(m.vertices(), std::move(tets));
}

}  // namespace hextet
