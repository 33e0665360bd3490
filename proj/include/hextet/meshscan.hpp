#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hextet/catalog.hpp"
#include "hextet/geometry.hpp"
#include "hextet/realizer.hpp"

namespace hextet {

class MeshError : public std::runtime_error {
 public:
  MeshError(const std::string& file, int line, const std::string& what)
      : std::runtime_error(file + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ArrayHash {
  template <std::size_t N>
  std::size_t operator()(const std::array<int, N>& a) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : a) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Indexed tetrahedral mesh (0-based) with edge, triangle and star adjacency.
class TetMesh {
 public:
  TetMesh() = default;
  /// Throws MeshError on out-of-range indices, degenerate or repeated tets.
  TetMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets);

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  int tetCount() const { return static_cast<int>(tets_.size()); }
  std::size_t edgeCount() const { return edgeCount_; }
  std::size_t triangleCount() const { return triangles_.size(); }
  /// No triangle in more than two tets.
  bool manifold() const { return manifold_; }

  /// Sorted edge neighbours.
  const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }
  const std::vector<int>& star(int v) const { return star_[v]; }
  bool hasEdge(int a, int b) const;
  /// Tets containing the triangle (any vertex order); empty when absent.
  const std::vector<int>& triangleTets(int a, int b, int c) const;
  bool hasTriangle(int a, int b, int c) const { return !triangleTets(a, b, c).empty(); }
  /// Index of the tet on these vertices, or -1.
  int findTet(std::array<int, 4> t) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 4>> tets_;  // each sorted
  std::vector<std::vector<int>> neighbours_;
  std::vector<std::vector<int>> star_;
  std::unordered_map<std::array<int, 3>, std::vector<int>, ArrayHash> triangles_;
  std::unordered_map<std::array<int, 4>, int, ArrayHash> tetIndex_;
  std::size_t edgeCount_ = 0;
  bool manifold_ = true;
};

/// TetGen .node/.ele pair. The index base (0 or 1) is taken from the first
/// node record.
TetMesh readTetgen(std::istream& node, std::istream& ele, const std::string& name = "tetgen");
/// ASCII MEDIT: Vertices and Tetrahedra sections, 1-based; other standard
/// sections are skipped.
TetMesh readMedit(std::istream& in, const std::string& name = "medit");
/// By extension: .mesh, or either file of a .node/.ele pair.
TetMesh loadMesh(const std::string& path);

void writeMedit(std::ostream& out, const TetMesh& m);
void writeTetgen(std::ostream& node, std::ostream& ele, const TetMesh& m);

struct HexOccurrence {
  /// Mesh vertex for template labels 1..8.
  std::array<int, 8> corners{};
  /// Mesh tets filling the hexahedron, sorted.
  std::vector<int> tets;
  std::string classId;
  int tetCount = 0;
  /// The tets in template labels.
  Triangulation triangulation;
  bool validityProxy = false;

  /// Sorted corner indices.
  std::array<int, 8> vertexKey() const;
};

/// All sub-configurations of tets forming a combinatorial hexahedron: corners
/// grown from each vertex as label 1 through edge neighbours as 2, 4, 5 and
/// common neighbours as 3, 6, 8, 7; every facet has a diagonal whose two
/// triangles are mesh triangles; the tets enclosed by the 12 boundary
/// triangles form a catalog triangulation. One occurrence per (vertex set,
/// tet set), with the lexicographically smallest corner map, sorted by
/// vertex key.
std::vector<HexOccurrence> findHexahedra(const TetMesh& m, const Catalog& c, int workers = 1);

/// Trilinear proxy (corner Jacobians and a 5x5x5 sample grid strictly
/// positive). A mirrored corner map is evaluated in the orientation that
/// makes the first corner Jacobian positive.
bool validityProxy(const HexOccurrence& occ, const TetMesh& m);

class UnknownPattern : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OccurrenceTable {
  std::map<std::string, int> perClass;
  std::map<int, int> occurrencesPerTets;
  /// Distinct classes per tet count (the pattern rows of the tables).
  std::map<int, int> patternsPerTets;
  int total = 0;
  int patterns = 0;
};

/// Throws UnknownPattern when an occurrence's triangulation is not in the
/// catalog. validOnly keeps occurrences passing the validity proxy.
OccurrenceTable classifyOccurrences(const std::vector<HexOccurrence>& occ, const Catalog& c, bool validOnly = false);

/// "mesh,vertices,5,...,15,total" header and one row of pattern counts.
std::string occurrenceCsvHeader();
std::string occurrenceCsvRow(const std::string& mesh, int vertices, const OccurrenceTable& t);

nlohmann::ordered_json toJson(const HexOccurrence& occ);

/// Synthetic meshes.
///
/// The realizations side by side along x, each translated clear of the
/// previous ones (no shared vertices).
TetMesh disjointHexMesh(const std::vector<Realization>& rs);
/// A perturbed grid of nx x ny x nz cubes. Each cube gets a random
/// triangulation compatible with the unit cube whose facet diagonals agree
/// with the cubes already placed (cubes with no such choice are left empty).
/// `jitter` moves interior grid vertices.
TetMesh cubeGridMesh(int nx, int ny, int nz, std::mt19937_64& rng, double jitter = 0.0);
/// Same mesh with vertex indices permuted.
TetMesh permuteVertices(const TetMesh& m, const std::vector<int>& perm);
/// Mesh with a random subset of tets removed (each kept with probability keep).
TetMesh dropTets(const TetMesh& m, double keep, std::mt19937_64& rng);

}  // namespace hextet
