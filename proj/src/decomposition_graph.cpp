#include "hextet/decomposition_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hextet {

int DecompGraph::degree(int node) const {
  int d = 0;
  for (auto [a, b] : black) d += (a == node) + (b == node);
  for (auto [a, b] : grey) d += (a == node) + (b == node);
  return d;
}

DecompGraph decompositionGraph(const Triangulation& t, const BoundaryTriangulation& b) {
  const auto& tets = t.tets();
  const int n = static_cast<int>(tets.size());
  DecompGraph g;
  g.nodes = n;
  std::vector<int> faces(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (popcount(tets[i] & tets[j]) == 3) {
        g.black.emplace_back(i, j);
        ++faces[i];
        ++faces[j];
      }

  const auto tris = b.triangles();
  for (int f = 0; f < 6; ++f) {
    std::array<int, 2> carrier{-1, -1};
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < n; ++i)
        if ((tets[i] & tris[2 * f + k]) == tris[2 * f + k]) {
          if (carrier[k] >= 0) throw DecompGraphError("boundary triangle " + maskString(tris[2 * f + k]) + " in two tets");
          carrier[k] = i;
        }
    if (carrier[0] < 0 || carrier[1] < 0)
      throw DecompGraphError("facet " + maskString(HexTemplate::facets()[f].mask()) + " not covered");
    ++faces[carrier[0]];
    ++faces[carrier[1]];
    g.grey.emplace_back(std::min(carrier[0], carrier[1]), std::max(carrier[0], carrier[1]));
  }
  for (int i = 0; i < n; ++i)
    if (faces[i] != 4)
      throw DecompGraphError("tet " + maskString(tets[i]) + " accounts for " + std::to_string(faces[i]) + " faces");
  std::sort(g.grey.begin(), g.grey.end());
  return g;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const DecompGraph& g) {
  Matrix w(g.nodes, std::vector<int>(g.nodes, 0));
  for (auto [a, b] : g.black) {
    w[a][b] += 1;
    w[b][a] += 1;
  }
  for (auto [a, b] : g.grey) {
    w[a][b] += 4;
    w[b][a] += 4;
  }
  return w;
}

// Colours are ranks 0..k-1 of an ordered partition. Refinement splits each
// cell by the multiset of (weight, neighbour colour); new ranks are assigned
// by sorting (old colour, signature), which is isomorphism-invariant.
std::vector<int> refine(const Matrix& w, std::vector<int> colour) {
  const int n = static_cast<int>(colour.size());
  while (true) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int u = 0; u < n; ++u)
        if (w[v][u]) sig[v].second.emplace_back(w[v][u], colour[u]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n);
    int rank = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++rank;
      next[idx[k]] = rank;
    }
    std::vector<int> distinct(colour);
    std::sort(distinct.begin(), distinct.end());
    const auto before = std::unique(distinct.begin(), distinct.end()) - distinct.begin();
    if (rank + 1 == before) return next;
    colour = std::move(next);
  }
}

void search(const Matrix& w, const std::vector<int>& colourIn, std::vector<int>& best) {
  const int n = static_cast<int>(colourIn.size());
  std::vector<int> colour = refine(w, colourIn);
  std::vector<int> cellSize(n, 0);
  for (int c : colour) ++cellSize[c];

  int target = -1;
  for (int c = 0; c < n; ++c)
    if (cellSize[c] > 1 && (target < 0 || cellSize[c] < cellSize[target])) target = c;

  if (target < 0) {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[colour[v]] = v;
    std::vector<int> cert;
    cert.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cert.push_back(w[order[i]][order[j]]);
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }

  for (int v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    // Individualise v: it keeps rank `target`, the rest of its cell moves up.
    std::vector<int> ind(n);
    for (int u = 0; u < n; ++u) ind[u] = 2 * colour[u] + (colour[u] == target && u != v ? 1 : 0);
    search(w, ind, best);
  }
}

}  // namespace

std::vector<int> canonicalCertificate(const DecompGraph& g) {
  std::vector<int> best;
  if (g.nodes == 0) return best;
  search(adjacency(g), std::vector<int>(g.nodes, 0), best);
  best.insert(best.begin(), g.nodes);
  return best;
}

bool graphIsomorphic(const DecompGraph& a, const DecompGraph& b) {
  if (a.nodes != b.nodes || a.black.size() != b.black.size() || a.grey.size() != b.grey.size()) return false;
  return canonicalCertificate(a) == canonicalCertificate(b);
}

}  // namespace hextet
