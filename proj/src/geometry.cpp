#include "hextet/geometry.hpp"

#include <deque>
#include <map>

namespace hextet {

namespace {

const ExactPoint& at(const ExactConfig& p, Label l) { return p[l - 1]; }

mpq_class det3(const mpq_class& a1, const mpq_class& a2, const mpq_class& a3, const mpq_class& b1,
               const mpq_class& b2, const mpq_class& b3, const mpq_class& c1, const mpq_class& c2,
               const mpq_class& c3) {
  return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1);
}

int signOf(const mpq_class& v) { return sgn(v) > 0 ? 1 : sgn(v) < 0 ? -1 : 0; }

}  // namespace

mpq_class orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c, const ExactPoint& d) {
  return det3(b.x - a.x, b.y - a.y, b.z - a.z, c.x - a.x, c.y - a.y, c.z - a.z, d.x - a.x, d.y - a.y,
              d.z - a.z);
}

mpq_class orientation(const ExactConfig& p, VertexMask basis) {
  const auto l = sortedLabels<4>(basis);
  return orientation(at(p, l[0]), at(p, l[1]), at(p, l[2]), at(p, l[3]));
}

Chirotope chirotopeOfPointsAllowDegenerate(const ExactConfig& p) {
  Chirotope chi;
  for (int b = 0; b < kNumBases; ++b) chi.set(b, signOf(orientation(p, kBases.mask(b))));
  return chi;
}

Chirotope chirotopeOfPoints(const ExactConfig& p) {
  Chirotope chi = chirotopeOfPointsAllowDegenerate(p);
  for (int b = 0; b < kNumBases; ++b)
    if (chi[b] == 0) throw DegenerateConfiguration(kBases.mask(b));
  return chi;
}

ExactConfig unitCube() {
  static const int c[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                              {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  ExactConfig p;
  for (int i = 0; i < 8; ++i) p[i] = {c[i][0], c[i][1], c[i][2]};
  return p;
}

mpq_class tetVolume(const ExactConfig& p, VertexMask tet) { return abs(orientation(p, tet)) / 6; }

mpq_class totalVolume(const ExactConfig& p, const std::vector<VertexMask>& tets) {
  mpq_class v = 0;
  for (VertexMask t : tets) v += tetVolume(p, t);
  return v;
}

mpq_class hullVolume(const ExactConfig& p) {
  ExactPoint centroid{0, 0, 0};
  for (const auto& q : p) {
    centroid.x += q.x;
    centroid.y += q.y;
    centroid.z += q.z;
  }
  centroid.x /= 8;
  centroid.y /= 8;
  centroid.z /= 8;
  mpq_class v = 0;
  for (int ti = 0; ti < kNumTriangles; ++ti) {
    const VertexMask tri = kTriangles.mask(ti);
    const auto l = sortedLabels<3>(tri);
    bool pos = false, neg = false;
    for (Label o = 1; o <= 8; ++o) {
      if (tri & bitOf(o)) continue;
      const int s = signOf(orientation(at(p, l[0]), at(p, l[1]), at(p, l[2]), at(p, o)));
      if (s == 0) throw DegenerateConfiguration(static_cast<VertexMask>(tri | bitOf(o)));
      (s > 0 ? pos : neg) = true;
    }
    if (pos && neg) continue;
    v += abs(orientation(at(p, l[0]), at(p, l[1]), at(p, l[2]), centroid)) / 6;
  }
  return v;
}

mpq_class enclosedVolume(const ExactConfig& p, const std::vector<VertexMask>& triangles) {
  using Edge = std::pair<Label, Label>;
  std::map<Edge, std::vector<int>> byEdge;
  for (int i = 0; i < static_cast<int>(triangles.size()); ++i) {
    if (popcount(triangles[i]) != 3) throw std::invalid_argument("enclosedVolume: not a triangle");
    const auto l = sortedLabels<3>(triangles[i]);
    byEdge[{l[0], l[1]}].push_back(i);
    byEdge[{l[0], l[2]}].push_back(i);
    byEdge[{l[1], l[2]}].push_back(i);
  }
  for (const auto& [e, ts] : byEdge)
    if (ts.size() != 2) throw std::invalid_argument("enclosedVolume: surface is not closed");

  // Orient by BFS: a neighbour must traverse the shared edge backwards.
  std::vector<std::array<Label, 3>> oriented(triangles.size());
  std::vector<bool> done(triangles.size(), false);
  auto hasDirected = [](const std::array<Label, 3>& t, Label a, Label b) {
    for (int k = 0; k < 3; ++k)
      if (t[k] == a && t[(k + 1) % 3] == b) return true;
    return false;
  };
  mpq_class v = 0;
  for (std::size_t start = 0; start < triangles.size(); ++start) {
    if (done[start]) continue;
    oriented[start] = sortedLabels<3>(triangles[start]);
    done[start] = true;
    std::deque<int> queue{static_cast<int>(start)};
    mpq_class component = 0;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      const auto& t = oriented[i];
      component += orientation(ExactPoint{0, 0, 0}, at(p, t[0]), at(p, t[1]), at(p, t[2]));
      for (int k = 0; k < 3; ++k) {
        const Label a = t[k], b = t[(k + 1) % 3];
        for (int j : byEdge[{std::min(a, b), std::max(a, b)}]) {
          if (j == i) continue;
          if (!done[j]) {
            auto s = sortedLabels<3>(triangles[j]);
            if (!hasDirected(s, b, a)) std::swap(s[0], s[1]);
            oriented[j] = s;
            done[j] = true;
            queue.push_back(j);
          } else if (!hasDirected(oriented[j], b, a)) {
            throw std::invalid_argument("enclosedVolume: surface is not orientable");
          }
        }
      }
    }
    v += abs(component) / 6;
  }
  return v;
}

ExactConfig applyAffine(const ExactConfig& p, const std::array<std::array<mpq_class, 3>, 3>& a,
                        const std::array<mpq_class, 3>& t) {
  ExactConfig out;
  for (int i = 0; i < 8; ++i) {
    const std::array<mpq_class, 3> v{p[i].x, p[i].y, p[i].z};
    std::array<mpq_class, 3> w;
    for (int r = 0; r < 3; ++r) w[r] = a[r][0] * v[0] + a[r][1] * v[1] + a[r][2] * v[2] + t[r];
    out[i] = {w[0], w[1], w[2]};
  }
  return out;
}

}  // namespace hextet

namespace hextet {

namespace {

constexpr int kCube[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

}  // namespace

HexCorners toDouble(const ExactConfig& p) {
  HexCorners c;
  for (int i = 0; i < 8; ++i) c[i] = {p[i].x.get_d(), p[i].y.get_d(), p[i].z.get_d()};
  return c;
}

double trilinearJacobian(const HexCorners& c, double u, double v, double w) {
  const double t[3] = {u, v, w};
  double d[3][3] = {};
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 3; ++k) {
      // d N_i / d t_k
      double g = kCube[i][k] ? 1.0 : -1.0;
      for (int m = 0; m < 3; ++m)
        if (m != k) g *= kCube[i][m] ? t[m] : 1.0 - t[m];
      for (int r = 0; r < 3; ++r) d[k][r] += g * c[i][r];
    }
  return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) - d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
}

std::array<double, kNumVertices> cornerJacobians(const HexCorners& c) {
  std::array<double, kNumVertices> out{};
  for (int i = 0; i < 8; ++i) out[i] = trilinearJacobian(c, kCube[i][0], kCube[i][1], kCube[i][2]);
  return out;
}

bool trilinearValidityProxy(const HexCorners& c, int samples) {
  for (double j : cornerJacobians(c))
    if (!(j > 0)) return false;
  for (int a = 0; a < samples; ++a)
    for (int b = 0; b < samples; ++b)
      for (int e = 0; e < samples; ++e) {
        const double n = samples > 1 ? samples - 1 : 1;
        if (!(trilinearJacobian(c, a / n, b / n, e / n) > 0)) return false;
      }
  return true;
}

}  // namespace hextet
