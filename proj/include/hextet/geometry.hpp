#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hextet/chirotope.hpp"
#include "hextet/combinatorics.hpp"

namespace hextet {

struct ExactPoint {
  mpq_class x, y, z;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
};

/// Points indexed by label - 1.
using ExactConfig = std::array<ExactPoint, kNumVertices>;

class DegenerateConfiguration : public std::invalid_argument {
 public:
  explicit DegenerateConfiguration(VertexMask quad)
      : std::invalid_argument("points " + maskString(quad) + " are coplanar"), quad_(quad) {}
  VertexMask quadruple() const { return quad_; }

 private:
  VertexMask quad_;
};

/// det(b - a, c - a, d - a), equal to the 4x4 homogeneous determinant with
/// rows (1, p).
mpq_class orientation(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c, const ExactPoint& d);
mpq_class orientation(const ExactConfig& p, VertexMask basis);

/// Exact sign of every basis. Throws DegenerateConfiguration on the first
/// coplanar quadruple.
Chirotope chirotopeOfPoints(const ExactConfig& p);
/// Same, recording zero for coplanar quadruples.
Chirotope chirotopeOfPointsAllowDegenerate(const ExactConfig& p);

/// Corners of the unit cube in template labelling.
ExactConfig unitCube();

mpq_class tetVolume(const ExactConfig& p, VertexMask tet);
mpq_class totalVolume(const ExactConfig& p, const std::vector<VertexMask>& tets);

/// Volume of the convex hull, from the hull facets implied by the (uniform)
/// chirotope of the points: a triple is a facet when all other points lie on
/// one side. Each facet is coned to the centroid.
mpq_class hullVolume(const ExactConfig& p);

/// Volume enclosed by a closed, consistently orientable triangle surface,
/// by the divergence theorem. Throws std::invalid_argument when the
/// triangles are not a closed orientable surface.
mpq_class enclosedVolume(const ExactConfig& p, const std::vector<VertexMask>& triangles);

/// Applies x -> A x + t.
ExactConfig applyAffine(const ExactConfig& p, const std::array<std::array<mpq_class, 3>, 3>& a,
                        const std::array<mpq_class, 3>& t);

using Vec3 = std::array<double, 3>;
using HexCorners = std::array<Vec3, kNumVertices>;

HexCorners toDouble(const ExactConfig& p);

/// Jacobian determinant of the trilinear map of the reference cube onto the
/// corners, at parameter (u, v, w) in [0,1]^3.
double trilinearJacobian(const HexCorners& c, double u, double v, double w);
/// The Jacobian at the 8 corners, in label order.
std::array<double, kNumVertices> cornerJacobians(const HexCorners& c);
/// Proxy for a valid hexahedron: all corner Jacobians and an n x n x n
/// sample grid of the Jacobian strictly positive. Weaker than an exact
/// Bezier-bound test.
bool trilinearValidityProxy(const HexCorners& c, int samples = 5);

}  // namespace hextet
