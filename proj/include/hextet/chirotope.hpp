#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hextet/combinatorics.hpp"
#include "hextet/hex_template.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

/// Rank-4 chirotope on the labels 1..8: one sign per sorted basis, extended
/// to unsorted tuples by the alternating rule. Signs are -1, 0 or +1; the
/// oriented matroids of interest are uniform (never 0), but exact
/// chirotopes of degenerate point sets such as the cube are representable.
class Chirotope {
 public:
  Chirotope() { signs_.fill(1); }
  explicit Chirotope(const std::array<std::int8_t, kNumBases>& signs) : signs_(signs) {}
  /// Parses a 70-character string of '+', '-' (and '0') in basis order.
  static Chirotope parse(std::string_view text);

  int operator[](int basis) const { return signs_[basis]; }
  int sign(VertexMask basis) const { return signs_[kBases.index(basis)]; }
  /// Alternating evaluation on an ordered tuple (0 when labels repeat).
  int operator()(const std::array<Label, 4>& tuple) const;
  void set(int basis, int s) { signs_[basis] = static_cast<std::int8_t>(s); }

  bool uniform() const;
  Chirotope negated() const;
  /// Chirotope of the configuration whose point g(l) is the old point l.
  Chirotope relabel(const Permutation& g) const;
  std::string toString() const;
  const std::array<std::int8_t, kNumBases>& signs() const { return signs_; }

  friend bool operator==(const Chirotope&, const Chirotope&) = default;
  friend auto operator<=>(const Chirotope&, const Chirotope&) = default;

 private:
  std::array<std::int8_t, kNumBases> signs_;
};

/// Signed circuit of a 5-subset: labels with positive and negative
/// coefficient in the affine dependency.
struct Circuit {
  VertexMask positive = 0;
  VertexMask negative = 0;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Raw coefficients (-1)^i chi(Z \ z_i), i = 1..5 over the sorted subset Z.
std::array<int, 5> circuitSigns(const Chirotope& chi, VertexMask five);

/// Circuit of a 5-subset, normalised so that the smallest label of its
/// support is positive.
Circuit computeCircuit(const Chirotope& chi, VertexMask five);

struct ChirotopeCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Three-term exchange relations and acyclicity.
ChirotopeCheck checkChirotope(const Chirotope& chi);

/// Orientation sign per tet (in triangulation order) such that neighbouring
/// tets induce opposite orientations on their common triangle, with the first
/// tet positive. Throws InvalidTriangulation when no coherent orientation exists.
std::vector<int> coherentOrientation(const Triangulation& t);

/// First tet pair (in either order) admitting a circuit with X+ in one tet
/// and X- in the other, described for error messages.
std::optional<std::string> improperIntersection(const Chirotope& chi, const Triangulation& t);

/// Post-hoc check of the constraints an admissible chirotope must satisfy
/// for triangulation t: uniform, exchange, acyclic, every tet positively
/// oriented, no circuit (X+, X-) with X+ in one tet and X- in another, and,
/// when `convex`, no circuit with a single-element side.
/// Returns a description of the first violation.
std::optional<std::string> admissibilityViolation(const Chirotope& chi, const Triangulation& t, bool convex);

/// Like admissibilityViolation without uniformity, for exact chirotopes of
/// degenerate point sets; accepts either global orientation of t.
bool compatibleWith(const Chirotope& chi, const Triangulation& t);

}  // namespace hextet
