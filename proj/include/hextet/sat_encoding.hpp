#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hextet/chirotope.hpp"
#include "hextet/sat_solver.hpp"
#include "hextet/triangulation.hpp"

namespace hextet {

/// CNF whose models, restricted to variables 1..70, are the admissible
/// chirotopes of a triangulation. Variable b+1 is true iff chi(basis b) = +1.
///
/// Clause shapes:
///  - exchange: for each relation, aux z_AB <-> (x_A <-> x_B) (4 clauses per
///    product); the three product literals are then neither all true nor all
///    false (2 clauses);
///  - acyclicity: 2 clauses per 5-subset forbidding the all-positive and
///    all-negative circuit;
///  - tets: one unit clause per tet fixing its coherent orientation;
///  - intersection: one clause per forbidden circuit sign vector on a 5-subset
///    of a tet pair's vertices;
///  - convex: 10 clauses per 5-subset forbidding circuits with a singleton side.
struct SatInstance {
  Triangulation triangulation;
  bool convex = false;
  std::vector<int> orientation;
  sat::Cnf cnf;
  /// (aux variable, basis A, basis B) with aux <-> (x_A <-> x_B).
  std::vector<std::array<int, 3>> auxDefs;

  static int basisVar(int basis) { return basis + 1; }
  std::string dimacs() const;
  /// Sidecar mapping variable indices to bases: {"1": "1234", ...}.
  nlohmann::ordered_json variableMap() const;
  Chirotope chirotopeFromModel(const sat::Solver& s) const;
};

SatInstance encodeConstraints(const Triangulation& t, bool convex);

/// Adds unit clauses making every boundary triangle a facet of the convex
/// hull: all points off the triangle lie on the side of its tet's apex.
/// Models then realize triangulations whose union is the convex hull.
void addHullConstraints(SatInstance& inst);

/// Raised when the conflict budget runs out; carries what was found so far.
class SatResourceLimit : public std::runtime_error {
 public:
  SatResourceLimit(std::vector<Chirotope> partial)
      : std::runtime_error("SAT conflict budget exhausted"), partial_(std::move(partial)) {}
  const std::vector<Chirotope>& partial() const { return partial_; }

 private:
  std::vector<Chirotope> partial_;
};

/// Solve, block, repeat. Yields chirotopes one at a time.
class ChirotopeStream {
 public:
  explicit ChirotopeStream(const SatInstance& inst, std::uint64_t seed = 0, std::uint64_t conflictBudget = 0);
  /// Next admissible chirotope, or nullopt once exhausted. Throws
  /// SatResourceLimit when the budget runs out.
  std::optional<Chirotope> next();
  /// Steers the next search towards `chi` through the solver's phases.
  void hint(const Chirotope& chi);
  std::size_t produced() const { return found_.size(); }

 private:
  const SatInstance& inst_;
  sat::Solver solver_;
  std::uint64_t budget_;
  bool done_ = false;
  std::vector<Chirotope> found_;
};

/// Up to `limit` chirotopes (limit >= 1). Empty iff unsatisfiable when limit
/// is not reached.
std::vector<Chirotope> solveAll(const SatInstance& inst, std::size_t limit, std::uint64_t seed = 0,
                                std::uint64_t conflictBudget = 0);

bool satisfiable(const SatInstance& inst);

/// Every model of the instance respects these clauses; used to check that a
/// chirotope satisfies the instance without running the solver.
bool satisfiesInstance(const Chirotope& chi, const SatInstance& inst);

}  // namespace hextet
