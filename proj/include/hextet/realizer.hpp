#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hextet/catalog.hpp"
#include "hextet/chirotope.hpp"
#include "hextet/final_polynomial.hpp"
#include "hextet/geometry.hpp"

namespace hextet {

struct RealizeOptions {
  int restarts = 64;
  int iterations = 10000;
  double epsilon = 1e-4;
  std::uint64_t seed = 1;
  long long maxDenominator = 1000000;
};

/// Exact coordinates whose orientation signs reproduce a chirotope, or
/// nullopt when the budget is exhausted (not a proof of anything).
///
/// Points 1, 2, 3, 5 are pinned to (0,0,0), (1,0,0), (1,1,0), (0,0,+-1);
/// the other twelve coordinates minimise sum max(0, eps - chi(b) det(b))^2
/// by multi-start gradient descent. Candidates are rounded to continued
/// fraction convergents and accepted only after an exact check.
std::optional<ExactConfig> realize(const Chirotope& chi, const RealizeOptions& opts = {});

struct RealizeAttempt {
  std::optional<ExactConfig> exact;
  /// Lowest-penalty configuration seen (the solution when exact is set).
  HexCorners best{};
  double penalty = 0;
};
RealizeAttempt realizeDetailed(const Chirotope& chi, const RealizeOptions& opts = {});

/// Nearest rational with denominator at most maxDen (best approximation).
mpq_class rationalize(double x, long long maxDen);

struct Realization {
  std::string classId;
  Triangulation triangulation;
  Chirotope chirotope;
  ExactConfig points;
};

struct VerifyReport {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Exact check of a realization: every orientation sign matches the target
/// chirotope (none zero), the target is admissible for the triangulation
/// (tets positively oriented, no improper intersection by the circuit
/// criterion), and the tets fill exactly the volume enclosed by the boundary
/// triangles.
VerifyReport verifyRealization(const Realization& r);

/// Every point is a vertex of the convex hull (exact).
bool inConvexPosition(const ExactConfig& p);

/// Mirror image (z -> -z), which realizes the negated chirotope.
ExactConfig mirrored(const ExactConfig& p);

nlohmann::ordered_json toJson(const Realization& r);
Realization realizationFromJson(const nlohmann::json& j);
/// ASCII MEDIT mesh with the 8 vertices (as doubles) and the tets.
void writeMedit(std::ostream& out, const Realization& r);

enum class Verdict { Realized, SatInfeasible, Certificate, Undecided };
std::string toString(Verdict v);

struct PipelineOptions {
  RealizeOptions realize;
  /// Chirotopes tried per class before giving up as undecided.
  std::size_t maxChirotopes = 5000;
  /// SAT conflict budget per solver call (0 = unlimited).
  std::uint64_t conflictBudget = 0;
  /// First look for a realization whose boundary triangles are convex hull
  /// facets (see addHullConstraints), trying at most hullChirotopes
  /// chirotopes, before the plain search. Verdicts come from the plain search.
  bool hullFirst = false;
  std::size_t hullChirotopes = 200;
};

struct ClassResult {
  std::string classId;
  bool convex = false;
  Verdict verdict = Verdict::Undecided;
  std::optional<Realization> realization;
  /// Certificates for chirotopes ruled out before a realization was found.
  std::vector<FinalPolynomialCertificate> certificates;
  std::size_t chirotopesTried = 0;
  bool chirotopesExhausted = false;
};

/// Streams admissible chirotopes of the class (convex variant optional);
/// chirotopes with a final polynomial are skipped, the rest are handed to
/// realize(). Realized on the first success; SatInfeasible when there is no
/// admissible chirotope; Certificate when every admissible chirotope has a
/// final polynomial; Undecided otherwise.
ClassResult realizeClass(const CatalogEntry& e, bool convex, const PipelineOptions& opts = {});

/// Convex-position variant of realizeClass.
ClassResult realizeConvex(const CatalogEntry& e, const PipelineOptions& opts = {});

/// realizeClass over the whole catalog, `workers` threads, results in
/// catalog order. Each class gets a seed derived from opts.realize.seed and
/// its position, so results do not depend on the worker count.
std::vector<ClassResult> realizeCatalog(const Catalog& c, bool convex, const PipelineOptions& opts = {},
                                        int workers = 1);

nlohmann::ordered_json toJson(const ClassResult& r);

}  // namespace hextet
