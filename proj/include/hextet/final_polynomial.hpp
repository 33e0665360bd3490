#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "hextet/chirotope.hpp"

namespace hextet {

/// Exact phase-one simplex: a point y >= 0 with M y = b, or nullopt when
/// none exists. Dense tableau over rationals, Bland's rule.
std::optional<std::vector<mpq_class>> findFeasiblePoint(const std::vector<std::vector<mpq_class>>& m,
                                                        const std::vector<mpq_class>& b);

/// One bi-quadratic consequence of a three-term exchange relation
///   [ab e1 e2][ab e3 e4] - [ab e1 e3][ab e2 e4] + [ab e1 e4][ab e2 e3] = 0.
/// When one term has the opposite sign of the other two, its absolute value
/// exceeds each of theirs; in log-bracket variables
///   x(dominant pair) - x(dominated pair) > 0.
struct LogInequality {
  std::array<Label, 6> relation{};  // a, b, e1, e2, e3, e4
  int dominant = 0;                 // term index 0..2
  int dominated = 0;

  /// The two bases of term k of the relation.
  std::array<VertexMask, 2> termBases(int k) const;
  /// Coefficients over the 70 log-bracket variables.
  std::array<int, kNumBases> coefficients() const;
};

/// Nonnegative multipliers, summing to one, under which the log
/// inequalities cancel to 0 > 0.
struct FinalPolynomialCertificate {
  Chirotope chirotope;
  std::vector<LogInequality> rows;
  std::vector<mpq_class> multipliers;
};

/// All log inequalities implied by the signs of a uniform chirotope.
std::vector<LogInequality> logInequalities(const Chirotope& chi);

/// Certificate of non-realizability, or nullopt when the linear program is
/// feasible (realizability undecided by this method).
std::optional<FinalPolynomialCertificate> findFinalPolynomial(const Chirotope& chi);

/// Exact re-check: each row follows from the chirotope's signs, multipliers
/// are nonnegative and sum to one, and the weighted rows cancel.
bool verifyCertificate(const FinalPolynomialCertificate& cert, std::string* reason = nullptr);

nlohmann::ordered_json toJson(const FinalPolynomialCertificate& cert);
FinalPolynomialCertificate certificateFromJson(const nlohmann::json& j);

}  // namespace hextet
