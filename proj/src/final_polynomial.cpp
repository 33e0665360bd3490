#include "hextet/final_polynomial.hpp"

#include <set>
#include <stdexcept>

namespace hextet {

std::optional<std::vector<mpq_class>> findFeasiblePoint(const std::vector<std::vector<mpq_class>>& m,
                                                        const std::vector<mpq_class>& b) {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw std::invalid_argument("findFeasiblePoint: size mismatch");
  const std::size_t n = rows ? m[0].size() : 0;
  const std::size_t cols = n + rows;  // original + artificial

  // Tableau rows with rhs in the last column; rows with negative rhs are negated.
  std::vector<std::vector<mpq_class>> tab(rows, std::vector<mpq_class>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("findFeasiblePoint: ragged matrix");
    const int s = sgn(b[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = s * m[i][j];
    tab[i][n + i] = 1;
    tab[i][cols] = s * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimise the sum of artificials".
  std::vector<mpq_class> cost(cols + 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < n || j == cols) cost[j] -= tab[i][j];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      mpq_class ratio = tab[i][cols] / tab[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one
    const mpq_class piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      const mpq_class f = tab[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(tab[leave][j]) != 0) tab[i][j] -= f * tab[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(tab[leave][j]) != 0) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[cols]) != 0) return std::nullopt;  // artificials cannot reach zero
  std::vector<mpq_class> y(n);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) y[basis[i]] = tab[i][cols];
  return y;
}

std::array<VertexMask, 2> LogInequality::termBases(int k) const {
  const auto& r = relation;
  const VertexMask ab = static_cast<VertexMask>(bitOf(r[0]) | bitOf(r[1]));
  auto m = [&](Label x, Label y) { return static_cast<VertexMask>(ab | bitOf(x) | bitOf(y)); };
  switch (k) {
    case 0: return {m(r[2], r[3]), m(r[4], r[5])};
    case 1: return {m(r[2], r[4]), m(r[3], r[5])};
    default: return {m(r[2], r[5]), m(r[3], r[4])};
  }
}

std::array<int, kNumBases> LogInequality::coefficients() const {
  std::array<int, kNumBases> c{};
  for (VertexMask b : termBases(dominant)) ++c[kBases.index(b)];
  for (VertexMask b : termBases(dominated)) --c[kBases.index(b)];
  return c;
}

namespace {

// Signs of the three terms with the relation's alternating coefficient.
std::array<int, 3> termSigns(const Chirotope& chi, const std::array<Label, 6>& r) {
  const Label a = r[0], b = r[1], e1 = r[2], e2 = r[3], e3 = r[4], e4 = r[5];
  return {chi({a, b, e1, e2}) * chi({a, b, e3, e4}), -chi({a, b, e1, e3}) * chi({a, b, e2, e4}),
          chi({a, b, e1, e4}) * chi({a, b, e2, e3})};
}

// The term whose sign differs from the other two, or -1.
int loneTerm(const std::array<int, 3>& s) {
  for (int k = 0; k < 3; ++k)
    if (s[k] != 0 && s[k] != s[(k + 1) % 3] && s[k] != s[(k + 2) % 3] && s[(k + 1) % 3] == s[(k + 2) % 3])
      return k;
  return -1;
}

// Relaxation method for A x >= 1. A point found here, checked exactly, shows
// that no certificate exists without running the exact simplex.
bool primalSolution(const std::vector<LogInequality>& rows) {
  std::vector<std::array<int, kNumBases>> a;
  for (const auto& q : rows) a.push_back(q.coefficients());
  std::array<double, kNumBases> x{};
  for (int sweep = 0; sweep < 2000; ++sweep) {
    bool all = true;
    for (const auto& r : a) {
      double ax = 0, norm = 0;
      for (int v = 0; v < kNumBases; ++v)
        if (r[v]) {
          ax += r[v] * x[v];
          norm += r[v] * r[v];
        }
      if (ax >= 1) continue;
      all = false;
      const double t = (1.5 - ax) / norm;
      for (int v = 0; v < kNumBases; ++v)
        if (r[v]) x[v] += t * r[v];
    }
    if (all) break;
  }
  for (const auto& r : a) {
    mpq_class ax = 0;
    for (int v = 0; v < kNumBases; ++v)
      if (r[v]) ax += r[v] * mpq_class(x[v]);
    if (sgn(ax) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<LogInequality> logInequalities(const Chirotope& chi) {
  std::vector<LogInequality> out;
  std::set<std::array<int, kNumBases>> seen;
  for (Label a = 1; a <= 8; ++a)
    for (Label b = a + 1; b <= 8; ++b) {
      std::vector<Label> rest;
      for (Label l = 1; l <= 8; ++l)
        if (l != a && l != b) rest.push_back(l);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int k = j + 1; k < 6; ++k)
            for (int m = k + 1; m < 6; ++m) {
              const std::array<Label, 6> r{a, b, rest[i], rest[j], rest[k], rest[m]};
              const int lone = loneTerm(termSigns(chi, r));
              if (lone < 0) continue;
              for (int other = 0; other < 3; ++other) {
                if (other == lone) continue;
                LogInequality q{r, lone, other};
                if (seen.insert(q.coefficients()).second) out.push_back(q);
              }
            }
    }
  return out;
}

std::optional<FinalPolynomialCertificate> findFinalPolynomial(const Chirotope& chi) {
  if (!chi.uniform()) throw std::invalid_argument("findFinalPolynomial: chirotope must be uniform");
  const auto rows = logInequalities(chi);
  if (primalSolution(rows)) return std::nullopt;
  // Farkas: A x > 0 is infeasible iff y >= 0, A^T y = 0, sum y = 1 has a solution.
  std::vector<std::vector<mpq_class>> m(kNumBases + 1, std::vector<mpq_class>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto c = rows[r].coefficients();
    for (int v = 0; v < kNumBases; ++v) m[v][r] = c[v];
    m[kNumBases][r] = 1;
  }
  std::vector<mpq_class> rhs(kNumBases + 1);
  rhs[kNumBases] = 1;
  auto y = findFeasiblePoint(m, rhs);
  if (!y) return std::nullopt;
  FinalPolynomialCertificate cert;
  cert.chirotope = chi;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (sgn((*y)[r]) != 0) {
      cert.rows.push_back(rows[r]);
      cert.multipliers.push_back((*y)[r]);
    }
  return cert;
}

bool verifyCertificate(const FinalPolynomialCertificate& cert, std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (!cert.chirotope.uniform()) return fail("chirotope is not uniform");
  if (cert.rows.size() != cert.multipliers.size()) return fail("row and multiplier counts differ");
  if (cert.rows.empty()) return fail("empty certificate");
  std::array<mpq_class, kNumBases> sum;
  mpq_class total = 0;
  for (std::size_t i = 0; i < cert.rows.size(); ++i) {
    const auto& q = cert.rows[i];
    std::set<Label> distinct(q.relation.begin(), q.relation.end());
    if (distinct.size() != 6 || *distinct.begin() < 1 || *distinct.rbegin() > 8)
      return fail("row " + std::to_string(i) + ": malformed relation");
    if (q.dominant < 0 || q.dominant > 2 || q.dominated < 0 || q.dominated > 2 || q.dominant == q.dominated)
      return fail("row " + std::to_string(i) + ": bad term indices");
    if (loneTerm(termSigns(cert.chirotope, q.relation)) != q.dominant)
      return fail("row " + std::to_string(i) + ": not implied by the chirotope");
    if (sgn(cert.multipliers[i]) < 0) return fail("row " + std::to_string(i) + ": negative multiplier");
    total += cert.multipliers[i];
    const auto c = q.coefficients();
    for (int v = 0; v < kNumBases; ++v)
      if (c[v]) sum[v] += cert.multipliers[i] * c[v];
  }
  if (total != 1) return fail("multipliers do not sum to one");
  for (int v = 0; v < kNumBases; ++v)
    if (sgn(sum[v]) != 0) return fail("combination does not cancel at basis " + maskString(kBases.mask(v)));
  return true;
}

nlohmann::ordered_json toJson(const FinalPolynomialCertificate& cert) {
  nlohmann::ordered_json j;
  j["chirotope"] = cert.chirotope.toString();
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < cert.rows.size(); ++i) {
    const auto& q = cert.rows[i];
    rows.push_back({{"relation", q.relation},
                    {"dominant", q.dominant},
                    {"dominated", q.dominated},
                    {"multiplier", cert.multipliers[i].get_str()}});
  }
  return j;
}

FinalPolynomialCertificate certificateFromJson(const nlohmann::json& j) {
  FinalPolynomialCertificate cert;
  cert.chirotope = Chirotope::parse(j.at("chirotope").get<std::string>());
  for (const auto& r : j.at("rows")) {
    LogInequality q;
    q.relation = r.at("relation").get<std::array<Label, 6>>();
    q.dominant = r.at("dominant").get<int>();
    q.dominated = r.at("dominated").get<int>();
    cert.rows.push_back(q);
    mpq_class y(r.at("multiplier").get<std::string>());
    y.canonicalize();
    cert.multipliers.push_back(y);
  }
  return cert;
}

}  // namespace hextet
