#include "hextet/realizer.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <thread>

#include "hextet/sat_encoding.hpp"

namespace hextet {

mpq_class rationalize(double x, long long maxDen) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite value");
  if (maxDen < 1) throw std::invalid_argument("rationalize: maxDen must be positive");
  mpq_class exact(x);  // doubles are dyadic rationals
  if (sgn(exact) < 0) return -rationalize(-x, maxDen);
  const mpz_class cap(static_cast<long>(maxDen));
  if (exact.get_den() <= cap) return exact;
  // Continued fraction convergents, then the better of the last convergent
  // and the best semiconvergent below the cap.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > cap) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(cap - q0).get_mpz_t(), q1.get_mpz_t());
  mpq_class bound1(p0 + k * p1, q0 + k * q1), bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  return abs(bound2 - exact) <= abs(bound1 - exact) ? bound2 : bound1;
}

namespace {

using P3 = std::array<double, 3>;

P3 sub(const P3& a, const P3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
P3 cross(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

constexpr int kFree[4] = {3, 5, 6, 7};  // labels 4, 6, 7, 8

struct BasisLabels {
  std::array<std::array<int, 4>, kNumBases> idx;
  BasisLabels() {
    for (int b = 0; b < kNumBases; ++b) {
      const auto l = sortedLabels<4>(kBases.mask(b));
      for (int k = 0; k < 4; ++k) idx[b][k] = l[k] - 1;
    }
  }
};
const BasisLabels kBasisLabels;

class Penalty {
 public:
  Penalty(const Chirotope& chi, double eps) : chi_(chi), eps_(eps) {}

  // Value and gradient with respect to all 8 points.
  // `wrong` receives the number of bases whose sign is not yet correct.
  double operator()(const std::array<P3, 8>& p, std::array<P3, 8>* grad, int* wrong = nullptr) const {
    if (grad)
      for (auto& g : *grad) g = {0, 0, 0};
    if (wrong) *wrong = 0;
    double f = 0;
    for (int b = 0; b < kNumBases; ++b) {
      const auto& i = kBasisLabels.idx[b];
      const P3 u = sub(p[i[1]], p[i[0]]), v = sub(p[i[2]], p[i[0]]), w = sub(p[i[3]], p[i[0]]);
      const P3 vw = cross(v, w);
      const double s = chi_[b] * dot(u, vw);
      if (s >= eps_) continue;
      if (wrong && s <= 0) ++*wrong;
      const double h = eps_ - s;
      f += h * h;
      if (!grad) continue;
      const double c = -2.0 * h * chi_[b];
      const P3 gb = vw, gc = cross(w, u), gd = cross(u, v);
      for (int k = 0; k < 3; ++k) {
        (*grad)[i[1]][k] += c * gb[k];
        (*grad)[i[2]][k] += c * gc[k];
        (*grad)[i[3]][k] += c * gd[k];
        (*grad)[i[0]][k] -= c * (gb[k] + gc[k] + gd[k]);
      }
    }
    return f;
  }

 private:
  const Chirotope& chi_;
  double eps_;
};

std::optional<ExactConfig> exactCandidate(const std::array<P3, 8>& p, const Chirotope& chi, long long maxDen) {
  for (long long cap = maxDen; cap <= maxDen * 1024; cap *= 2) {
    ExactConfig e;
    for (int i = 0; i < 8; ++i)
      e[i] = {rationalize(p[i][0], cap), rationalize(p[i][1], cap), rationalize(p[i][2], cap)};
    if (chirotopeOfPointsAllowDegenerate(e) == chi) return e;
  }
  return std::nullopt;
}

// Chirotope of the unit cube with random corner perturbations, oriented like
// the first tet of t. Used only to steer the SAT search.
Chirotope perturbedCubeHint(std::mt19937_64& rng, const Triangulation& t, int firstOrientation) {
  std::uniform_int_distribution<int> noise(-300, 300);
  while (true) {
    ExactConfig p = unitCube();
    for (auto& q : p) {
      q.x += mpq_class(noise(rng), 1000);
      q.y += mpq_class(noise(rng), 1000);
      q.z += mpq_class(noise(rng), 1000);
    }
    Chirotope chi = chirotopeOfPointsAllowDegenerate(p);
    if (!chi.uniform()) continue;
    return chi.sign(t.tets()[0]) == firstOrientation ? chi : chi.negated();
  }
}

std::optional<Chirotope> realizableNeighbour(const HexCorners& c, int firstOrientation, const Triangulation& t) {
  ExactConfig p;
  for (int i = 0; i < 8; ++i) {
    if (!std::isfinite(c[i][0]) || !std::isfinite(c[i][1]) || !std::isfinite(c[i][2])) return std::nullopt;
    p[i] = {mpq_class(c[i][0]), mpq_class(c[i][1]), mpq_class(c[i][2])};
  }
  Chirotope chi = chirotopeOfPointsAllowDegenerate(p);
  if (!chi.uniform()) return std::nullopt;
  return chi.sign(t.tets()[0]) == firstOrientation ? chi : chi.negated();
}

}  // namespace

std::optional<ExactConfig> realize(const Chirotope& chi, const RealizeOptions& opts) {
  return realizeDetailed(chi, opts).exact;
}

RealizeAttempt realizeDetailed(const Chirotope& chi, const RealizeOptions& opts) {
  if (!chi.uniform()) throw std::invalid_argument("realize: chirotope must be uniform");
  if (opts.restarts < 1 || opts.iterations < 1 || !(opts.epsilon > 0))
    throw std::invalid_argument("realize: budgets and epsilon must be positive");
  const double z5 = chi.sign(maskOf({1, 2, 3, 5})) > 0 ? 1.0 : -1.0;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const Penalty penalty(chi, opts.epsilon);
  RealizeAttempt attempt;
  attempt.penalty = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::array<P3, 8> p{};
    p[0] = {0, 0, 0};
    p[1] = {1, 0, 0};
    p[2] = {1, 1, 0};
    p[4] = {0, 0, z5};
    for (int i : kFree) p[i] = {coord(rng), coord(rng), coord(rng)};

    std::array<P3, 8> grad;
    int wrong = 0;
    double f = penalty(p, &grad, &wrong);
    double step = 0.1;
    double checkpoint = f;
    // The margin eps only shapes the search: a configuration with every sign
    // right but some margins below eps is still handed to the exact check.
    auto tryExact = [&](int it) {
      if (wrong > 0 || (f > 0 && it % 64 != 0)) return false;
      if (auto e = exactCandidate(p, chi, opts.maxDenominator)) {
        attempt.exact = std::move(e);
        attempt.best = p;
        attempt.penalty = f;
        return true;
      }
      return false;
    };
    for (int it = 0; it < opts.iterations && f > 0; ++it) {
      if (tryExact(it)) return attempt;
      // Abandon restarts that have stalled in a local minimum.
      if (it % 250 == 249) {
        if (f > 0.99 * checkpoint) break;
        checkpoint = f;
      }
      double norm = 0;
      for (int i : kFree) norm += dot(grad[i], grad[i]);
      norm = std::sqrt(norm);
      if (norm == 0) break;
      std::array<P3, 8> q = p;
      for (int i : kFree)
        for (int k = 0; k < 3; ++k) q[i][k] -= step * grad[i][k] / norm;
      std::array<P3, 8> qgrad;
      int qwrong = 0;
      const double fq = penalty(q, &qgrad, &qwrong);
      if (fq < f) {
        p = q;
        grad = qgrad;
        f = fq;
        wrong = qwrong;
        step = std::min(step * 1.5, 4.0);
      } else {
        step *= 0.5;
        if (step < 1e-14) break;
      }
    }
    if (f < attempt.penalty) {
      attempt.penalty = f;
      attempt.best = p;
    }
    if (tryExact(0)) return attempt;
  }
  return attempt;
}

bool inConvexPosition(const ExactConfig& p) {
  for (Label x = 1; x <= 8; ++x)
    for (int b = 0; b < kNumBases; ++b) {
      const VertexMask q = kBases.mask(b);
      if (q & bitOf(x)) continue;
      const auto l = sortedLabels<4>(q);
      const int s = sgn(orientation(p, q));
      bool inside = true;
      for (int k = 0; k < 4 && inside; ++k) {
        std::array<ExactPoint, 4> t{p[l[0] - 1], p[l[1] - 1], p[l[2] - 1], p[l[3] - 1]};
        t[k] = p[x - 1];
        const int sk = sgn(orientation(t[0], t[1], t[2], t[3]));
        inside = sk == 0 || (sk > 0) == (s > 0);
      }
      if (inside) return false;
    }
  return true;
}

ExactConfig mirrored(const ExactConfig& p) {
  ExactConfig m = p;
  for (auto& q : m) q.z = -q.z;
  return m;
}

VerifyReport verifyRealization(const Realization& r) {
  const Chirotope actual = chirotopeOfPointsAllowDegenerate(r.points);
  for (int b = 0; b < kNumBases; ++b) {
    if (actual[b] == 0) return {false, "zero determinant at basis " + maskString(kBases.mask(b))};
    if (actual[b] != r.chirotope[b])
      return {false, "basis " + maskString(kBases.mask(b)) + " has sign " + (actual[b] > 0 ? "+" : "-") +
                         ", expected " + (r.chirotope[b] > 0 ? "+" : "-")};
  }
  if (auto v = admissibilityViolation(r.chirotope, r.triangulation, false)) return {false, *v};
  const auto boundary = BoundaryTriangulation::boundaryTrianglesOf(r.triangulation.tets());
  if (!BoundaryTriangulation::fromTriangles(boundary)) return {false, "boundary is not a hexahedron boundary"};
  if (enclosedVolume(r.points, boundary) != totalVolume(r.points, r.triangulation.tets()))
    return {false, "tet volumes do not add up to the volume enclosed by the boundary"};
  return {};
}

nlohmann::ordered_json toJson(const Realization& r) {
  nlohmann::ordered_json j;
  j["class"] = r.classId;
  j["tets"] = r.triangulation.toString();
  j["chirotope"] = r.chirotope.toString();
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : r.points) pts.push_back({p.x.get_str(), p.y.get_str(), p.z.get_str()});
  return j;
}

Realization realizationFromJson(const nlohmann::json& j) {
  Realization r;
  r.classId = j.at("class").get<std::string>();
  r.triangulation = Triangulation::parse(j.at("tets").get<std::string>());
  r.chirotope = Chirotope::parse(j.at("chirotope").get<std::string>());
  const auto& pts = j.at("points");
  if (!pts.is_array() || pts.size() != 8) throw std::invalid_argument("realization needs 8 points");
  for (int i = 0; i < 8; ++i) {
    const auto c = pts[i].get<std::array<std::string, 3>>();
    mpq_class v[3];
    for (int k = 0; k < 3; ++k) {
      v[k] = mpq_class(c[k]);
      v[k].canonicalize();
      if (sgn(v[k].get_den()) == 0) throw std::invalid_argument("zero denominator");
    }
    r.points[i] = {v[0], v[1], v[2]};
  }
  return r;
}

void writeMedit(std::ostream& out, const Realization& r) {
  out << "MeshVersionFormatted 2\nDimension 3\n\nVertices\n8\n";
  out.precision(17);
  for (const auto& p : r.points) out << p.x.get_d() << ' ' << p.y.get_d() << ' ' << p.z.get_d() << " 0\n";
  out << "\nTetrahedra\n" << r.triangulation.size() << '\n';
  for (VertexMask t : r.triangulation.tets()) {
    auto l = sortedLabels<4>(t);
    if (sgn(orientation(r.points, t)) < 0) std::swap(l[2], l[3]);
    out << l[0] << ' ' << l[1] << ' ' << l[2] << ' ' << l[3] << " 0\n";
  }
  out << "\nEnd\n";
}

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Realized: return "realized";
    case Verdict::SatInfeasible: return "sat-infeasible";
    case Verdict::Certificate: return "certificate";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

struct SearchOutcome {
  std::optional<Realization> realization;
  std::vector<FinalPolynomialCertificate> certificates;
  std::size_t tried = 0;
  bool exhausted = false;
  bool budgetHit = false;
};

SearchOutcome search(const CatalogEntry& e, const SatInstance& inst, const PipelineOptions& opts,
                     std::size_t limit) {
  SearchOutcome out;
  ChirotopeStream stream(inst, opts.realize.seed, opts.conflictBudget);
  std::mt19937_64 hintRng(opts.realize.seed);
  std::optional<Chirotope> nextHint;
  while (out.tried < limit) {
    stream.hint(nextHint ? *nextHint : perturbedCubeHint(hintRng, e.tets, inst.orientation[0]));
    nextHint.reset();
    std::optional<Chirotope> chi;
    try {
      chi = stream.next();
    } catch (const SatResourceLimit&) {
      out.budgetHit = true;
      return out;
    }
    if (!chi) {
      out.exhausted = true;
      return out;
    }
    ++out.tried;
    RealizeOptions ro = opts.realize;
    ro.seed = opts.realize.seed + 7919 * out.tried;
    auto attempt = realizeDetailed(*chi, ro);
    if (attempt.exact) {
      Realization r{e.id, e.tets, *chi, *attempt.exact};
      if (!verifyRealization(r)) continue;  // cannot happen for an admissible chirotope
      out.realization = std::move(r);
      return out;
    }
    if (auto cert = findFinalPolynomial(*chi)) out.certificates.push_back(std::move(*cert));
    // Next search starts near the closest configuration the descent reached;
    // its chirotope is realizable by construction.
    nextHint = realizableNeighbour(attempt.best, inst.orientation[0], e.tets);
  }
  return out;
}

}  // namespace

ClassResult realizeClass(const CatalogEntry& e, bool convex, const PipelineOptions& opts) {
  ClassResult res;
  res.classId = e.id;
  res.convex = convex;
  SatInstance inst = encodeConstraints(e.tets, convex);
  if (opts.hullFirst) {
    SatInstance hull = inst;
    addHullConstraints(hull);
    auto first = search(e, hull, opts, opts.hullChirotopes);
    if (first.realization) {
      res.realization = std::move(first.realization);
      res.verdict = Verdict::Realized;
      res.chirotopesTried = first.tried;
      return res;
    }
  }
  auto out = search(e, inst, opts, opts.maxChirotopes);
  res.chirotopesTried = out.tried;
  res.chirotopesExhausted = out.exhausted;
  res.certificates = std::move(out.certificates);
  if (out.realization) {
    res.realization = std::move(out.realization);
    res.verdict = Verdict::Realized;
  } else if (out.exhausted) {
    if (out.tried == 0)
      res.verdict = Verdict::SatInfeasible;
    else if (res.certificates.size() == out.tried)
      res.verdict = Verdict::Certificate;
  }
  return res;
}

ClassResult realizeConvex(const CatalogEntry& e, const PipelineOptions& opts) { return realizeClass(e, true, opts); }

std::vector<ClassResult> realizeCatalog(const Catalog& c, bool convex, const PipelineOptions& opts, int workers) {
  const auto& entries = c.entries();
  std::vector<ClassResult> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      PipelineOptions o = opts;
      o.realize.seed = opts.realize.seed * 1000003ULL + i;
      out[i] = realizeClass(entries[i], convex, o);
    }
  };
  const int n = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::ordered_json toJson(const ClassResult& r) {
  nlohmann::ordered_json j;
  j["class"] = r.classId;
  j["convex"] = r.convex;
  j["verdict"] = toString(r.verdict);
  j["chirotopesTried"] = r.chirotopesTried;
  j["chirotopesExhausted"] = r.chirotopesExhausted;
  if (r.realization) j["realization"] = toJson(*r.realization);
  auto& certs = j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : r.certificates) certs.push_back(toJson(c));
  return j;
}

}  // namespace hextet
