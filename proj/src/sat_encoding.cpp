#include "hextet/sat_encoding.hpp"

#include "hextet/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hextet {

namespace {

using sat::Lit;

class Encoder {
 public:
  Encoder(SatInstance& inst) : inst_(inst) { inst_.cnf.numVars = kNumBases; }

  void clause(std::vector<Lit> c) {
    std::sort(c.begin(), c.end());
    if (seen_.insert(c).second) inst_.cnf.add(std::move(c));
  }

  // Literal for "chi(tuple) = +1".
  static Lit positive(const std::array<Label, 4>& tuple) {
    const int v = SatInstance::basisVar(kBases.index(maskOf(tuple)));
    return sortSign(tuple) > 0 ? v : -v;
  }

  // Literal for "coefficient i of the circuit on `five` is positive".
  static std::array<Lit, 5> circuitLits(VertexMask five) {
    const auto z = sortedLabels<5>(five);
    std::array<Lit, 5> lits{};
    for (int i = 0; i < 5; ++i) {
      const int v = SatInstance::basisVar(kBases.index(static_cast<VertexMask>(five & ~bitOf(z[i]))));
      lits[i] = (i % 2 == 0) ? -v : v;  // (-1)^(i+1)
    }
    return lits;
  }

  // Literal for "product c * chi(a) * chi(b) = +1".
  Lit product(int c, const std::array<Label, 4>& a, const std::array<Label, 4>& b) {
    int ba = kBases.index(maskOf(a)), bb = kBases.index(maskOf(b));
    if (ba > bb) std::swap(ba, bb);
    auto [it, fresh] = aux_.try_emplace({ba, bb}, 0);
    if (fresh) {
      const int z = inst_.cnf.newVar();
      it->second = z;
      const int x = SatInstance::basisVar(ba), y = SatInstance::basisVar(bb);
      clause({-z, -x, y});
      clause({-z, x, -y});
      clause({z, x, y});
      clause({z, -x, -y});
      inst_.auxDefs.push_back({z, ba, bb});
    }
    const int flip = c * sortSign(a) * sortSign(b);
    return flip > 0 ? it->second : -it->second;
  }

  void exchange() {
    for (Label a = 1; a <= 8; ++a)
      for (Label b = a + 1; b <= 8; ++b) {
        std::vector<Label> rest;
        for (Label l = 1; l <= 8; ++l)
          if (l != a && l != b) rest.push_back(l);
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
              for (int m = k + 1; m < 6; ++m) {
                const Label e1 = rest[i], e2 = rest[j], e3 = rest[k], e4 = rest[m];
                const Lit q1 = product(1, {a, b, e1, e2}, {a, b, e3, e4});
                const Lit q2 = product(-1, {a, b, e1, e3}, {a, b, e2, e4});
                const Lit q3 = product(1, {a, b, e1, e4}, {a, b, e2, e3});
                clause({q1, q2, q3});
                clause({-q1, -q2, -q3});
              }
      }
  }

  void acyclic() {
    for (int z = 0; z < kNumFiveSets; ++z) {
      const auto l = circuitLits(kFiveSets.mask(z));
      clause({-l[0], -l[1], -l[2], -l[3], -l[4]});
      clause({l[0], l[1], l[2], l[3], l[4]});
    }
  }

  void tets() {
    const auto& tets = inst_.triangulation.tets();
    for (std::size_t i = 0; i < tets.size(); ++i) {
      const int v = SatInstance::basisVar(kBases.index(tets[i]));
      clause({inst_.orientation[i] > 0 ? v : -v});
    }
  }

  void intersections() {
    const auto& tets = inst_.triangulation.tets();
    for (VertexMask s : tets)
      for (VertexMask t : tets) {
        if (s == t) continue;
        const auto uni = static_cast<VertexMask>(s | t);
        if (popcount(uni) < 5) continue;
        for (int zi = 0; zi < kNumFiveSets; ++zi) {
          const VertexMask five = kFiveSets.mask(zi);
          if ((five & uni) != five) continue;
          const auto labels = sortedLabels<5>(five);
          const auto lits = circuitLits(five);
          // Elements outside s must be negative, outside t positive; shared
          // elements are free.
          std::vector<int> freePos;
          std::array<int, 5> sign{};
          for (int k = 0; k < 5; ++k) {
            const bool inS = s & bitOf(labels[k]), inT = t & bitOf(labels[k]);
            if (!inS) sign[k] = -1;
            else if (!inT) sign[k] = 1;
            else freePos.push_back(k);
          }
          for (int mask = 0; mask < (1 << freePos.size()); ++mask) {
            for (std::size_t f = 0; f < freePos.size(); ++f) sign[freePos[f]] = (mask >> f) & 1 ? 1 : -1;
            forbid(lits, sign);
          }
        }
      }
  }

  void convex() {
    for (int z = 0; z < kNumFiveSets; ++z) {
      const auto lits = circuitLits(kFiveSets.mask(z));
      for (int lone = 0; lone < 5; ++lone)
        for (int s : {1, -1}) {
          std::array<int, 5> sign{};
          for (int k = 0; k < 5; ++k) sign[k] = k == lone ? s : -s;
          forbid(lits, sign);
        }
    }
  }

 private:
  void forbid(const std::array<Lit, 5>& lits, const std::array<int, 5>& sign) {
    std::vector<Lit> c;
    for (int k = 0; k < 5; ++k) c.push_back(sign[k] > 0 ? -lits[k] : lits[k]);
    clause(std::move(c));
  }

  SatInstance& inst_;
  std::map<std::pair<int, int>, int> aux_;
  std::set<std::vector<Lit>> seen_;
};

}  // namespace

SatInstance encodeConstraints(const Triangulation& t, bool convex) {
  SatInstance inst;
  inst.triangulation = t;
  inst.convex = convex;
  inst.orientation = coherentOrientation(t);
  Encoder enc(inst);
  enc.exchange();
  enc.acyclic();
  enc.tets();
  enc.intersections();
  if (convex) enc.convex();
  return inst;
}

void addHullConstraints(SatInstance& inst) {
  const auto& tets = inst.triangulation.tets();
  for (VertexMask tri : BoundaryTriangulation::boundaryTrianglesOf(tets)) {
    std::size_t owner = 0;
    while ((tets[owner] & tri) != tri) ++owner;
    const VertexMask apex = static_cast<VertexMask>(tets[owner] & ~tri);
    const auto l = sortedLabels<3>(tri);
    // chi(l0 l1 l2 apex) is fixed by the tet's orientation.
    const int apexLabel = labelsOf(apex)[0];
    const int side = inst.orientation[owner] * sortSign(std::array<Label, 4>{l[0], l[1], l[2], apexLabel});
    for (Label p = 1; p <= 8; ++p) {
      if ((tri | apex) & bitOf(p)) continue;
      const std::array<Label, 4> tuple{l[0], l[1], l[2], p};
      const int v = SatInstance::basisVar(kBases.index(maskOf(tuple)));
      inst.cnf.add({side * sortSign(tuple) > 0 ? v : -v});
    }
  }
}

std::string SatInstance::dimacs() const {
  return sat::toDimacs(cnf, {"hexahedron triangulation " + triangulation.toString(),
                             std::string("convex ") + (convex ? "1" : "0"),
                             "variables 1..70 are sorted bases; see sidecar map"});
}

nlohmann::ordered_json SatInstance::variableMap() const {
  nlohmann::ordered_json j;
  for (int b = 0; b < kNumBases; ++b) j[std::to_string(basisVar(b))] = maskString(kBases.mask(b));
  return j;
}

Chirotope SatInstance::chirotopeFromModel(const sat::Solver& s) const {
  Chirotope chi;
  for (int b = 0; b < kNumBases; ++b) chi.set(b, s.modelValue(basisVar(b)) ? 1 : -1);
  return chi;
}

ChirotopeStream::ChirotopeStream(const SatInstance& inst, std::uint64_t seed, std::uint64_t conflictBudget)
    : inst_(inst), solver_(inst.cnf, seed), budget_(conflictBudget) {}

std::optional<Chirotope> ChirotopeStream::next() {
  if (done_) return std::nullopt;
  const auto r = solver_.solve(budget_);
  if (r == sat::Result::Unknown) throw SatResourceLimit(found_);
  if (r == sat::Result::Unsat) {
    done_ = true;
    return std::nullopt;
  }
  Chirotope chi = inst_.chirotopeFromModel(solver_);
  std::vector<sat::Lit> block;
  for (int b = 0; b < kNumBases; ++b) block.push_back(chi[b] > 0 ? -SatInstance::basisVar(b) : SatInstance::basisVar(b));
  solver_.addClause(std::move(block));
  found_.push_back(chi);
  return chi;
}

void ChirotopeStream::hint(const Chirotope& chi) {
  for (int b = 0; b < kNumBases; ++b) solver_.setPhase(SatInstance::basisVar(b), chi[b] > 0);
  for (const auto& [z, a, b] : inst_.auxDefs) solver_.setPhase(z, (chi[a] > 0) == (chi[b] > 0));
}

std::vector<Chirotope> solveAll(const SatInstance& inst, std::size_t limit, std::uint64_t seed,
                                std::uint64_t conflictBudget) {
  if (limit < 1) throw std::invalid_argument("solveAll: limit must be at least 1");
  ChirotopeStream stream(inst, seed, conflictBudget);
  std::vector<Chirotope> out;
  while (out.size() < limit) {
    auto chi = stream.next();
    if (!chi) break;
    out.push_back(*chi);
  }
  return out;
}

bool satisfiable(const SatInstance& inst) { return !solveAll(inst, 1).empty(); }

bool satisfiesInstance(const Chirotope& chi, const SatInstance& inst) {
  if (!chi.uniform()) return false;
  std::vector<int> value(inst.cnf.numVars + 1, 0);
  for (int b = 0; b < kNumBases; ++b) value[SatInstance::basisVar(b)] = chi[b] > 0;
  for (const auto& [z, a, b] : inst.auxDefs) value[z] = (chi[a] > 0) == (chi[b] > 0);
  for (const auto& c : inst.cnf.clauses) {
    bool sat = false;
    for (sat::Lit l : c) sat |= (l > 0) == static_cast<bool>(value[std::abs(l)]);
    if (!sat) return false;
  }
  return true;
}

}  // namespace hextet
