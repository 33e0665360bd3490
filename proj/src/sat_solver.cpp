#include "hextet/sat_solver.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

namespace hextet::sat {

std::string toDimacs(const Cnf& cnf, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << cnf.numVars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (Lit l : clause) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf parseDimacs(std::istream& in) {
  Cnf cnf;
  std::string line;
  bool header = false;
  std::size_t expected = 0;
  std::vector<Lit> current;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      ls >> p >> fmt >> cnf.numVars >> expected;
      if (fmt != "cnf" || !ls) throw DimacsError("line " + std::to_string(lineNo) + ": bad header");
      header = true;
      continue;
    }
    if (!header) throw DimacsError("line " + std::to_string(lineNo) + ": clause before header");
    long long v;
    while (ls >> v) {
      if (v == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::llabs(v) > cnf.numVars) throw DimacsError("line " + std::to_string(lineNo) + ": variable out of range");
        current.push_back(static_cast<Lit>(v));
      }
    }
    if (!ls.eof()) throw DimacsError("line " + std::to_string(lineNo) + ": unexpected token");
  }
  if (!current.empty()) throw DimacsError("unterminated clause at end of input");
  if (!header) throw DimacsError("missing header");
  if (cnf.clauses.size() != expected) throw DimacsError("clause count differs from header");
  return cnf;
}

Solver::Solver(const Cnf& cnf, std::uint64_t seed) {
  const int n = cnf.numVars;
  watches_.resize(2 * n);
  assigns_.assign(n, -1);
  level_.assign(n, 0);
  reason_.assign(n, -1);
  phase_.assign(n, false);
  activity_.assign(n, 0.0);
  heapPos_.assign(n, -1);
  seen_.assign(n, false);
  model_.assign(n, false);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1e-5);
    for (auto& a : activity_) a = jitter(rng);
  }
  for (int v = 0; v < n; ++v) heapInsert(v);
  for (const auto& clause : cnf.clauses) addClause(clause);
}

void Solver::addClause(std::vector<Lit> clause) {
  if (unsat_) return;
  backtrack(0);
  std::vector<ILit> lits;
  for (Lit l : clause) lits.push_back(fromDimacs(l));
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<ILit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == neg(lits[i])) return;  // tautology
    const int v = value(lits[i]);
    if (v == 1) return;
    if (v == 0) continue;
    kept.push_back(lits[i]);
  }
  attach(std::move(kept), false);
}

bool Solver::attach(std::vector<ILit> lits, bool learnt) {
  (void)learnt;
  if (lits.empty()) {
    unsat_ = true;
    return false;
  }
  if (lits.size() == 1) {
    const int v = value(lits[0]);
    if (v == 0) {
      unsat_ = true;
      return false;
    }
    if (v < 0) enqueue(lits[0], -1);
    return true;
  }
  const int ci = static_cast<int>(clauses_.size());
  watches_[lits[0]].push_back(ci);
  watches_[lits[1]].push_back(ci);
  clauses_.push_back(std::move(lits));
  return true;
}

void Solver::enqueue(ILit l, int reason) {
  const int v = var(l);
  assigns_[v] = (l & 1) ? 0 : 1;
  level_[v] = decisionLevel();
  reason_[v] = reason;
  trail_.push_back(l);
}

int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const ILit falseLit = neg(trail_[qhead_++]);
    auto& ws = watches_[falseLit];
    std::size_t i = 0, j = 0;
    while (i < ws.size()) {
      const int ci = ws[i++];
      auto& c = clauses_[ci];
      if (c[0] == falseLit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[j++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k)
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      if (moved) continue;
      ws[j++] = ci;
      if (value(c[0]) == 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(j);
  }
  return -1;
}

void Solver::analyze(int confl, std::vector<ILit>& learnt, int& backLevel) {
  learnt.assign(1, -1);
  int pathCount = 0;
  ILit p = -1;
  int idx = static_cast<int>(trail_.size()) - 1;
  do {
    const auto& c = clauses_[confl];
    for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
      const ILit q = c[k];
      const int v = var(q);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = true;
      bump(v);
      if (level_[v] >= decisionLevel())
        ++pathCount;
      else
        learnt.push_back(q);
    }
    while (!seen_[var(trail_[idx])]) --idx;
    p = trail_[idx--];
    confl = reason_[var(p)];
    seen_[var(p)] = false;
    --pathCount;
  } while (pathCount > 0);
  learnt[0] = neg(p);

  backLevel = 0;
  std::size_t maxAt = 1;
  for (std::size_t k = 1; k < learnt.size(); ++k)
    if (level_[var(learnt[k])] > backLevel) {
      backLevel = level_[var(learnt[k])];
      maxAt = k;
    }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[maxAt]);
  for (ILit l : learnt) seen_[var(l)] = false;
}

void Solver::backtrack(int level) {
  if (decisionLevel() <= level) return;
  for (int k = static_cast<int>(trail_.size()) - 1; k >= trailLim_[level]; --k) {
    const int v = var(trail_[k]);
    phase_[v] = assigns_[v] == 1;
    assigns_[v] = -1;
    reason_[v] = -1;
    if (heapPos_[v] < 0) heapInsert(v);
  }
  trail_.resize(trailLim_[level]);
  trailLim_.resize(level);
  qhead_ = trail_.size();
}

void Solver::bump(int v) {
  activity_[v] += varInc_;
  if (activity_[v] > 1e100) {
    for (auto& a : activity_) a *= 1e-100;
    varInc_ *= 1e-100;
  }
  if (heapPos_[v] >= 0) heapUp(heapPos_[v]);
}

void Solver::heapInsert(int v) {
  heapPos_[v] = static_cast<int>(heap_.size());
  heap_.push_back(v);
  heapUp(heapPos_[v]);
}

void Solver::heapUp(int pos) {
  const int v = heap_[pos];
  while (pos > 0) {
    const int parent = (pos - 1) / 2;
    if (activity_[heap_[parent]] >= activity_[v]) break;
    heap_[pos] = heap_[parent];
    heapPos_[heap_[pos]] = pos;
    pos = parent;
  }
  heap_[pos] = v;
  heapPos_[v] = pos;
}

void Solver::heapDown(int pos) {
  const int v = heap_[pos];
  const int n = static_cast<int>(heap_.size());
  while (true) {
    int child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && activity_[heap_[child + 1]] > activity_[heap_[child]]) ++child;
    if (activity_[heap_[child]] <= activity_[v]) break;
    heap_[pos] = heap_[child];
    heapPos_[heap_[pos]] = pos;
    pos = child;
  }
  heap_[pos] = v;
  heapPos_[v] = pos;
}

int Solver::heapPop() {
  const int top = heap_[0];
  heapPos_[top] = -1;
  const int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heapPos_[last] = 0;
    heapDown(0);
  }
  return top;
}

int Solver::pickBranch() {
  while (!heap_.empty()) {
    const int v = heapPop();
    if (assigns_[v] < 0) return v;
  }
  return -1;
}

namespace {

double luby(double y, int x) {
  int size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1;
  for (int i = 0; i < seq; ++i) r *= y;
  return r;
}

}  // namespace

Result Solver::solve(std::uint64_t conflictBudget) {
  if (unsat_) return Result::Unsat;
  backtrack(0);
  if (propagate() >= 0) {
    unsat_ = true;
    return Result::Unsat;
  }
  std::uint64_t used = 0;
  int restarts = 0;
  std::vector<ILit> learnt;
  while (true) {
    const auto limit = static_cast<std::uint64_t>(100 * luby(2, restarts++));
    std::uint64_t local = 0;
    while (true) {
      const int confl = propagate();
      if (confl >= 0) {
        ++conflicts_;
        ++used;
        ++local;
        if (decisionLevel() == 0) {
          unsat_ = true;
          return Result::Unsat;
        }
        int backLevel = 0;
        analyze(confl, learnt, backLevel);
        backtrack(backLevel);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          const int ci = static_cast<int>(clauses_.size());
          attach(learnt, true);
          enqueue(learnt[0], ci);
        }
        varInc_ /= 0.95;
        if (conflictBudget && used >= conflictBudget) {
          backtrack(0);
          return Result::Unknown;
        }
        if (local >= limit) break;
      } else {
        const int v = pickBranch();
        if (v < 0) {
          for (int k = 0; k < numVars(); ++k) model_[k] = assigns_[k] == 1;
          return Result::Sat;
        }
        trailLim_.push_back(static_cast<int>(trail_.size()));
        enqueue(2 * v + (phase_[v] ? 0 : 1), -1);
      }
    }
    backtrack(0);
  }
}

}  // namespace hextet::sat
