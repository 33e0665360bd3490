#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hextet::sat {

/// DIMACS literal: +v or -v for variable v >= 1.
using Lit = int;

struct Cnf {
  int numVars = 0;
  std::vector<std::vector<Lit>> clauses;

  int newVar() { return ++numVars; }
  void add(std::vector<Lit> clause) { clauses.push_back(std::move(clause)); }
};

/// "p cnf V C" header followed by one zero-terminated clause per line.
std::string toDimacs(const Cnf& cnf, const std::vector<std::string>& comments = {});
Cnf parseDimacs(std::istream& in);

class DimacsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Result { Sat, Unsat, Unknown };

/// Conflict-driven clause learning solver. Deterministic for a given seed;
/// clauses may be added between calls to solve().
class Solver {
 public:
  explicit Solver(const Cnf& cnf, std::uint64_t seed = 0);

  /// conflictBudget == 0 means unlimited; Unknown is returned when exceeded.
  Result solve(std::uint64_t conflictBudget = 0);
  /// Value of variable v (1-based) in the last model.
  bool modelValue(int v) const { return model_[v - 1]; }
  void addClause(std::vector<Lit> clause);
  /// Preferred polarity for the next decisions on variable v (1-based).
  void setPhase(int v, bool value) { phase_[v - 1] = value; }
  int numVars() const { return static_cast<int>(assigns_.size()); }
  std::uint64_t conflicts() const { return conflicts_; }

 private:
  using ILit = int;  // 2*var + (negated ? 1 : 0), var 0-based
  static ILit fromDimacs(Lit l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
  static int var(ILit l) { return l >> 1; }
  static ILit neg(ILit l) { return l ^ 1; }

  // 1 true, 0 false, -1 unassigned.
  int value(ILit l) const {
    const int a = assigns_[var(l)];
    return a < 0 ? -1 : (a ^ (l & 1));
  }

  bool attach(std::vector<ILit> lits, bool learnt);
  void enqueue(ILit l, int reason);
  int propagate();
  void analyze(int confl, std::vector<ILit>& learnt, int& backLevel);
  void backtrack(int level);
  int decisionLevel() const { return static_cast<int>(trailLim_.size()); }
  int pickBranch();
  void bump(int v);
  void heapInsert(int v);
  void heapUp(int pos);
  void heapDown(int pos);
  int heapPop();

  std::vector<std::vector<ILit>> clauses_;
  std::vector<std::vector<int>> watches_;  // by literal that, when false, triggers a visit
  std::vector<int> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<bool> phase_;
  std::vector<double> activity_;
  std::vector<int> heap_;
  std::vector<int> heapPos_;
  std::vector<ILit> trail_;
  std::vector<int> trailLim_;
  std::vector<bool> seen_;
  std::vector<bool> model_;
  std::size_t qhead_ = 0;
  double varInc_ = 1.0;
  bool unsat_ = false;
  std::uint64_t conflicts_ = 0;
};

}  // namespace hextet::sat
