#pragma once

#include <utility>
#include <vector>

#include "fran/rational.hpp"

namespace fran::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
  Relation relation = Relation::LessEqual;
  Rational rhs{0};
};

/// minimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  int add_variable(Rational cost = Rational(0));
  void add_constraint(Constraint c) { constraints.push_back(std::move(c)); }
};

struct Solution {
  Status status = Status::Infeasible;
  Rational objective{0};
  std::vector<Rational> x;
  int pivots = 0;
};

/// Dense two-phase primal simplex in exact rational arithmetic. Entering
/// columns follow Dantzig's rule and fall back to Bland's rule after a run of
/// degenerate pivots, which rules out cycling.
Solution solve(const LinearProgram& program);

/// Largest violation of any constraint or bound by x (zero when feasible).
Rational max_violation(const LinearProgram& program, const std::vector<Rational>& x);

}  // namespace fran::lp
