#include "fran/simplex.hpp"

#include <stdexcept>

namespace fran::lp {

int LinearProgram::add_variable(Rational cost) {
  objective.push_back(std::move(cost));
  return num_vars++;
}

namespace {

constexpr int kDegenerateRunBeforeBland = 50;

class Tableau {
 public:
  Tableau(int rows, int cols) : a_(rows, std::vector<Rational>(cols + 1)), obj_(cols + 1), basis_(rows, -1) {}

  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return static_cast<int>(obj_.size()) - 1; }
  Rational& at(int r, int c) { return a_[r][c]; }
  Rational& rhs(int r) { return a_[r][cols()]; }
  std::vector<int>& basis() { return basis_; }
  std::vector<Rational>& objective_row() { return obj_; }
  Rational value() const { return -obj_.back(); }

  void set_objective(const std::vector<Rational>& cost) {
    for (int j = 0; j <= cols(); ++j) obj_[j] = j < static_cast<int>(cost.size()) ? cost[j] : Rational(0);
    for (int r = 0; r < rows(); ++r) {
      const Rational cb = obj_[basis_[r]];
      if (cb == 0) continue;
      collect_nonzero(a_[r]);
      subtract(obj_, a_[r], cb, nonzero_);
    }
  }

  void pivot(int r, int c) {
    std::vector<Rational>& row = a_[r];
    const Rational inv = 1 / row[c];
    collect_nonzero(row);
    for (int j : nonzero_) row[j] *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i != r && a_[i][c] != 0) {
        const Rational f = a_[i][c];
        subtract(a_[i], row, f, nonzero_);
      }
    }
    if (obj_[c] != 0) {
      const Rational f = obj_[c];
      subtract(obj_, row, f, nonzero_);
    }
    basis_[r] = c;
  }

  // Optimizes over columns [0, limit). Returns false when unbounded.
  bool optimize(int limit, int& pivots) {
    int degenerate_run = 0;
    for (;;) {
      const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (obj_[j] >= 0) continue;
        if (enter < 0 || (!bland && obj_[j] < obj_[enter])) enter = j;
        if (bland) break;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = rhs(i) / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      degenerate_run = best == 0 ? degenerate_run + 1 : 0;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void drop_row(int r) {
    a_.erase(a_.begin() + r);
    basis_.erase(basis_.begin() + r);
  }

 private:
  static void subtract(std::vector<Rational>& target, const std::vector<Rational>& row, const Rational& f,
                       const std::vector<int>& nonzero) {
    for (int j : nonzero) target[j] -= f * row[j];
  }

  void collect_nonzero(const std::vector<Rational>& row) {
    nonzero_.clear();
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      if (row[j] != 0) nonzero_.push_back(j);
    }
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
};

}  // namespace

Solution solve(const LinearProgram& program) {
  const int n = program.num_vars;
  if (static_cast<int>(program.objective.size()) != n) throw std::invalid_argument("objective size mismatch");
  const int m = static_cast<int>(program.constraints.size());

  // Normalize to non-negative right-hand sides.
  std::vector<Constraint> rows = program.constraints;
  int slacks = 0, artificials = 0;
  for (auto& c : rows) {
    if (c.rhs < 0) {
      c.rhs = -c.rhs;
      for (auto& t : c.terms) t.second = -t.second;
      if (c.relation == Relation::LessEqual) c.relation = Relation::GreaterEqual;
      else if (c.relation == Relation::GreaterEqual) c.relation = Relation::LessEqual;
    }
    if (c.relation != Relation::Equal) ++slacks;
    if (c.relation != Relation::LessEqual) ++artificials;
  }

  const int first_slack = n;
  const int first_artificial = n + slacks;
  Tableau t(m, n + slacks + artificials);
  int next_slack = first_slack, next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    const Constraint& c = rows[i];
    for (const auto& [var, coef] : c.terms) {
      if (var < 0 || var >= n) throw std::invalid_argument("constraint references unknown variable");
      t.at(i, var) += coef;
    }
    t.rhs(i) = c.rhs;
    switch (c.relation) {
      case Relation::LessEqual:
        t.at(i, next_slack) = 1;
        t.basis()[i] = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.at(i, next_slack++) = -1;
        t.at(i, next_artificial) = 1;
        t.basis()[i] = next_artificial++;
        break;
      case Relation::Equal:
        t.at(i, next_artificial) = 1;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  Solution out;
  if (artificials > 0) {
    std::vector<Rational> phase_one(t.cols(), Rational(0));
    for (int j = first_artificial; j < t.cols(); ++j) phase_one[j] = 1;
    t.set_objective(phase_one);
    t.optimize(t.cols(), out.pivots);
    if (t.value() != 0) {
      out.status = Status::Infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis; rows with no other support are redundant.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis()[r] < first_artificial) continue;
      int col = -1;
      for (int j = 0; j < first_artificial && col < 0; ++j) {
        if (t.at(r, j) != 0) col = j;
      }
      if (col >= 0) {
        t.pivot(r, col);
        ++out.pivots;
      } else {
        t.drop_row(r);
      }
    }
  }

  t.set_objective(program.objective);
  if (!t.optimize(first_artificial, out.pivots)) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.objective = t.value();
  out.x.assign(n, Rational(0));
  for (int r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) out.x[t.basis()[r]] = t.rhs(r);
  }
  return out;
}

Rational max_violation(const LinearProgram& program, const std::vector<Rational>& x) {
  Rational worst(0);
  for (const auto& v : x) {
    if (v < 0) worst = std::max(worst, Rational(-v));
  }
  for (const auto& c : program.constraints) {
    Rational lhs(0);
    for (const auto& [var, coef] : c.terms) lhs += coef * x.at(var);
    Rational gap = lhs - c.rhs;
    Rational violation(0);
    if (c.relation == Relation::LessEqual) violation = gap;
    else if (c.relation == Relation::GreaterEqual) violation = -gap;
    else violation = gap < 0 ? Rational(-gap) : gap;
    worst = std::max(worst, violation);
  }
  return worst;
}

}  // namespace fran::lp
