#include <gtest/gtest.h>

#include "fran/simplex.hpp"

using namespace fran;
using namespace fran::lp;

namespace {

Constraint row(std::vector<std::pair<int, Rational>> terms, Relation rel, Rational rhs) {
  return {std::move(terms), rel, std::move(rhs)};
}

}  // namespace

TEST(Simplex, TextbookMaximization) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  LinearProgram lp;
  int x = lp.add_variable(-3);
  int y = lp.add_variable(-5);
  lp.add_constraint(row({{x, 1}}, Relation::LessEqual, 4));
  lp.add_constraint(row({{y, 2}}, Relation::LessEqual, 12));
  lp.add_constraint(row({{x, 3}, {y, 2}}, Relation::LessEqual, 18));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.objective, -36);
  EXPECT_EQ(s.x[x], 2);
  EXPECT_EQ(s.x[y], 6);
  EXPECT_EQ(max_violation(lp, s.x), 0);
}

TEST(Simplex, EqualityAndGreaterEqualNeedPhaseOne) {
  // min x + 2y s.t. x + y = 3, x - y >= 1/2, y >= 1/3.
  LinearProgram lp;
  int x = lp.add_variable(1);
  int y = lp.add_variable(2);
  lp.add_constraint(row({{x, 1}, {y, 1}}, Relation::Equal, 3));
  lp.add_constraint(row({{x, 1}, {y, -1}}, Relation::GreaterEqual, ratio(1, 2)));
  lp.add_constraint(row({{y, 1}}, Relation::GreaterEqual, ratio(1, 3)));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.x[y], ratio(1, 3));
  EXPECT_EQ(s.x[x], ratio(8, 3));
  EXPECT_EQ(s.objective, ratio(10, 3));
}

TEST(Simplex, NegativeRightHandSide) {
  // -x <= -2 means x >= 2.
  LinearProgram lp;
  int x = lp.add_variable(1);
  lp.add_constraint(row({{x, -1}}, Relation::LessEqual, -2));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.x[x], 2);
}

TEST(Simplex, DetectsInfeasibility) {
  LinearProgram lp;
  int x = lp.add_variable(1);
  lp.add_constraint(row({{x, 1}}, Relation::LessEqual, 1));
  lp.add_constraint(row({{x, 1}}, Relation::GreaterEqual, 2));
  EXPECT_EQ(solve(lp).status, Status::Infeasible);
}

TEST(Simplex, DetectsUnboundedness) {
  LinearProgram lp;
  int x = lp.add_variable(-1);
  int y = lp.add_variable(0);
  lp.add_constraint(row({{x, 1}, {y, -1}}, Relation::LessEqual, 1));
  EXPECT_EQ(solve(lp).status, Status::Unbounded);
}

TEST(Simplex, RedundantEqualities) {
  LinearProgram lp;
  int x = lp.add_variable(1);
  int y = lp.add_variable(1);
  lp.add_constraint(row({{x, 1}, {y, 1}}, Relation::Equal, 2));
  lp.add_constraint(row({{x, 2}, {y, 2}}, Relation::Equal, 4));
  lp.add_constraint(row({{x, 1}}, Relation::GreaterEqual, 1));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(max_violation(lp, s.x), 0);
}

TEST(Simplex, BealeCyclingExampleTerminates) {
  // Beale's example cycles under the plain Dantzig rule; optimum -1/20.
  LinearProgram lp;
  int x1 = lp.add_variable(ratio(-3, 4));
  int x2 = lp.add_variable(150);
  int x3 = lp.add_variable(ratio(-1, 50));
  int x4 = lp.add_variable(6);
  lp.add_constraint(row({{x1, ratio(1, 4)}, {x2, -60}, {x3, ratio(-1, 25)}, {x4, 9}}, Relation::LessEqual, 0));
  lp.add_constraint(row({{x1, ratio(1, 2)}, {x2, -90}, {x3, ratio(-1, 50)}, {x4, 3}}, Relation::LessEqual, 0));
  lp.add_constraint(row({{x3, 1}}, Relation::LessEqual, 1));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.objective, ratio(-1, 20));
  EXPECT_EQ(max_violation(lp, s.x), 0);
}

TEST(Simplex, EmptyProgram) {
  LinearProgram lp;
  lp.add_variable(1);
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  EXPECT_EQ(s.objective, 0);
}

TEST(Simplex, MaxViolationMeasuresWorstRow) {
  LinearProgram lp;
  int x = lp.add_variable(0);
  lp.add_constraint(row({{x, 1}}, Relation::LessEqual, 1));
  lp.add_constraint(row({{x, 1}}, Relation::Equal, 2));
  EXPECT_EQ(max_violation(lp, {Rational(3)}), 2);
  EXPECT_EQ(max_violation(lp, {Rational(-1)}), 3);
}

TEST(Simplex, TransportationProblem) {
  // Two sources (supply 20, 30), three sinks (demand 10, 25, 15).
  const int cost[2][3] = {{8, 6, 10}, {9, 12, 13}};
  const int supply[2] = {20, 30};
  const int demand[3] = {10, 25, 15};
  LinearProgram lp;
  int v[2][3];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) v[i][j] = lp.add_variable(cost[i][j]);
  for (int i = 0; i < 2; ++i) lp.add_constraint(row({{v[i][0], 1}, {v[i][1], 1}, {v[i][2], 1}}, Relation::Equal, supply[i]));
  for (int j = 0; j < 3; ++j) lp.add_constraint(row({{v[0][j], 1}, {v[1][j], 1}}, Relation::Equal, demand[j]));
  Solution s = solve(lp);
  ASSERT_EQ(s.status, Status::Optimal);
  // Brute force over the single free parameter family: enumerate integer flows.
  long best = 1L << 40;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 20 - a; ++b) {
      int c = 20 - a - b;
      if (c > 15 || b > 25) continue;
      long total = cost[0][0] * a + cost[0][1] * b + cost[0][2] * c + cost[1][0] * (10 - a) +
                   cost[1][1] * (25 - b) + cost[1][2] * (15 - c);
      best = std::min(best, total);
    }
  EXPECT_EQ(s.objective, best);
}
