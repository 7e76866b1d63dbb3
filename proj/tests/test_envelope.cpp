#include <gtest/gtest.h>

#include <stdexcept>

#include "fran/envelope.hpp"
#include "fran/model.hpp"

using namespace fran;

namespace {
Breakpoint bp(Rational mu, Rational ndt) { return {std::move(mu), std::move(ndt)}; }
}  // namespace

TEST(Envelope, RejectsUnsortedBreakpoints) {
  EXPECT_THROW(PiecewiseLinearNdt({bp(1, 1), bp(0, 2)}), std::invalid_argument);
  EXPECT_THROW(PiecewiseLinearNdt({bp(0, 1), bp(0, 2)}), std::invalid_argument);
}

TEST(Envelope, DropsPointsAboveTheChord) {
  auto env = PiecewiseLinearNdt::lower_convex_envelope({bp(0, 4), bp(1, 3), bp(2, 0)});
  ASSERT_EQ(env.breakpoints().size(), 2u);
  EXPECT_EQ(env.evaluate(1), 2);
  EXPECT_TRUE(env.is_convex());
}

TEST(Envelope, KeepsLowestDuplicate) {
  auto env = PiecewiseLinearNdt::lower_convex_envelope({bp(1, 5), bp(0, 2), bp(1, 1), bp(2, 1)});
  EXPECT_EQ(env.evaluate(1), 1);
  EXPECT_EQ(env.evaluate(0), 2);
}

TEST(Envelope, CollinearPointsAreMerged) {
  auto env = PiecewiseLinearNdt::lower_convex_envelope({bp(0, 2), bp(1, 1), bp(2, 0)});
  EXPECT_EQ(env.breakpoints().size(), 2u);
  EXPECT_EQ(env.evaluate(ratio(1, 2)), ratio(3, 2));
}

TEST(Envelope, ExactInterpolation) {
  PiecewiseLinearNdt f({bp(0, 3), bp(ratio(1, 3), 2), bp(1, 1)});
  EXPECT_EQ(f.evaluate(ratio(1, 6)), ratio(5, 2));
  EXPECT_EQ(f.evaluate(ratio(2, 3)), ratio(3, 2));
  EXPECT_EQ(f.evaluate(1), 1);
  EXPECT_THROW(f.evaluate(ratio(-1, 10)), DomainError);
  EXPECT_THROW(f.evaluate(ratio(11, 10)), DomainError);
  EXPECT_EQ(f.min_mu(), 0);
  EXPECT_EQ(f.max_mu(), 1);
}

TEST(Envelope, ShapePredicates) {
  PiecewiseLinearNdt convex({bp(0, 3), bp(ratio(1, 2), 1), bp(1, 1)});
  EXPECT_TRUE(convex.is_convex());
  EXPECT_TRUE(convex.is_non_increasing());
  PiecewiseLinearNdt concave({bp(0, 3), bp(ratio(1, 2), 3), bp(1, 1)});
  EXPECT_FALSE(concave.is_convex());
  EXPECT_TRUE(concave.is_non_increasing());
  PiecewiseLinearNdt rising({bp(0, 1), bp(1, 2)});
  EXPECT_FALSE(rising.is_non_increasing());
}

TEST(Envelope, SinglePoint) {
  auto env = PiecewiseLinearNdt::lower_convex_envelope({bp(ratio(1, 2), 7)});
  EXPECT_EQ(env.evaluate(ratio(1, 2)), 7);
  EXPECT_TRUE(env.is_convex());
}

TEST(Envelope, HullIsBelowEveryInputPoint) {
  std::vector<Breakpoint> pts;
  for (int i = 0; i <= 20; ++i) {
    Rational mu = ratio(i, 20);
    pts.push_back(bp(mu, Rational(1) + ratio((i * 7) % 11, 3) + ratio(20 - i, 4)));
  }
  auto env = PiecewiseLinearNdt::lower_convex_envelope(pts);
  EXPECT_TRUE(env.is_convex());
  for (const auto& p : pts) EXPECT_LE(env.evaluate(p.mu), p.ndt);
  for (const auto& b : env.breakpoints()) {
    bool is_input = false;
    for (const auto& p : pts) is_input |= (p.mu == b.mu && p.ndt == b.ndt);
    EXPECT_TRUE(is_input);
  }
}
