#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fran/lp_oracle.hpp"
#include "fran/ndt_serial.hpp"

using namespace fran;

namespace {

SystemConfig cfg_of(int k_t, int k_r, int n_t, Rational mu, Rational r) {
  return make_config(k_t, k_r, n_t, std::move(mu), std::move(r));
}

Rational lp_value(const SystemConfig& cfg) {
  LpResult res = solve_lp(build_lp(cfg));
  EXPECT_EQ(res.status, lp::Status::Optimal);
  return res.optimum;
}

const std::vector<Rational>& oracle_rates() {
  static const std::vector<Rational> rates = {ratio(1, 2), 1, 2};
  return rates;
}

}  // namespace

TEST(LpShape, VariableAndDemandCounts) {
  LpInstance a = build_lp(cfg_of(2, 2, 1, 0, 1));
  EXPECT_EQ(a.demands.size(), 2u);
  EXPECT_EQ(a.subsets.size(), 3u);
  EXPECT_EQ(a.program.num_vars, 2 * 3 + 2 * 2 * 3 + 2);
  LpInstance b = build_lp(cfg_of(3, 2, 1, 0, 1));
  EXPECT_EQ(b.subsets.size(), 7u);
  EXPECT_EQ(b.demands.size(), 2u);
  LpInstance c = build_lp(cfg_of(3, 3, 1, 0, 1));
  EXPECT_EQ(c.demands.size(), 6u);
}

TEST(LpShape, RejectsUnsupportedInstances) {
  EXPECT_THROW(build_lp(cfg_of(2, 2, 1, 1, 0)), ConfigError);
  EXPECT_THROW(build_lp(cfg_of(4, 2, 1, 0, 1)), ConfigError);
  EXPECT_THROW(build_lp(cfg_of(2, 4, 1, 0, 1)), ConfigError);
  EXPECT_THROW(build_lp(make_config(2, 2, 1, 0, 1, 3)), ConfigError);
  EXPECT_THROW(build_lp(cfg_of(2, 2, 1, 0, 1), {0, 0}), ConfigError);
}

TEST(LpSandwich, SmallestInstance) {
  SystemConfig cfg = cfg_of(2, 2, 1, 0, 1);
  SandwichReport rep = sandwich_check(cfg);
  const double m_star = std::sqrt(2.0);
  EXPECT_NEAR(rep.f_min, 2.0 * m_star / 2.0 + 2.0 / m_star, 1e-12);
  EXPECT_TRUE(rep.ok());
  EXPECT_LE(rep.lp_opt, rep.achievable_raw);
  EXPECT_GE(to_double(rep.lp_opt), rep.f_min - kOracleTolerance);
}

TEST(LpSandwich, FullCachingNeedsNoFronthaul) {
  SystemConfig cfg = cfg_of(2, 2, 1, 1, 1);
  Rational opt = lp_value(cfg);
  EXPECT_LE(opt, ratio(2, max_multiplicity(cfg).value * 1));
  EXPECT_TRUE(sandwich_check(cfg).ok());
}

TEST(LpSandwich, LargeFronthaulDrivesFronthaulTimeToZero) {
  LpInstance inst = build_lp(cfg_of(2, 2, 1, 0, 1000));
  lp::Solution sol = lp::solve(inst.program);
  ASSERT_EQ(sol.status, lp::Status::Optimal);
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    EXPECT_LE(sol.x[inst.delta_f(static_cast<int>(d))], ratio(1, 100));
  }
  EXPECT_EQ(lp::max_violation(inst.program, sol.x), 0);
}

TEST(LpSandwich, FullGrid) {
  for (int k_t : {2, 3})
    for (int k_r : {2, 3})
      for (int n_t : {1, 2})
        for (const Rational& r : oracle_rates())
          for (int i = 0; i <= k_t; ++i) {
            SystemConfig cfg = cfg_of(k_t, k_r, n_t, ratio(i, k_t), r);
            SandwichReport rep = sandwich_check(cfg);
            EXPECT_TRUE(rep.lower_ok) << describe(cfg);
            EXPECT_TRUE(rep.upper_ok) << describe(cfg);
            EXPECT_TRUE(rep.x_ok) << describe(cfg) << " x=" << to_fraction_string(rep.x);
          }
}

TEST(LpSandwich, ExactRegimeMatchesClosedForm) {
  for (int k_t : {2, 3})
    for (int k_r : {2, 3})
      for (const Rational& r : oracle_rates())
        for (int i = 0; i <= k_t; ++i) {
          SystemConfig cfg = cfg_of(k_t, k_r, 1, ratio(i, k_t), r);
          auto exact = exact_serial(cfg);
          if (!exact) continue;
          SandwichReport rep = sandwich_check(cfg);
          EXPECT_NEAR(std::max(rep.f_min, 1.0), to_double(*exact), 1e-9) << describe(cfg);
          EXPECT_GE(to_double(rep.lp_opt), rep.f_min - kOracleTolerance) << describe(cfg);
        }
}

TEST(LpSandwich, MultiplicityDiagnosticAtThresholdRate) {
  for (int k_t : {2, 3})
    for (int k_r : {2, 3}) {
      SystemConfig probe = cfg_of(k_t, k_r, 1, 0, 1);
      SystemConfig cfg = cfg_of(k_t, k_r, 1, 0, threshold_rate(probe));
      SandwichReport rep = sandwich_check(cfg);
      EXPECT_NEAR(to_double(rep.x), max_multiplicity(cfg).value, 1e-9) << describe(cfg);
    }
}

TEST(LpProperties, NonIncreasingInCacheAndRate) {
  for (int k_t : {2, 3})
    for (int k_r : {2, 3}) {
      const std::vector<Rational> rates = {ratio(1, 2), 1, 2, 4};
      std::vector<std::vector<Rational>> value(k_t + 1, std::vector<Rational>(rates.size()));
      for (int i = 0; i <= k_t; ++i)
        for (std::size_t j = 0; j < rates.size(); ++j) value[i][j] = lp_value(cfg_of(k_t, k_r, 1, ratio(i, k_t), rates[j]));
      for (int i = 0; i <= k_t; ++i)
        for (std::size_t j = 0; j < rates.size(); ++j) {
          if (i > 0) {
            EXPECT_LE(value[i][j], value[i - 1][j]);
          }
          if (j > 0) {
            EXPECT_LE(value[i][j], value[i][j - 1]);
          }
        }
    }
}

TEST(LpProperties, EdgeNodeRelabelingLeavesOptimumUnchanged) {
  for (int k_t : {2, 3}) {
    std::vector<int> perm(k_t);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i <= k_t; ++i) {
      SystemConfig cfg = cfg_of(k_t, 2, 1, ratio(i, k_t), 1);
      Rational base = solve_lp(build_lp(cfg)).optimum;
      std::vector<int> p = perm;
      while (std::next_permutation(p.begin(), p.end())) {
        LpResult res = solve_lp(build_lp(cfg, p));
        EXPECT_EQ(res.optimum, base) << describe(cfg);
      }
    }
  }
}

TEST(LpProperties, SolutionsAreFeasibleExactly) {
  for (int k_t : {2, 3})
    for (int i = 0; i <= k_t; ++i) {
      LpResult res = solve_lp(build_lp(cfg_of(k_t, 3, 2, ratio(i, k_t), ratio(1, 2))));
      ASSERT_EQ(res.status, lp::Status::Optimal);
      EXPECT_EQ(res.max_violation, 0);
      EXPECT_GE(res.worst_demand, res.optimum);
    }
}
