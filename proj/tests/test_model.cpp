#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "fran/model.hpp"

using namespace fran;

namespace {

SystemConfig cfg_of(int k_t, int k_r, int n_t, Rational mu, Rational r) {
  return make_config(k_t, k_r, n_t, std::move(mu), std::move(r));
}

SystemConfig cfg_load(int k_t, int k_r, int n_t, Rational load, Rational r) {
  return make_config(k_t, k_r, n_t, Rational(load / k_t), std::move(r));
}

// Same grid as the gap scan: mu*K_T in steps of 1/2.
template <class Fn>
void for_each_grid_point(Fn&& fn) {
  const std::vector<Rational> rates = {ratio(1, 10), ratio(1, 2), 1, 2, 5, 10};
  for (int k_t = 2; k_t <= 8; ++k_t)
    for (int n_t = 1; n_t <= 4; ++n_t)
      for (int k_r : {4, 8, 16, 32})
        for (const Rational& r : rates)
          for (int h = 0; h <= 2 * k_t; ++h) fn(cfg_load(k_t, k_r, n_t, ratio(h, 2), r));
}

}  // namespace

TEST(Config, RejectsInvalidInstances) {
  EXPECT_THROW(make_config(0, 4, 2, 0, 1), ConfigError);
  EXPECT_THROW(make_config(4, 0, 2, 0, 1), ConfigError);
  EXPECT_THROW(make_config(4, 4, 0, 0, 1), ConfigError);
  EXPECT_THROW(make_config(4, 4, 2, ratio(3, 2), 1), ConfigError);
  EXPECT_THROW(make_config(4, 4, 2, ratio(-1, 2), 1), ConfigError);
  EXPECT_THROW(make_config(4, 4, 2, 0, -1), ConfigError);
  EXPECT_THROW(make_config(4, 4, 2, 0, 1, 3), ConfigError);
  EXPECT_EQ(make_config(4, 4, 2, 0, 1).n_files, 4);
}

TEST(Config, FeasibilityNeedsFronthaulOrOneFullCopy) {
  EXPECT_FALSE(is_feasible(cfg_of(4, 4, 2, ratio(1, 10), 0)));
  EXPECT_THROW(require_feasible(cfg_of(4, 4, 2, ratio(1, 10), 0)), InfeasibleError);
  EXPECT_TRUE(is_feasible(cfg_of(4, 4, 2, ratio(1, 4), 0)));
  EXPECT_TRUE(is_feasible(cfg_of(4, 4, 2, 0, ratio(1, 100))));
}

TEST(UsersServed, Examples) {
  EXPECT_EQ(users_served(Multiplicity(2), cfg_of(4, 4, 2, 0, 1)), 4);
  EXPECT_EQ(users_served(Multiplicity(3), cfg_of(4, 8, 2, 0, 1)), 6);
  EXPECT_EQ(users_served(Multiplicity(1), cfg_of(1, 1, 1, 0, 1)), 1);
  EXPECT_THROW(users_served(Multiplicity(0), cfg_of(4, 4, 2, 0, 1)), DomainError);
}

TEST(MaxMultiplicity, Examples) {
  EXPECT_EQ(max_multiplicity(cfg_of(8, 32, 8, 0, 1)).value, 4);
  EXPECT_EQ(max_multiplicity(cfg_of(8, 32, 4, 0, 1)).value, 8);
  EXPECT_EQ(max_multiplicity(cfg_of(1, 1, 1, 0, 1)).value, 1);
  EXPECT_EQ(threshold_rate(cfg_of(4, 8, 2, 0, 1)), 8);
}

TEST(FronthaulMultiplicity, Examples) {
  EXPECT_EQ(fronthaul_multiplicity(cfg_of(4, 4, 2, 0, 2)).value, 2);
  EXPECT_EQ(fronthaul_multiplicity(cfg_of(8, 32, 4, 0, 5)).value, 3);
  EXPECT_EQ(fronthaul_multiplicity(cfg_of(4, 8, 2, 0, 8)).value, 4);
  EXPECT_EQ(fronthaul_multiplicity(cfg_of(4, 8, 2, 0, 50)).value, 4);
}

TEST(NearestPositiveSqrt, TiesRoundUpAndFloorIsOne) {
  EXPECT_EQ(nearest_positive_sqrt(0), 1);
  EXPECT_EQ(nearest_positive_sqrt(ratio(1, 10)), 1);
  EXPECT_EQ(nearest_positive_sqrt(4), 2);
  // sqrt(y) = 2.5 exactly.
  EXPECT_EQ(nearest_positive_sqrt(ratio(25, 4)), 3);
  EXPECT_EQ(nearest_positive_sqrt(ratio(25, 4) - ratio(1, 1000000)), 2);
  EXPECT_EQ(nearest_positive_sqrt(ratio(9, 4)), 2);
  EXPECT_EQ(nearest_positive_sqrt(ratio(9, 4) - ratio(1, 1000000)), 1);
  EXPECT_EQ(nearest_positive_sqrt(1000000), 1000);
  EXPECT_THROW(nearest_positive_sqrt(-1), DomainError);
}

TEST(SerialMultiplicity, Examples) {
  EXPECT_EQ(serial_multiplicity(cfg_of(4, 4, 2, ratio(1, 4), 2)).value, 2);
  EXPECT_EQ(serial_multiplicity(cfg_of(4, 4, 2, ratio(1, 2), 0)).value, 2);
  EXPECT_EQ(serial_multiplicity(cfg_of(4, 8, 2, 1, 0)).value, 4);
  EXPECT_EQ(cache_multiplicity(cfg_of(4, 4, 2, ratio(1, 8), 0)).value, 0);
}

TEST(EqualLoadMultiplicity, Examples) {
  EXPECT_NEAR(equal_load_multiplicity(cfg_load(8, 32, 4, 3, 5)), 5.0, 1e-12);
  EXPECT_NEAR(equal_load_multiplicity(cfg_of(4, 4, 2, 0, 2)), 2.0, 1e-12);
  EXPECT_LT(equal_load_multiplicity(cfg_of(4, 4, 2, 0, ratio(1, 1000000))), 0.01);
  EXPECT_THROW(equal_load_multiplicity(cfg_of(4, 4, 2, ratio(1, 2), 0)), DomainError);
}

TEST(PipelinedMultiplicity, Examples) {
  EXPECT_EQ(pipelined_multiplicity(cfg_load(8, 32, 4, 3, 5)).value, 5);
  EXPECT_EQ(pipelined_multiplicity(cfg_load(8, 32, 4, 7, 5)).value, 8);
  EXPECT_EQ(pipelined_saturation_load(cfg_of(8, 32, 4, 0, 5)), ratio(27, 4));
  EXPECT_EQ(pipelined_multiplicity(cfg_of(8, 32, 4, 1, 5)).value, 8);
  EXPECT_EQ(pipelined_multiplicity(cfg_of(4, 8, 2, 1, 0)).value, 4);
  EXPECT_THROW(pipelined_multiplicity(cfg_of(4, 4, 2, ratio(1, 8), 0)), InfeasibleError);
}

TEST(BoundMultiplicity, Examples) {
  EXPECT_NEAR(serial_bound_multiplicity(cfg_of(4, 4, 2, 0, 2)), 2.0, 1e-12);
  EXPECT_EQ(serial_bound_multiplicity(cfg_of(4, 4, 2, 0, 0)), 1.0);
  EXPECT_NEAR(pipelined_bound_multiplicity(cfg_load(8, 32, 4, 3, 5)), 5.0, 1e-12);
}

TEST(ModelProperties, UsersServedBounds) {
  for (int k_r : {1, 3, 4, 8, 17, 32})
    for (int n_t = 1; n_t <= 5; ++n_t)
      for (int m = 1; m <= 8; ++m) {
        SystemConfig cfg = cfg_of(8, k_r, n_t, 0, 1);
        int u = users_served(Multiplicity(m), cfg);
        EXPECT_LE(u, m * n_t);
        EXPECT_LE(u, k_r);
      }
}

TEST(ModelProperties, FronthaulMultiplicityMonotone) {
  const std::vector<Rational> rates = {ratio(1, 10), ratio(1, 2), 1, 2, 3, 5, 10, 40};
  for (int k_r : {4, 8, 16, 32})
    for (int n_t = 1; n_t <= 4; ++n_t)
      for (int k_t = 1; k_t <= 8; ++k_t)
        for (size_t i = 0; i < rates.size(); ++i) {
          int m = fronthaul_multiplicity(cfg_of(k_t, k_r, n_t, 0, rates[i])).value;
          if (i + 1 < rates.size()) {
            EXPECT_LE(m, fronthaul_multiplicity(cfg_of(k_t, k_r, n_t, 0, rates[i + 1])).value);
          }
          if (k_t < 8) {
            EXPECT_LE(m, fronthaul_multiplicity(cfg_of(k_t + 1, k_r, n_t, 0, rates[i])).value);
          }
          if (n_t < 4) {
            // Hold K_T*r fixed while adding antennas.
            EXPECT_GE(m, fronthaul_multiplicity(cfg_of(k_t, k_r, n_t + 1, 0, rates[i])).value);
          }
        }
}

TEST(ModelProperties, SerialMultiplicityLowerBounds) {
  for_each_grid_point([](const SystemConfig& cfg) {
    int m = serial_multiplicity(cfg).value;
    int m_max = max_multiplicity(cfg).value;
    int fl = cfg.cached_multiplicity_floor();
    EXPECT_GE(m, std::min(fl, m_max)) << describe(cfg);
    if (cfg.cache_load() <= m_max) {
      EXPECT_GE(m, fl) << describe(cfg);
    }
    int m_r = fronthaul_multiplicity(cfg).value;
    if (cfg.cache_load() < m_r) {
      EXPECT_GE(m, m_r) << describe(cfg);
    }
    EXPECT_GE(m, 1);
    EXPECT_LE(m, m_max);
  });
}

TEST(ModelProperties, PipelinedMultiplicityAtLeastSerial) {
  long violations = 0;
  std::string first;
  for_each_grid_point([&](const SystemConfig& cfg) {
    if (pipelined_multiplicity(cfg).value >= serial_multiplicity(cfg).value) return;
    if (violations++ == 0) first = describe(cfg);
  });
  EXPECT_EQ(violations, 0) << "first: " << first;
}

// The literal inequality above fails only where m(r) rounds sqrt(K_T r/n_T) up
// past m_eq, giving floor(m_eq) = m(r) - 1. Every failure must be that case.
// The pipelined NDT still never exceeds the serial one (test_ndt_pipelined).
TEST(ModelProperties, PipelinedMultiplicityAtLeastSerialExceptRoundUp) {
  long points = 0;
  long rounding_exceptions = 0;
  for_each_grid_point([&](const SystemConfig& cfg) {
    ++points;
    int m_p = pipelined_multiplicity(cfg).value;
    int m_s = serial_multiplicity(cfg).value;
    if (m_p >= m_s) return;
    ++rounding_exceptions;
    int m_r = fronthaul_multiplicity(cfg).value;
    EXPECT_LT(cfg.cache_load(), m_r) << describe(cfg);
    EXPECT_EQ(m_s, m_r) << describe(cfg);
    EXPECT_LT(equal_load_multiplicity(cfg), m_r) << describe(cfg);
    EXPECT_EQ(m_p, m_r - 1) << describe(cfg);
  });
  EXPECT_EQ(points, 7392);
  // Count from an independent enumeration of the same grid.
  EXPECT_EQ(rounding_exceptions, 174);
}

TEST(ModelProperties, PipelinedBelowSerialCounterexample) {
  SystemConfig cfg = cfg_of(2, 4, 3, 0, 5);
  EXPECT_EQ(fronthaul_multiplicity(cfg).value, 2);
  EXPECT_NEAR(equal_load_multiplicity(cfg), std::sqrt(10.0 / 3.0), 1e-12);
  EXPECT_EQ(pipelined_multiplicity(cfg).value, 1);
  EXPECT_EQ(serial_multiplicity(cfg).value, 2);
}

TEST(ModelProperties, EqualLoadBalancesFronthaulAndEdge) {
  for_each_grid_point([](const SystemConfig& cfg) {
    double m = equal_load_multiplicity(cfg);
    double load = to_double(cfg.cache_load());
    double r = to_double(cfg.r);
    double delta_f = cfg.k_r * (m - load) / (cfg.k_t * r);
    double delta_e = cfg.k_r / (m * cfg.n_t);
    EXPECT_NEAR(delta_f / delta_e, 1.0, 1e-12) << describe(cfg);
  });
}

TEST(ModelProperties, PipelinedMultiplicityIsFloorOfEqualLoad) {
  for_each_grid_point([](const SystemConfig& cfg) {
    int m_p = pipelined_multiplicity(cfg).value;
    int m_max = max_multiplicity(cfg).value;
    if (cfg.cache_load() >= pipelined_saturation_load(cfg)) {
      EXPECT_EQ(m_p, m_max);
      return;
    }
    double m_eq = equal_load_multiplicity(cfg);
    EXPECT_EQ(m_p, std::max(1, static_cast<int>(std::floor(m_eq + 1e-12)))) << describe(cfg);
  });
}
