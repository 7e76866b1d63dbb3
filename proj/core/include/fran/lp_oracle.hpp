#pragma once

#include <vector>

#include "fran/model.hpp"
#include "fran/simplex.hpp"

namespace fran {

/// Averaged joint cache/fronthaul/edge relaxation for a tiny instance. All
/// quantities are per-file fractions, so the packetization F never appears.
struct LpInstance {
  SystemConfig cfg;
  std::vector<unsigned> subsets;          // non-empty EN subsets as bit masks
  std::vector<std::vector<int>> demands;  // all ordered vectors of K_R distinct files
  lp::LinearProgram program;
  Rational fronthaul_cap{0};  // upper bound imposed on every delta_F(d)

  int gamma(int file, int subset) const;
  int phi(int demand, int slot, int subset) const;  // slot = position of the file in the demand
  int delta_f(int demand) const;
};

inline constexpr int kMaxOracleEdgeNodes = 3;
inline constexpr int kMaxOracleUsers = 3;

/// Requires r > 0, K_T <= 3 and N = K_R <= 3 (ConfigError otherwise).
/// en_permutation relabels the edge nodes; empty means the identity.
LpInstance build_lp(const SystemConfig& cfg, const std::vector<int>& en_permutation = {});

struct LpResult {
  lp::Status status = lp::Status::Infeasible;
  Rational optimum{0};
  Rational worst_demand{0};    // max over demands of that demand's NDT at the solution
  Rational average_multiplicity{0};  // sum_i i*b_i / (N F)
  Rational max_violation{0};
  int pivots = 0;
};

LpResult solve_lp(const LpInstance& instance);

struct SandwichReport {
  double f_min = 0;
  Rational lp_opt{0};
  Rational achievable_raw{0};
  Rational x{0};
  Rational x_min{0};
  Rational x_max{0};
  bool lower_ok = false;  // f_min <= lp_opt
  bool upper_ok = false;  // lp_opt <= achievable_raw
  bool x_ok = false;

  bool ok() const { return lower_ok && upper_ok && x_ok; }
};

inline constexpr double kOracleTolerance = 1e-6;

SandwichReport sandwich_check(const SystemConfig& cfg);

}  // namespace fran
