#include "fran/lp_oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fran/ndt_serial.hpp"

namespace fran {

namespace {

std::vector<std::vector<int>> ordered_demands(int n_files, int k_r) {
  std::vector<std::vector<int>> out;
  // Every ordered selection of k_r distinct files.
  std::vector<int> pick;
  std::vector<char> used(n_files, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(pick.size()) == k_r) {
      out.push_back(pick);
      return;
    }
    for (int f = 0; f < n_files; ++f) {
      if (used[f]) continue;
      used[f] = 1;
      pick.push_back(f);
      self(self);
      pick.pop_back();
      used[f] = 0;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

int LpInstance::gamma(int file, int subset) const {
  return file * static_cast<int>(subsets.size()) + subset;
}

int LpInstance::phi(int demand, int slot, int subset) const {
  const int s = static_cast<int>(subsets.size());
  return cfg.n_files * s + (demand * cfg.k_r + slot) * s + subset;
}

int LpInstance::delta_f(int demand) const {
  const int s = static_cast<int>(subsets.size());
  return cfg.n_files * s + static_cast<int>(demands.size()) * cfg.k_r * s + demand;
}

LpInstance build_lp(const SystemConfig& cfg, const std::vector<int>& en_permutation) {
  validate(cfg);
  if (cfg.r <= 0) throw ConfigError("the oracle needs r > 0");
  if (cfg.k_t > kMaxOracleEdgeNodes || cfg.k_r > kMaxOracleUsers || cfg.n_files != cfg.k_r) {
    throw ConfigError("oracle instances need K_T <= 3 and N = K_R <= 3");
  }
  std::vector<int> perm = en_permutation;
  if (perm.empty()) {
    perm.resize(cfg.k_t);
    std::iota(perm.begin(), perm.end(), 0);
  }
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(cfg.k_t);
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) throw ConfigError("en_permutation must be a permutation of the EN indices");
  }

  LpInstance inst;
  inst.cfg = cfg;
  for (unsigned mask = 1; mask < (1u << cfg.k_t); ++mask) {
    unsigned relabeled = 0;
    for (int i = 0; i < cfg.k_t; ++i) {
      if (mask & (1u << i)) relabeled |= 1u << perm[i];
    }
    inst.subsets.push_back(relabeled);
  }
  inst.demands = ordered_demands(cfg.n_files, cfg.k_r);
  const int n_subsets = static_cast<int>(inst.subsets.size());
  const int n_demands = static_cast<int>(inst.demands.size());
  const int m_max = max_multiplicity(cfg).value;
  Rational headroom = Rational(m_max) - cfg.cache_load();
  inst.fronthaul_cap = headroom > 0 ? Rational(cfg.k_r * headroom / (cfg.r * cfg.k_t)) : Rational(0);

  lp::LinearProgram& lp = inst.program;
  const int total = cfg.n_files * n_subsets + n_demands * cfg.k_r * n_subsets + n_demands;
  for (int v = 0; v < total; ++v) lp.add_variable();
  const Rational weight(1, n_demands);
  auto edge_cost = [&](unsigned mask) { return weight / (std::popcount(mask) * cfg.n_t); };

  for (int d = 0; d < n_demands; ++d) {
    for (int slot = 0; slot < cfg.k_r; ++slot) {
      const int file = inst.demands[d][slot];
      lp::Constraint complete{{}, lp::Relation::Equal, Rational(1)};
      for (int s = 0; s < n_subsets; ++s) {
        lp.objective[inst.gamma(file, s)] += edge_cost(inst.subsets[s]);
        lp.objective[inst.phi(d, slot, s)] += edge_cost(inst.subsets[s]);
        complete.terms.push_back({inst.gamma(file, s), Rational(1)});
        complete.terms.push_back({inst.phi(d, slot, s), Rational(1)});
      }
      lp.add_constraint(std::move(complete));
    }
    lp.objective[inst.delta_f(d)] += weight;
  }
  for (int en = 0; en < cfg.k_t; ++en) {
    lp::Constraint cache{{}, lp::Relation::LessEqual, cfg.mu * cfg.n_files};
    for (int n = 0; n < cfg.n_files; ++n) {
      for (int s = 0; s < n_subsets; ++s) {
        if (inst.subsets[s] & (1u << en)) cache.terms.push_back({inst.gamma(n, s), Rational(1)});
      }
    }
    lp.add_constraint(std::move(cache));
  }
  for (int d = 0; d < n_demands; ++d) {
    for (int en = 0; en < cfg.k_t; ++en) {
      // (1/r) * fronthaul load of EN en <= delta_F(d), scaled by r.
      lp::Constraint load{{}, lp::Relation::LessEqual, Rational(0)};
      for (int slot = 0; slot < cfg.k_r; ++slot) {
        for (int s = 0; s < n_subsets; ++s) {
          if (inst.subsets[s] & (1u << en)) load.terms.push_back({inst.phi(d, slot, s), Rational(1)});
        }
      }
      load.terms.push_back({inst.delta_f(d), Rational(-cfg.r)});
      lp.add_constraint(std::move(load));
    }
    lp.add_constraint({{{inst.delta_f(d), Rational(1)}}, lp::Relation::LessEqual, inst.fronthaul_cap});
  }
  return inst;
}

LpResult solve_lp(const LpInstance& inst) {
  LpResult out;
  lp::Solution sol = lp::solve(inst.program);
  out.status = sol.status;
  out.pivots = sol.pivots;
  if (sol.status != lp::Status::Optimal) return out;
  out.optimum = sol.objective;
  out.max_violation = lp::max_violation(inst.program, sol.x);

  const SystemConfig& cfg = inst.cfg;
  const int n_subsets = static_cast<int>(inst.subsets.size());
  const int n_demands = static_cast<int>(inst.demands.size());
  // Per-demand NDT and the average fronthaul share of each (file, subset).
  std::vector<Rational> phi_sum(static_cast<std::size_t>(cfg.n_files) * n_subsets, Rational(0));
  std::vector<int> containing(cfg.n_files, 0);
  for (int d = 0; d < n_demands; ++d) {
    Rational value = sol.x[inst.delta_f(d)];
    for (int slot = 0; slot < cfg.k_r; ++slot) {
      const int file = inst.demands[d][slot];
      ++containing[file];
      for (int s = 0; s < n_subsets; ++s) {
        const Rational per_antenna(1, std::popcount(inst.subsets[s]) * cfg.n_t);
        value += (sol.x[inst.gamma(file, s)] + sol.x[inst.phi(d, slot, s)]) * per_antenna;
        phi_sum[file * n_subsets + s] += sol.x[inst.phi(d, slot, s)];
      }
    }
    out.worst_demand = d == 0 ? value : std::max(out.worst_demand, value);
  }
  Rational x(0);
  for (int n = 0; n < cfg.n_files; ++n) {
    for (int s = 0; s < n_subsets; ++s) {
      Rational phi_avg = containing[n] > 0 ? Rational(phi_sum[n * n_subsets + s] / containing[n]) : Rational(0);
      x += (sol.x[inst.gamma(n, s)] + phi_avg) * std::popcount(inst.subsets[s]);
    }
  }
  out.average_multiplicity = x / cfg.n_files;
  return out;
}

SandwichReport sandwich_check(const SystemConfig& cfg) {
  SandwichReport rep;
  LpResult res = solve_lp(build_lp(cfg));
  if (res.status != lp::Status::Optimal) return rep;
  rep.f_min = *relaxation_bound(cfg);
  rep.lp_opt = res.optimum;
  rep.achievable_raw = achievable_serial_raw(cfg).delta;
  rep.x = res.average_multiplicity;
  const Rational load = cfg.cache_load();
  const Rational m_max(max_multiplicity(cfg).value);
  rep.x_min = std::max(Rational(1), load);
  rep.x_max = std::max(m_max, load);
  const double lp_value = to_double(rep.lp_opt);
  rep.lower_ok = rep.f_min - kOracleTolerance <= lp_value;
  rep.upper_ok = lp_value <= to_double(rep.achievable_raw) + kOracleTolerance;
  rep.x_ok = rep.x_min <= rep.x && rep.x <= rep.x_max;
  return rep;
}

}  // namespace fran
