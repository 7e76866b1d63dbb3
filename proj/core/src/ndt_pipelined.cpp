#include "fran/ndt_pipelined.hpp"

#include <algorithm>

#include "fran/ndt_serial.hpp"

namespace fran {

namespace {

Rational at_least_one(Rational x) { return x < 1 ? Rational(1) : x; }

Rational fronthaul_per_rate(const SystemConfig& cfg) { return cfg.r * cfg.k_t / cfg.n_t; }

// mu at which m_eq equals i.
Rational breakpoint_mu(const SystemConfig& cfg, int i) {
  return (Rational(i) - fronthaul_per_rate(cfg) / i) / cfg.k_t;
}

}  // namespace

NdtBreakdown pipelined_breakdown(const SystemConfig& cfg) {
  require_feasible(cfg);
  return scheme_breakdown(cfg, pipelined_multiplicity(cfg), DeliveryMode::Pipelined);
}

Rational pipelined_branch_threshold(const SystemConfig& cfg) { return 1 - fronthaul_per_rate(cfg); }

PiecewiseLinearNdt pipelined_envelope(const SystemConfig& cfg) {
  if (cfg.r == 0) return serial_envelope(cfg);
  const int m_max = max_multiplicity(cfg).value;
  const Rational k_r(cfg.k_r);
  std::vector<Breakpoint> points;
  Rational threshold = pipelined_branch_threshold(cfg);
  Rational start_load(0);
  if (threshold >= 0) {
    // Linear first branch K_R(1 - mu*K_T)/(K_T*r), floored at one.
    Rational at_zero = k_r / (cfg.r * cfg.k_t);
    points.push_back({Rational(0), at_least_one(at_zero)});
    if (at_zero > 1) {
      Rational hits_one = 1 - cfg.r * cfg.k_t / k_r;
      if (hits_one < threshold) points.push_back({hits_one / cfg.k_t, Rational(1)});
    }
    start_load = threshold;
  }
  SystemConfig at = cfg;
  at.mu = start_load / cfg.k_t;
  points.push_back({at.mu, at_least_one(k_r / (pipelined_multiplicity(at).value * cfg.n_t))});
  for (int i = 1; i <= m_max; ++i) {
    Rational mu = breakpoint_mu(cfg, i);
    if (mu * cfg.k_t <= start_load || mu > 1) continue;
    points.push_back({mu, at_least_one(k_r / (i * cfg.n_t))});
  }
  points.push_back({Rational(1), at_least_one(k_r / (m_max * cfg.n_t))});
  return PiecewiseLinearNdt::lower_convex_envelope(std::move(points));
}

Rational achievable_pipelined(const SystemConfig& cfg) {
  require_feasible(cfg);
  return pipelined_envelope(cfg).evaluate(cfg.mu);
}

std::optional<double> lower_bound_pipelined(const SystemConfig& cfg) {
  if (!is_feasible(cfg)) return std::nullopt;
  double k_r = cfg.k_r;
  if (cfg.r > 0) {
    Rational threshold = pipelined_branch_threshold(cfg);
    if (threshold >= 0 && cfg.cache_load() <= threshold) {
      return std::max(k_r * to_double(1 - cfg.cache_load()) / (cfg.k_t * to_double(cfg.r)), 1.0);
    }
  }
  return std::max(k_r / (pipelined_bound_multiplicity(cfg) * cfg.n_t), 1.0);
}

std::optional<Rational> exact_pipelined(const SystemConfig& cfg) {
  if (!is_feasible(cfg)) return std::nullopt;
  if (cfg.r == 0) return exact_serial(cfg);
  const Rational load = cfg.cache_load();
  const Rational k_r(cfg.k_r);
  Rational threshold = pipelined_branch_threshold(cfg);
  if (threshold >= 0 && load <= threshold) return at_least_one(k_r * (1 - load) / (cfg.r * cfg.k_t));
  const int m_max = max_multiplicity(cfg).value;
  if (load > pipelined_saturation_load(cfg)) return at_least_one(k_r / (m_max * cfg.n_t));
  for (int i = 1; i <= m_max; ++i) {
    if (breakpoint_mu(cfg, i) == cfg.mu) return at_least_one(k_r / (i * cfg.n_t));
  }
  return std::nullopt;
}

PipelinedBoundReport analyze_pipelined(const SystemConfig& cfg) {
  require_feasible(cfg);
  PipelinedBoundReport out;
  out.raw = pipelined_breakdown(cfg);
  out.multiplicity_used = out.raw.multiplicity;
  out.achievable = achievable_pipelined(cfg);
  out.lower_bound = lower_bound_pipelined(cfg);
  out.exact = exact_pipelined(cfg);
  out.gap_ratio = to_double(out.achievable) / *out.lower_bound;
  return out;
}

double gap_pipelined(const SystemConfig& cfg) { return analyze_pipelined(cfg).gap_ratio; }

SerialPipelinedRelations serial_pipelined_relations(const SystemConfig& cfg) {
  require_feasible(cfg);
  SerialPipelinedRelations out;
  out.serial_achievable = to_double(achievable_serial(cfg));
  out.pipelined_achievable = to_double(achievable_pipelined(cfg));
  out.serial_lower = *lower_bound_serial(cfg);
  out.pipelined_lower = *lower_bound_pipelined(cfg);
  out.pipelined_not_worse = out.pipelined_achievable <= out.serial_achievable + kRealTolerance;
  out.bound_within_half = out.pipelined_lower >= out.serial_lower / 2 - kRealTolerance;
  return out;
}

}  // namespace fran
