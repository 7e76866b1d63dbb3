#include "fran/ndt_serial.hpp"

#include <algorithm>
#include <cmath>

namespace fran {

Rational edge_ndt(Multiplicity m, const SystemConfig& cfg) {
  return ratio(cfg.k_r, users_served(m, cfg));
}

Rational fronthaul_ndt(int extra_multiplicity, const SystemConfig& cfg) {
  if (extra_multiplicity < 0) throw DomainError("negative fronthaul multiplicity");
  if (extra_multiplicity == 0) return Rational(0);
  if (cfg.r == 0) throw InfeasibleError("fronthaul transfer requested with r = 0");
  return Rational(static_cast<long>(cfg.k_r) * extra_multiplicity) / (cfg.r * cfg.k_t);
}

NdtBreakdown scheme_breakdown(const SystemConfig& cfg, Multiplicity m, DeliveryMode mode) {
  int extra = std::max(m.value - cfg.cached_multiplicity_floor(), 0);
  return combine(fronthaul_ndt(extra, cfg), edge_ndt(m, cfg), m, mode);
}

NdtBreakdown achievable_serial_raw(const SystemConfig& cfg) {
  require_feasible(cfg);
  Multiplicity m = serial_multiplicity(cfg);
  NdtBreakdown out = scheme_breakdown(cfg, m);
  // Above m(r) the scheme relies on caches only.
  if (cfg.cache_load() >= fronthaul_multiplicity(cfg).value && out.delta_f != 0) {
    throw std::logic_error("edge-only regime produced fronthaul traffic");
  }
  return out;
}

PiecewiseLinearNdt serial_envelope(const SystemConfig& cfg) {
  std::vector<Breakpoint> points;
  SystemConfig at = cfg;
  for (int load = 0; load <= cfg.k_t; ++load) {
    at.mu = ratio(load, cfg.k_t);
    if (!is_feasible(at)) continue;
    points.push_back({at.mu, achievable_serial_raw(at).delta});
  }
  if (points.empty()) throw InfeasibleError("no feasible cache size for " + describe(cfg));
  return PiecewiseLinearNdt::lower_convex_envelope(std::move(points));
}

Rational achievable_serial(const SystemConfig& cfg) {
  require_feasible(cfg);
  return serial_envelope(cfg).evaluate(cfg.mu);
}

std::optional<double> relaxation_bound(const SystemConfig& cfg) {
  if (!is_feasible(cfg)) return std::nullopt;
  double load = to_double(cfg.cache_load());
  double m_star = serial_bound_multiplicity(cfg);
  double k_r = cfg.k_r;
  if (load < m_star) {
    return k_r * (m_star - load) / (cfg.k_t * to_double(cfg.r)) + k_r / (m_star * cfg.n_t);
  }
  return k_r / (load * cfg.n_t);
}

std::optional<double> lower_bound_serial(const SystemConfig& cfg) {
  auto bound = relaxation_bound(cfg);
  if (!bound) return std::nullopt;
  return std::max(*bound, 1.0);
}

std::optional<Rational> exact_serial(const SystemConfig& cfg) {
  if (!is_feasible(cfg)) return std::nullopt;
  const Rational load = cfg.cache_load();
  const Rational k_r(cfg.k_r);
  auto at_least_one = [](Rational x) { return x < 1 ? Rational(1) : x; };
  // Low cache and low fronthaul: single-EN delivery with fronthaul top-up.
  // The closed form assumes n_T <= K_R (otherwise u(1) = K_R, not n_T).
  if (load <= 1 && cfg.r > 0 && cfg.r <= ratio(cfg.n_t, cfg.k_t) && cfg.n_t <= cfg.k_r) {
    return at_least_one(k_r * (1 - load) / (cfg.r * cfg.k_t) + k_r / cfg.n_t);
  }
  const int m_r = fronthaul_multiplicity(cfg).value;
  const int m_max = max_multiplicity(cfg).value;
  const bool integer_regime = is_integer(load) && load >= m_r + 1 && load <= m_max;
  const bool saturated = load > m_max && load <= cfg.k_t;
  if (integer_regime || saturated) return at_least_one(k_r / (load * cfg.n_t));
  return std::nullopt;
}

SerialBoundReport analyze_serial(const SystemConfig& cfg) {
  require_feasible(cfg);
  SerialBoundReport out;
  out.raw = achievable_serial_raw(cfg);
  out.achievable = achievable_serial(cfg);
  out.lower_bound = lower_bound_serial(cfg);
  out.exact = exact_serial(cfg);
  out.gap_ratio = to_double(out.achievable) / *out.lower_bound;
  return out;
}

double gap_serial(const SystemConfig& cfg) { return analyze_serial(cfg).gap_ratio; }

MultiplicityChoice best_serial_multiplicity(const SystemConfig& cfg) {
  require_feasible(cfg);
  std::optional<MultiplicityChoice> best;
  for (int m = 1; m <= max_multiplicity(cfg).value; ++m) {
    if (cfg.r == 0 && m > cfg.cached_multiplicity_floor()) break;
    Rational ndt = scheme_breakdown(cfg, Multiplicity(m)).delta;
    if (!best || ndt < best->ndt) best = MultiplicityChoice{Multiplicity(m), ndt};
  }
  return *best;
}

}  // namespace fran
