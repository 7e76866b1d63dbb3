#pragma once

#include <optional>

#include "fran/envelope.hpp"
#include "fran/model.hpp"

namespace fran {

/// delta_E(m) = K_R/u(m).
Rational edge_ndt(Multiplicity m, const SystemConfig& cfg);

/// delta_F for `extra_multiplicity` ENs per packet fed over the fronthaul:
/// K_R*extra/(K_T*r). Zero extra costs nothing even when r = 0.
Rational fronthaul_ndt(int extra_multiplicity, const SystemConfig& cfg);

/// Fronthaul/edge NDT of the clustered ZF scheme run at multiplicity m, with
/// floor(mu*K_T) of the m copies coming from the caches.
NdtBreakdown scheme_breakdown(const SystemConfig& cfg, Multiplicity m,
                              DeliveryMode mode = DeliveryMode::Serial);

/// Serial NDT at m(mu, r) before time sharing.
NdtBreakdown achievable_serial_raw(const SystemConfig& cfg);

/// Lower convex envelope over mu of the raw serial NDT for the (K_T, K_R, n_T, r)
/// of cfg; cfg.mu is ignored. Exact because the raw NDT is constant between
/// consecutive integer values of mu*K_T.
PiecewiseLinearNdt serial_envelope(const SystemConfig& cfg);

/// Achievable serial NDT after time sharing, evaluated at cfg.mu.
Rational achievable_serial(const SystemConfig& cfg);

/// Closed-form bound on the averaged relaxation (without the floor at 1).
/// nullopt when unbounded (r = 0, mu*K_T < 1).
std::optional<double> relaxation_bound(const SystemConfig& cfg);

/// Lower bound on the minimum serial NDT. nullopt when unbounded.
std::optional<double> lower_bound_serial(const SystemConfig& cfg);

/// Minimum serial NDT where it is known in closed form, nullopt elsewhere.
std::optional<Rational> exact_serial(const SystemConfig& cfg);

struct SerialBoundReport {
  NdtBreakdown raw;
  Rational achievable;
  std::optional<double> lower_bound;
  std::optional<Rational> exact;
  double gap_ratio = 1.0;
};

/// Throws InfeasibleError for configurations without a finite NDT.
SerialBoundReport analyze_serial(const SystemConfig& cfg);

double gap_serial(const SystemConfig& cfg);

struct MultiplicityChoice {
  Multiplicity m;
  Rational ndt;
};

/// Exhaustive minimum of the raw serial NDT over m in [1, m_max]. Diagnostic
/// only: the headline numbers use the nearest-integer rule.
MultiplicityChoice best_serial_multiplicity(const SystemConfig& cfg);

}  // namespace fran
