#pragma once

#include <optional>

#include "fran/envelope.hpp"
#include "fran/model.hpp"

namespace fran {

/// Fronthaul/edge split of the scheme at m_p(mu, r) with overlapping transmission.
NdtBreakdown pipelined_breakdown(const SystemConfig& cfg);

/// 1 - K_T*r/n_T, possibly negative. The first branch of the achievable curve
/// applies on [0, threshold] only when this is non-negative.
Rational pipelined_branch_threshold(const SystemConfig& cfg);

/// Achievable pipelined NDT as a function of mu, cfg.mu ignored. With r = 0
/// nothing is pipelined and the serial envelope is returned.
PiecewiseLinearNdt pipelined_envelope(const SystemConfig& cfg);

Rational achievable_pipelined(const SystemConfig& cfg);

/// nullopt when unbounded (r = 0, mu*K_T < 1).
std::optional<double> lower_bound_pipelined(const SystemConfig& cfg);

std::optional<Rational> exact_pipelined(const SystemConfig& cfg);

struct PipelinedBoundReport {
  NdtBreakdown raw;
  Rational achievable;
  std::optional<double> lower_bound;
  std::optional<Rational> exact;
  double gap_ratio = 1.0;
  Multiplicity multiplicity_used{};
};

PipelinedBoundReport analyze_pipelined(const SystemConfig& cfg);

double gap_pipelined(const SystemConfig& cfg);

struct SerialPipelinedRelations {
  double serial_achievable = 0;
  double pipelined_achievable = 0;
  double serial_lower = 0;
  double pipelined_lower = 0;
  bool pipelined_not_worse = false;  // delta_p,ach <= delta_ach
  bool bound_within_half = false;    // delta_p,lb >= delta_lb / 2

  bool ok() const { return pipelined_not_worse && bound_within_half; }
};

SerialPipelinedRelations serial_pipelined_relations(const SystemConfig& cfg);

}  // namespace fran
