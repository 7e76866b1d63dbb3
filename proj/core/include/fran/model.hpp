#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fran/rational.hpp"

namespace fran {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the mathematical domain of an operation (m = 0, r = 0 for m_eq, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The configuration admits no finite delivery time (r = 0 with mu*K_T < 1),
/// or an operation would need fronthaul on a zero-rate link.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One F-RAN instance: K_T edge nodes with n_T antennas each, K_R single-antenna
/// users, a library of N files, fractional cache size mu and fronthaul ratio r.
struct SystemConfig {
  int k_t = 1;
  int k_r = 1;
  int n_t = 1;
  int n_files = 1;
  Rational mu{0};
  Rational r{0};

  /// mu*K_T, the per-file cache budget summed over all edge nodes.
  Rational cache_load() const { return mu * k_t; }

  /// floor(mu*K_T).
  int cached_multiplicity_floor() const;
};

/// Builds and validates a configuration; n_files defaults to k_r.
SystemConfig make_config(int k_t, int k_r, int n_t, Rational mu, Rational r, int n_files = 0);

/// Throws ConfigError when any structural invariant is violated.
void validate(const SystemConfig& cfg);

/// False only for r = 0 with mu*K_T < 1.
bool is_feasible(const SystemConfig& cfg);

void require_feasible(const SystemConfig& cfg);

std::string describe(const SystemConfig& cfg);

/// Number of edge nodes holding a given piece of content.
struct Multiplicity {
  int value = 0;

  constexpr Multiplicity() = default;
  constexpr explicit Multiplicity(int v) : value(v) {}

  friend constexpr auto operator<=>(Multiplicity, Multiplicity) = default;
};

enum class Regime { EdgeOnly, CloudAndEdge };
enum class DeliveryMode { Serial, Pipelined };

std::string_view to_string(Regime regime);
std::string_view to_string(DeliveryMode mode);

/// Exact fronthaul / edge NDT split. delta is the sum (serial) or the max (pipelined).
struct NdtBreakdown {
  Rational delta_f{0};
  Rational delta_e{0};
  Rational delta{0};
  Regime regime = Regime::EdgeOnly;
  Multiplicity multiplicity{};
  DeliveryMode mode = DeliveryMode::Serial;
};

NdtBreakdown combine(Rational delta_f, Rational delta_e, Multiplicity m, DeliveryMode mode);

// --- elementary multiplicity functions -------------------------------------

/// u(m) = min(m*n_T, K_R): users served interference-free by a cluster of m ENs.
int users_served(Multiplicity m, const SystemConfig& cfg);

/// m_max = min(K_T, ceil(K_R/n_T)).
Multiplicity max_multiplicity(const SystemConfig& cfg);

/// r_th = n_T*m_max^2/K_T; at or above it fronthaul alone reaches m_max.
Rational threshold_rate(const SystemConfig& cfg);

/// Nearest positive integer to sqrt(y), computed exactly. Half-integer ties
/// round up; the result is never below one.
int nearest_positive_sqrt(const Rational& y);

/// m(r): multiplicity chosen from fronthaul alone.
Multiplicity fronthaul_multiplicity(const SystemConfig& cfg);

/// m(mu) = min(floor(mu*K_T), m_max). May be zero.
Multiplicity cache_multiplicity(const SystemConfig& cfg);

/// m(mu, r) used by the serial scheme.
Multiplicity serial_multiplicity(const SystemConfig& cfg);

/// Real multiplicity at which the fronthaul and edge NDTs coincide. Requires r > 0.
double equal_load_multiplicity(const SystemConfig& cfg);

/// m_max - K_T*r/(m_max*n_T): cache load beyond which pipelining reaches m_max.
Rational pipelined_saturation_load(const SystemConfig& cfg);

/// m_p(mu, r) used by the pipelined scheme. floor(m_eq) is evaluated exactly.
/// With r = 0 this degenerates to m(mu) and needs mu*K_T >= 1.
Multiplicity pipelined_multiplicity(const SystemConfig& cfg);

/// m*(r) of the serial lower bound.
double serial_bound_multiplicity(const SystemConfig& cfg);

/// m_p*(mu, r) of the pipelined lower bound.
double pipelined_bound_multiplicity(const SystemConfig& cfg);

/// Comparison tolerance for quantities that involve square roots.
inline constexpr double kRealTolerance = 1e-9;

}  // namespace fran
