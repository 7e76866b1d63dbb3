#include "fran/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fran {

int SystemConfig::cached_multiplicity_floor() const {
  return static_cast<int>(floor_to_int(cache_load()));
}

SystemConfig make_config(int k_t, int k_r, int n_t, Rational mu, Rational r, int n_files) {
  SystemConfig cfg;
  cfg.k_t = k_t;
  cfg.k_r = k_r;
  cfg.n_t = n_t;
  cfg.n_files = n_files > 0 ? n_files : k_r;
  cfg.mu = std::move(mu);
  cfg.r = std::move(r);
  validate(cfg);
  return cfg;
}

void validate(const SystemConfig& cfg) {
  if (cfg.k_t < 1) throw ConfigError("K_T must be at least 1");
  if (cfg.k_r < 1) throw ConfigError("K_R must be at least 1");
  if (cfg.n_t < 1) throw ConfigError("n_T must be at least 1");
  if (cfg.n_files < cfg.k_r) throw ConfigError("library size N must be at least K_R");
  if (cfg.mu < 0 || cfg.mu > 1) throw ConfigError("mu must lie in [0, 1]");
  if (cfg.r < 0) throw ConfigError("r must be non-negative");
}

bool is_feasible(const SystemConfig& cfg) { return cfg.r > 0 || cfg.cache_load() >= 1; }

void require_feasible(const SystemConfig& cfg) {
  if (!is_feasible(cfg)) {
    throw InfeasibleError("no finite NDT: r = 0 and mu*K_T < 1 (" + describe(cfg) + ")");
  }
}

std::string describe(const SystemConfig& cfg) {
  std::ostringstream os;
  os << "K_T=" << cfg.k_t << " K_R=" << cfg.k_r << " n_T=" << cfg.n_t << " N=" << cfg.n_files
     << " mu=" << to_fraction_string(cfg.mu) << " r=" << to_fraction_string(cfg.r);
  return os.str();
}

std::string_view to_string(Regime regime) {
  return regime == Regime::EdgeOnly ? "EdgeOnly" : "CloudAndEdge";
}

std::string_view to_string(DeliveryMode mode) {
  return mode == DeliveryMode::Serial ? "serial" : "pipelined";
}

NdtBreakdown combine(Rational delta_f, Rational delta_e, Multiplicity m, DeliveryMode mode) {
  NdtBreakdown out;
  out.delta = mode == DeliveryMode::Serial ? Rational(delta_f + delta_e) : std::max(delta_f, delta_e);
  out.regime = delta_f == 0 ? Regime::EdgeOnly : Regime::CloudAndEdge;
  out.delta_f = std::move(delta_f);
  out.delta_e = std::move(delta_e);
  out.multiplicity = m;
  out.mode = mode;
  return out;
}

int users_served(Multiplicity m, const SystemConfig& cfg) {
  if (m.value < 1) throw DomainError("u(m) requires m >= 1");
  return static_cast<int>(std::min<long>(static_cast<long>(m.value) * cfg.n_t, cfg.k_r));
}

Multiplicity max_multiplicity(const SystemConfig& cfg) {
  int ceil_ratio = (cfg.k_r + cfg.n_t - 1) / cfg.n_t;
  return Multiplicity(std::min(cfg.k_t, ceil_ratio));
}

Rational threshold_rate(const SystemConfig& cfg) {
  int m = max_multiplicity(cfg).value;
  return ratio(static_cast<std::int64_t>(cfg.n_t) * m * m, cfg.k_t);
}

int nearest_positive_sqrt(const Rational& y) {
  if (y < 0) throw DomainError("square root of a negative value");
  // k = floor(sqrt(y)) via integer square root of floor(y); exact because
  // floor(sqrt(y)) == floor(sqrt(floor(y))) for y >= 0.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), fl.get_mpz_t());
  Rational half_up = Rational(k) + Rational(1, 2);
  if (y >= half_up * half_up) k += 1;
  if (k < 1) k = 1;
  return static_cast<int>(k.get_si());
}

Multiplicity fronthaul_multiplicity(const SystemConfig& cfg) {
  if (cfg.r >= threshold_rate(cfg)) return max_multiplicity(cfg);
  Rational arg = cfg.r * cfg.k_t / cfg.n_t;
  return Multiplicity(nearest_positive_sqrt(arg));
}

Multiplicity cache_multiplicity(const SystemConfig& cfg) {
  return Multiplicity(std::min(cfg.cached_multiplicity_floor(), max_multiplicity(cfg).value));
}

Multiplicity serial_multiplicity(const SystemConfig& cfg) {
  Rational load = cfg.cache_load();
  Multiplicity m_r = fronthaul_multiplicity(cfg);
  Multiplicity m_max = max_multiplicity(cfg);
  if (load < m_r.value) return m_r;
  if (load <= m_max.value) return Multiplicity(cfg.cached_multiplicity_floor());
  return m_max;
}

double equal_load_multiplicity(const SystemConfig& cfg) {
  if (cfg.r <= 0) throw DomainError("m_eq requires r > 0");
  double load = to_double(cfg.cache_load());
  double n = cfg.n_t;
  double disc = (load * n) * (load * n) + 4.0 * n * cfg.k_t * to_double(cfg.r);
  return load / 2.0 + std::sqrt(disc) / (2.0 * n);
}

Rational pipelined_saturation_load(const SystemConfig& cfg) {
  int m = max_multiplicity(cfg).value;
  return Rational(m) - cfg.r * cfg.k_t / (static_cast<long>(m) * cfg.n_t);
}

Multiplicity pipelined_multiplicity(const SystemConfig& cfg) {
  Rational load = cfg.cache_load();
  if (cfg.r == 0 && load < 1) {
    throw InfeasibleError("pipelined multiplicity undefined: r = 0 and mu*K_T < 1");
  }
  Multiplicity m_max = max_multiplicity(cfg);
  if (load >= pipelined_saturation_load(cfg)) return m_max;
  // m_eq is the positive root of k^2 - load*k - K_T*r/n_T, so m_eq >= k iff that
  // quadratic is non-positive at k. Below saturation m_eq < m_max.
  Rational c = cfg.r * cfg.k_t / cfg.n_t;
  auto reaches = [&](int k) { return Rational(k) * k - load * k - c <= 0; };
  int k = std::max(cfg.cached_multiplicity_floor(), 0);
  while (k + 1 <= m_max.value && reaches(k + 1)) ++k;
  return Multiplicity(std::max(k, 1));
}

double serial_bound_multiplicity(const SystemConfig& cfg) {
  if (cfg.r >= threshold_rate(cfg)) return max_multiplicity(cfg).value;
  return std::max(std::sqrt(to_double(cfg.r) * cfg.k_t / cfg.n_t), 1.0);
}

double pipelined_bound_multiplicity(const SystemConfig& cfg) {
  if (cfg.cache_load() >= pipelined_saturation_load(cfg)) return max_multiplicity(cfg).value;
  double m_eq = cfg.r > 0 ? equal_load_multiplicity(cfg) : to_double(cfg.cache_load());
  return std::max(m_eq, 1.0);
}

}  // namespace fran
