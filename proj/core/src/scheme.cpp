#include "fran/scheme.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fran {

namespace {

std::string packet_str(const PacketId& p) {
  std::ostringstream os;
  os << "(" << p.file << "," << p.part << "," << p.piece << ")";
  return os.str();
}

struct Packetization {
  int f_c, f_d, f_s, f_total, b_d, cached_multiplicity, cached_per_part;
};

Packetization packetization(const SystemConfig& cfg, int m) {
  Packetization p{};
  const int u = users_served(Multiplicity(m), cfg);
  const long l_u = std::lcm<long>(u, cfg.k_r);
  p.f_c = static_cast<int>(std::lcm<long>(m, cfg.k_t) / m);
  p.f_d = static_cast<int>(l_u / cfg.k_r);
  p.b_d = static_cast<int>(l_u / u);
  p.cached_multiplicity = std::min(cfg.cached_multiplicity_floor(), m);
  // Pieces need splitting into cached/uncached halves only when both are present.
  bool split = p.cached_multiplicity > 0 && p.cached_multiplicity < m;
  p.f_s = split ? static_cast<int>(std::lcm<long>(p.f_d, m)) : p.f_d;
  p.f_total = p.f_c * p.f_s;
  p.cached_per_part = p.f_s * p.cached_multiplicity / m;
  return p;
}

void check_demand(const SystemConfig& cfg, const std::vector<int>& demand) {
  if (static_cast<int>(demand.size()) != cfg.k_r) {
    throw ConfigError("demand must list one file per user");
  }
  std::vector<char> seen(cfg.n_files, 0);
  for (int f : demand) {
    if (f < 0 || f >= cfg.n_files) throw ConfigError("demanded file out of range");
    if (seen[f]) throw ConfigError("demand entries must be distinct");
    seen[f] = 1;
  }
}

}  // namespace

bool ValidationReport::has(std::string_view kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::vector<int> circular_window(int start, int count, int size) {
  std::vector<int> out(count);
  for (int t = 0; t < count; ++t) out[t] = (start + t) % size;
  return out;
}

PlacementPlan build_placement(const SystemConfig& cfg, Multiplicity m) {
  validate(cfg);
  if (m.value < 1 || m.value > max_multiplicity(cfg).value) {
    throw DomainError("multiplicity must lie in [1, m_max]");
  }
  Packetization p = packetization(cfg, m.value);
  PlacementPlan plan;
  plan.m = m;
  plan.n_files = cfg.n_files;
  plan.f_c = p.f_c;
  plan.f_d = p.f_d;
  plan.f_s = p.f_s;
  plan.f_total = p.f_total;
  plan.b_d = p.b_d;
  plan.cached_multiplicity = p.cached_multiplicity;
  plan.cached_per_part = p.cached_per_part;
  plan.cache_sets.assign(cfg.k_t, {});
  for (int i = 0; i < p.f_c; ++i) {
    plan.en_clusters.push_back(circular_window(i * m.value, m.value, cfg.k_t));
    for (int en : plan.en_clusters.back()) {
      for (int n = 0; n < cfg.n_files; ++n) {
        for (int j = 0; j < p.cached_per_part; ++j) plan.cache_sets[en].push_back({n, i, j});
      }
    }
  }
  for (auto& set : plan.cache_sets) std::sort(set.begin(), set.end());
  return plan;
}

FronthaulPlan build_fronthaul(const SystemConfig& cfg, const PlacementPlan& plan,
                              const std::vector<int>& demand) {
  check_demand(cfg, demand);
  FronthaulPlan out;
  out.demand = demand;
  out.sets.assign(cfg.k_t, {});
  for (int i = 0; i < plan.f_c; ++i) {
    for (int en : plan.en_clusters[i]) {
      for (int file : demand) {
        for (int j = plan.cached_per_part; j < plan.f_s; ++j) out.sets[en].push_back({file, i, j});
      }
    }
  }
  for (auto& set : out.sets) std::sort(set.begin(), set.end());
  return out;
}

DeliverySchedule build_schedule(const SystemConfig& cfg, const PlacementPlan& plan,
                                const FronthaulPlan& fronthaul) {
  const int u = users_served(plan.m, cfg);
  const int passes = plan.f_s / plan.f_d;
  std::vector<std::vector<int>> next_piece(cfg.k_r, std::vector<int>(plan.f_c, 0));
  DeliverySchedule out;
  out.blocks.reserve(static_cast<std::size_t>(plan.f_c) * passes * plan.b_d);
  for (int i = 0; i < plan.f_c; ++i) {
    for (int pass = 0; pass < passes; ++pass) {
      for (int j = 0; j < plan.b_d; ++j) {
        Block block;
        block.cluster_index = i;
        block.cluster = plan.en_clusters[i];
        block.group_index = j;
        block.group = circular_window(j * u, u, cfg.k_r);
        for (int k : block.group) {
          block.assignments.push_back({k, {fronthaul.demand[k], i, next_piece[k][i]++}});
        }
        out.blocks.push_back(std::move(block));
      }
    }
  }
  return out;
}

NdtBreakdown measure_ndt(const SystemConfig& cfg, const PlacementPlan& plan,
                         const FronthaulPlan& fronthaul, const DeliverySchedule& schedule) {
  std::size_t max_load = 0;
  for (const auto& set : fronthaul.sets) max_load = std::max(max_load, set.size());
  Rational delta_f(0);
  if (max_load > 0) {
    if (cfg.r == 0) throw InfeasibleError("fronthaul plan is non-empty but r = 0");
    delta_f = Rational(static_cast<long>(max_load)) / (cfg.r * plan.f_total);
  }
  Rational delta_e = ratio(static_cast<std::int64_t>(schedule.blocks.size()), plan.f_total);
  return combine(delta_f, delta_e, plan.m, DeliveryMode::Serial);
}

ValidationReport validate(const SystemConfig& cfg, const PlacementPlan& plan,
                          const FronthaulPlan& fronthaul, const DeliverySchedule& schedule) {
  ValidationReport report;
  auto flag = [&](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };

  const int m = plan.m.value;
  if (m < 1 || m > max_multiplicity(cfg).value) {
    flag("multiplicity", "m = " + std::to_string(m) + " outside [1, m_max]");
    return report;
  }
  const Packetization p = packetization(cfg, m);
  if (plan.f_c != p.f_c || plan.f_d != p.f_d || plan.f_s != p.f_s || plan.f_total != p.f_total ||
      plan.b_d != p.b_d || plan.cached_per_part != p.cached_per_part ||
      plan.cached_multiplicity != p.cached_multiplicity) {
    flag("packetization", "counts differ from the lcm construction");
    return report;
  }
  const long f_bound = static_cast<long>(cfg.k_t) * cfg.k_r * (plan.edge_only() ? 1 : m);
  if (plan.f_total > f_bound) flag("packetization_bound", "F = " + std::to_string(plan.f_total));

  const int u = users_served(plan.m, cfg);
  const int n_files = cfg.n_files;
  const std::size_t universe = static_cast<std::size_t>(n_files) * plan.f_total;
  auto in_range = [&](const PacketId& q) {
    return q.file >= 0 && q.file < n_files && q.part >= 0 && q.part < plan.f_c && q.piece >= 0 &&
           q.piece < plan.f_s;
  };

  // Clusters.
  bool clusters_ok = static_cast<int>(plan.en_clusters.size()) == plan.f_c;
  for (int i = 0; clusters_ok && i < plan.f_c; ++i) {
    if (plan.en_clusters[i] != circular_window(i * m, m, cfg.k_t)) {
      flag("cluster", "cluster " + std::to_string(i) + " is not the circular window");
      clusters_ok = false;
    }
  }
  if (!clusters_ok || static_cast<int>(plan.cache_sets.size()) != cfg.k_t ||
      static_cast<int>(fronthaul.sets.size()) != cfg.k_t) {
    if (clusters_ok) flag("shape", "per-EN set count differs from K_T");
    else flag("cluster", "cluster list malformed");
    return report;
  }

  // Caches.
  std::vector<std::vector<char>> available(cfg.k_t, std::vector<char>(universe, 0));
  std::vector<std::vector<char>> cached(cfg.k_t, std::vector<char>(universe, 0));
  for (int en = 0; en < cfg.k_t; ++en) {
    std::vector<long> per_file(n_files, 0);
    for (const auto& q : plan.cache_sets[en]) {
      if (!in_range(q)) {
        flag("packet_range", "EN " + std::to_string(en) + " caches " + packet_str(q));
        continue;
      }
      const auto& owners = plan.en_clusters[q.part];
      if (q.piece >= plan.cached_per_part ||
          std::find(owners.begin(), owners.end(), en) == owners.end()) {
        flag("cache_replication", "EN " + std::to_string(en) + " caches " + packet_str(q) +
                                      " outside its cluster's cached pieces");
      }
      auto idx = plan.packet_index(q);
      if (cached[en][idx]) flag("cache_duplicate", "EN " + std::to_string(en) + " " + packet_str(q));
      cached[en][idx] = available[en][idx] = 1;
      ++per_file[q.file];
    }
    for (int n = 0; n < n_files; ++n) {
      if (Rational(per_file[n]) > cfg.mu * plan.f_total) {
        flag("cache_capacity", "EN " + std::to_string(en) + " stores " + std::to_string(per_file[n]) +
                                   " packets of file " + std::to_string(n));
      }
    }
  }
  for (int i = 0; i < plan.f_c; ++i) {
    for (int en : plan.en_clusters[i]) {
      for (int n = 0; n < n_files; ++n) {
        for (int j = 0; j < plan.cached_per_part; ++j) {
          if (!cached[en][plan.packet_index({n, i, j})]) {
            flag("cache_replication", "EN " + std::to_string(en) + " misses " + packet_str({n, i, j}));
          }
        }
      }
    }
  }

  // Fronthaul.
  bool demand_ok = static_cast<int>(fronthaul.demand.size()) == cfg.k_r;
  std::vector<char> demanded(n_files, 0);
  for (int f : fronthaul.demand) {
    if (f < 0 || f >= n_files || demanded[f]) demand_ok = false;
    else demanded[f] = 1;
  }
  if (!demand_ok) {
    flag("demand", "demand must hold K_R distinct files");
    return report;
  }
  const long expected_load = static_cast<long>(cfg.k_r) * plan.f_total * (m - plan.cached_multiplicity);
  for (int en = 0; en < cfg.k_t; ++en) {
    const auto& set = fronthaul.sets[en];
    if (static_cast<long>(set.size()) * cfg.k_t != expected_load) {
      flag("fronthaul_size", "EN " + std::to_string(en) + " receives " + std::to_string(set.size()));
    }
    for (const auto& q : set) {
      if (!in_range(q) || !demanded[q.file]) {
        flag("fronthaul_demand", "EN " + std::to_string(en) + " receives " + packet_str(q));
        continue;
      }
      auto idx = plan.packet_index(q);
      if (available[en][idx]) {
        flag("fronthaul_duplicate", "EN " + std::to_string(en) + " already holds " + packet_str(q));
      }
      available[en][idx] = 1;
    }
  }

  // Schedule.
  const long expected_blocks = static_cast<long>(plan.f_c) * (plan.f_s / plan.f_d) * plan.b_d;
  if (static_cast<long>(schedule.blocks.size()) != expected_blocks) {
    flag("block_count", std::to_string(schedule.blocks.size()) + " blocks, expected " +
                            std::to_string(expected_blocks));
  }
  std::vector<std::vector<int>> received(cfg.k_r, std::vector<int>(plan.f_total, 0));
  for (std::size_t b = 0; b < schedule.blocks.size(); ++b) {
    const Block& block = schedule.blocks[b];
    const std::string where = "block " + std::to_string(b);
    if (block.cluster_index < 0 || block.cluster_index >= plan.f_c ||
        block.cluster != plan.en_clusters[block.cluster_index]) {
      flag("block_cluster", where + " serving cluster mismatch");
    }
    if (block.group_index < 0 || block.group_index >= plan.b_d ||
        block.group != circular_window(block.group_index * u, u, cfg.k_r)) {
      flag("block_group", where + " user group mismatch");
    }
    if (static_cast<int>(block.assignments.size()) != u) {
      flag("block_size", where + " serves " + std::to_string(block.assignments.size()) + " users");
    }
    std::vector<char> served(cfg.k_r, 0);
    long min_antennas = std::numeric_limits<long>::max();
    for (const auto& a : block.assignments) {
      if (a.user < 0 || a.user >= cfg.k_r) {
        flag("block_user", where + " user " + std::to_string(a.user) + " out of range");
        continue;
      }
      if (std::find(block.group.begin(), block.group.end(), a.user) == block.group.end()) {
        flag("block_user", where + " user " + std::to_string(a.user) + " outside group");
      }
      if (served[a.user]) flag("duplicate_user", where + " user " + std::to_string(a.user));
      served[a.user] = 1;
      if (!in_range(a.packet) || a.packet.file != fronthaul.demand[a.user]) {
        flag("wrong_file", where + " user " + std::to_string(a.user) + " gets " + packet_str(a.packet));
        continue;
      }
      auto idx = plan.packet_index(a.packet);
      long holders = 0;
      for (int en : block.cluster) {
        if (en >= 0 && en < cfg.k_t && available[en][idx]) ++holders;
        else flag("availability", where + " EN " + std::to_string(en) + " lacks " + packet_str(a.packet));
      }
      min_antennas = std::min(min_antennas, holders * cfg.n_t);
      ++received[a.user][idx - static_cast<std::size_t>(a.packet.file) * plan.f_total];
    }
    if (!block.assignments.empty() && static_cast<long>(block.assignments.size()) > min_antennas) {
      flag("antenna_budget", where + " serves " + std::to_string(block.assignments.size()) +
                         " packets with " + std::to_string(min_antennas) + " holding antennas");
    }
  }
  for (int k = 0; k < cfg.k_r; ++k) {
    for (int q = 0; q < plan.f_total; ++q) {
      if (received[k][q] != 1) {
        flag("completeness", "user " + std::to_string(k) + " receives packet " + std::to_string(q) + " " +
                                 std::to_string(received[k][q]) + " times");
      }
    }
  }
  return report;
}

std::vector<int> identity_demand(const SystemConfig& cfg) {
  std::vector<int> d(cfg.k_r);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

SynthesizedScheme synthesize(const SystemConfig& cfg, std::optional<Multiplicity> m,
                             std::optional<std::vector<int>> demand) {
  validate(cfg);
  require_feasible(cfg);
  Multiplicity used = m ? *m : serial_multiplicity(cfg);
  if (cfg.r == 0 && used.value > cfg.cached_multiplicity_floor()) {
    throw InfeasibleError("multiplicity " + std::to_string(used.value) + " needs fronthaul but r = 0");
  }
  SynthesizedScheme out;
  out.cfg = cfg;
  out.placement = build_placement(cfg, used);
  out.fronthaul = build_fronthaul(cfg, out.placement, demand ? *demand : identity_demand(cfg));
  out.schedule = build_schedule(cfg, out.placement, out.fronthaul);
  return out;
}

WorkedExample worked_example(int id) {
  switch (id) {
    case 1: return {1, make_config(4, 4, 2, ratio(1, 2), Rational(0)), Multiplicity(2)};
    case 2: return {2, make_config(4, 8, 2, ratio(3, 4), Rational(0)), Multiplicity(3)};
    case 3: return {3, make_config(4, 4, 2, Rational(0), Rational(2)), Multiplicity(2)};
    case 4: return {4, make_config(4, 4, 2, ratio(1, 4), Rational(2)), Multiplicity(2)};
    default: throw ConfigError("worked examples are numbered 1 to 4");
  }
}

}  // namespace fran
