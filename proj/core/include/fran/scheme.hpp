#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "fran/model.hpp"

namespace fran {

/// Piece `piece` of part `part` of file `file`. All indices are 0-based.
struct PacketId {
  int file = 0;
  int part = 0;
  int piece = 0;

  friend constexpr auto operator<=>(const PacketId&, const PacketId&) = default;
};

struct PlacementPlan {
  Multiplicity m{};
  int n_files = 0;
  int f_c = 0;  // parts per file, one per EN cluster
  int f_d = 0;  // pieces each user collects per pass over the user groups
  int f_s = 0;  // pieces per part
  int f_total = 0;
  int b_d = 0;  // user groups
  int cached_multiplicity = 0;  // min(floor(mu*K_T), m)
  int cached_per_part = 0;      // f_s * cached_multiplicity / m
  std::vector<std::vector<int>> en_clusters;  // cluster i stores part i
  std::vector<std::vector<PacketId>> cache_sets;  // per EN, sorted

  bool edge_only() const { return cached_multiplicity == m.value; }
  int packet_index(const PacketId& p) const { return (p.file * f_c + p.part) * f_s + p.piece; }
};

struct FronthaulPlan {
  std::vector<int> demand;  // demand[k] = file requested by user k
  std::vector<std::vector<PacketId>> sets;  // per EN, sorted
};

struct Assignment {
  int user = 0;
  PacketId packet;
};

struct Block {
  int cluster_index = 0;
  std::vector<int> cluster;
  int group_index = 0;
  std::vector<int> group;
  std::vector<Assignment> assignments;
};

struct DeliverySchedule {
  std::vector<Block> blocks;
};

struct SynthesizedScheme {
  SystemConfig cfg;
  PlacementPlan placement;
  FronthaulPlan fronthaul;
  DeliverySchedule schedule;
};

/// Circular window {[start]_size, ..., [start + count - 1]_size}, 0-based.
std::vector<int> circular_window(int start, int count, int size);

PlacementPlan build_placement(const SystemConfig& cfg, Multiplicity m);

/// Throws ConfigError unless the demand has K_R distinct entries in [0, N).
FronthaulPlan build_fronthaul(const SystemConfig& cfg, const PlacementPlan& plan,
                              const std::vector<int>& demand);

DeliverySchedule build_schedule(const SystemConfig& cfg, const PlacementPlan& plan,
                                const FronthaulPlan& fronthaul);

/// delta_F = max_i |F_i| / (F*r), delta_E = B/F.
NdtBreakdown measure_ndt(const SystemConfig& cfg, const PlacementPlan& plan,
                         const FronthaulPlan& fronthaul, const DeliverySchedule& schedule);

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(std::string_view kind) const;
};

/// Checks every structural invariant of the three artifacts against cfg.
ValidationReport validate(const SystemConfig& cfg, const PlacementPlan& plan,
                          const FronthaulPlan& fronthaul, const DeliverySchedule& schedule);

inline ValidationReport validate(const SynthesizedScheme& s) {
  return validate(s.cfg, s.placement, s.fronthaul, s.schedule);
}

inline NdtBreakdown measure_ndt(const SynthesizedScheme& s) {
  return measure_ndt(s.cfg, s.placement, s.fronthaul, s.schedule);
}

/// Identity demand: user k requests file k.
std::vector<int> identity_demand(const SystemConfig& cfg);

/// Full pipeline. m defaults to m(mu, r); demand defaults to the identity.
SynthesizedScheme synthesize(const SystemConfig& cfg, std::optional<Multiplicity> m = std::nullopt,
                             std::optional<std::vector<int>> demand = std::nullopt);

struct WorkedExample {
  int id = 0;
  SystemConfig cfg;
  Multiplicity m{};
};

/// The four small reference instances (1..4): edge-only with m = 2 and m = 3,
/// fronthaul-only, and the combined cache plus fronthaul case.
WorkedExample worked_example(int id);

}  // namespace fran
