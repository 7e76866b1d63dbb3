#include "fran/scheme_io.hpp"

namespace fran {

using nlohmann::json;

namespace {

json packet_json(const PacketId& p) { return json::array({p.file, p.part, p.piece}); }

PacketId packet_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ConfigError("packet must be a [file, part, piece] triple");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json packet_sets_json(const std::vector<std::vector<PacketId>>& sets) {
  json out = json::array();
  for (const auto& set : sets) {
    json row = json::array();
    for (const auto& p : set) row.push_back(packet_json(p));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<PacketId>> packet_sets_from(const json& j) {
  std::vector<std::vector<PacketId>> out;
  for (const auto& row : j) {
    out.emplace_back();
    for (const auto& p : row) out.back().push_back(packet_from(p));
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError(std::string("field '") + key + "' must be an integer or a \"p/q\" string");
}

}  // namespace

json config_to_json(const SystemConfig& cfg) {
  return {{"k_t", cfg.k_t},
          {"k_r", cfg.k_r},
          {"n_t", cfg.n_t},
          {"n_files", cfg.n_files},
          {"mu", to_fraction_string(cfg.mu)},
          {"r", to_fraction_string(cfg.r)}};
}

SystemConfig config_from_json(const json& doc) {
  try {
    int k_r = field(doc, "k_r").get<int>();
    int n_files = doc.contains("n_files") ? doc.at("n_files").get<int>() : k_r;
    return make_config(field(doc, "k_t").get<int>(), k_r, field(doc, "n_t").get<int>(),
                       rational_field(doc, "mu"), rational_field(doc, "r"), n_files);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
}

json scheme_to_json(const SynthesizedScheme& s) {
  const PlacementPlan& p = s.placement;
  json placement = {{"m", p.m.value},
                    {"f_c", p.f_c},
                    {"f_d", p.f_d},
                    {"f_s", p.f_s},
                    {"f_total", p.f_total},
                    {"b_d", p.b_d},
                    {"cached_multiplicity", p.cached_multiplicity},
                    {"cached_per_part", p.cached_per_part},
                    {"clusters", p.en_clusters},
                    {"cache_sets", packet_sets_json(p.cache_sets)}};
  json fronthaul = {{"demand", s.fronthaul.demand}, {"sets", packet_sets_json(s.fronthaul.sets)}};
  json blocks = json::array();
  for (const Block& b : s.schedule.blocks) {
    json assignments = json::array();
    for (const auto& a : b.assignments) {
      assignments.push_back({{"user", a.user}, {"packet", packet_json(a.packet)}});
    }
    blocks.push_back({{"cluster_index", b.cluster_index},
                      {"cluster", b.cluster},
                      {"group_index", b.group_index},
                      {"group", b.group},
                      {"assignments", std::move(assignments)}});
  }
  return {{"config", config_to_json(s.cfg)},
          {"placement", std::move(placement)},
          {"fronthaul", std::move(fronthaul)},
          {"schedule", {{"block_count", s.schedule.blocks.size()}, {"blocks", std::move(blocks)}}}};
}

SynthesizedScheme scheme_from_json(const json& doc) {
  try {
    SynthesizedScheme s;
    s.cfg = config_from_json(field(doc, "config"));
    const json& p = field(doc, "placement");
    s.placement.m = Multiplicity(field(p, "m").get<int>());
    s.placement.n_files = s.cfg.n_files;
    s.placement.f_c = field(p, "f_c").get<int>();
    s.placement.f_d = field(p, "f_d").get<int>();
    s.placement.f_s = field(p, "f_s").get<int>();
    s.placement.f_total = field(p, "f_total").get<int>();
    s.placement.b_d = field(p, "b_d").get<int>();
    s.placement.cached_multiplicity = field(p, "cached_multiplicity").get<int>();
    s.placement.cached_per_part = field(p, "cached_per_part").get<int>();
    s.placement.en_clusters = field(p, "clusters").get<std::vector<std::vector<int>>>();
    s.placement.cache_sets = packet_sets_from(field(p, "cache_sets"));
    const json& f = field(doc, "fronthaul");
    s.fronthaul.demand = field(f, "demand").get<std::vector<int>>();
    s.fronthaul.sets = packet_sets_from(field(f, "sets"));
    for (const json& b : field(field(doc, "schedule"), "blocks")) {
      Block block;
      block.cluster_index = field(b, "cluster_index").get<int>();
      block.cluster = field(b, "cluster").get<std::vector<int>>();
      block.group_index = field(b, "group_index").get<int>();
      block.group = field(b, "group").get<std::vector<int>>();
      for (const json& a : field(b, "assignments")) {
        block.assignments.push_back({field(a, "user").get<int>(), packet_from(field(a, "packet"))});
      }
      s.schedule.blocks.push_back(std::move(block));
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scheme document: ") + e.what());
  }
}

}  // namespace fran
