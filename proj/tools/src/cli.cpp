#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "format.hpp"
#include "fran/gap_scan.hpp"
#include "fran/lp_oracle.hpp"
#include "fran/ndt_pipelined.hpp"
#include "fran/ndt_serial.hpp"
#include "fran/scheme.hpp"
#include "fran/scheme_io.hpp"
#include "fran/zf_verify.hpp"

namespace fran::cli {

namespace {

using nlohmann::json;

std::string json_scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Values from --config fill in every option not given on the command line.
class ConfigFile {
 public:
  void load(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
      doc_ = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!doc_.is_object()) throw ConfigError("config file must hold a JSON object");
  }

  template <class T>
  void fill(const CLI::Option* opt, T& value, const char* key) const {
    if (opt->count() > 0 || !doc_.contains(key)) return;
    try {
      if constexpr (std::is_same_v<T, std::string>) {
        value = json_scalar_text(doc_.at(key));
      } else {
        value = doc_.at(key).get<T>();
      }
    } catch (const json::exception&) {
      throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
  }

 private:
  json doc_ = json::object();
};

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (const char* dir = std::getenv("FRAN_OUTPUT_DIR"); dir != nullptr && *dir != '\0' && p.is_relative()) {
    p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  auto p = resolve_output(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write '" + p.string() + "'");
  f << text;
}

struct SystemFlags {
  int k_t = 0, k_r = 0, n_t = 0, n_files = 0;
  std::string mu, r;
  CLI::Option *o_kt = nullptr, *o_kr = nullptr, *o_nt = nullptr, *o_n = nullptr, *o_mu = nullptr, *o_r = nullptr;

  void add(CLI::App* app, bool with_mu_r = true) {
    o_kt = app->add_option("--kt", k_t, "number of edge nodes K_T");
    o_kr = app->add_option("--kr", k_r, "number of users K_R");
    o_nt = app->add_option("--nt", n_t, "antennas per edge node n_T");
    o_n = app->add_option("--n-files", n_files, "library size N (defaults to K_R)");
    if (with_mu_r) {
      o_mu = app->add_option("--mu", mu, "fractional cache size, e.g. 0.25 or 1/4");
      o_r = app->add_option("--r", r, "fronthaul rate ratio");
    }
  }

  void fill(const ConfigFile& cfg) {
    cfg.fill(o_kt, k_t, "k_t");
    cfg.fill(o_kr, k_r, "k_r");
    cfg.fill(o_nt, n_t, "n_t");
    cfg.fill(o_n, n_files, "n_files");
    if (o_mu) cfg.fill(o_mu, mu, "mu");
    if (o_r) cfg.fill(o_r, r, "r");
  }

  SystemConfig config(const Rational& mu_value, const Rational& r_value) const {
    if (k_t <= 0 || k_r <= 0 || n_t <= 0) throw ConfigError("--kt, --kr and --nt are required");
    return make_config(k_t, k_r, n_t, mu_value, r_value, n_files);
  }

  SystemConfig config() const {
    if (mu.empty() || r.empty()) throw ConfigError("--mu and --r are required");
    return config(parse_rational(mu), parse_rational(r));
  }
};

std::vector<bool> wanted_modes(const std::string& mode) {
  if (mode == "serial") return {true, false};
  if (mode == "pipelined") return {false, true};
  if (mode == "both") return {true, true};
  throw ConfigError("--mode must be serial, pipelined or both");
}

json bound_json(const std::optional<double>& lb, const std::optional<Rational>& exact, const Rational& ach,
                const NdtBreakdown& raw, double gap) {
  return {{"multiplicity", raw.multiplicity.value},
          {"regime", std::string(to_string(raw.regime))},
          {"delta_f", exact_json(raw.delta_f)},
          {"delta_e", exact_json(raw.delta_e)},
          {"delta_raw", exact_json(raw.delta)},
          {"achievable", exact_json(ach)},
          {"lower_bound", approx(*lb)},
          {"is_exact", exact.has_value()},
          {"exact", exact ? exact_json(*exact) : json(nullptr)},
          {"gap", approx(gap)}};
}

// ---------------------------------------------------------------------------

struct AnalyzeCmd {
  SystemFlags sys;
  std::string mode = "both";
  std::string out;
  CLI::Option *o_mode = nullptr, *o_out = nullptr;

  void add(CLI::App* app) {
    sys.add(app);
    o_mode = app->add_option("--mode", mode, "serial, pipelined or both");
    o_out = app->add_option("--out", out, "write the JSON report here instead of stdout");
  }

  int run(const ConfigFile& file, std::ostream& out_stream) {
    sys.fill(file);
    file.fill(o_mode, mode, "mode");
    file.fill(o_out, out, "out");
    auto modes = wanted_modes(mode);
    SystemConfig cfg = sys.config();
    require_feasible(cfg);
    json doc = {{"config", config_to_json(cfg)}};
    if (modes[0]) {
      auto rep = analyze_serial(cfg);
      doc["serial"] = bound_json(rep.lower_bound, rep.exact, rep.achievable, rep.raw, rep.gap_ratio);
    }
    if (modes[1]) {
      auto rep = analyze_pipelined(cfg);
      doc["pipelined"] = bound_json(rep.lower_bound, rep.exact, rep.achievable, rep.raw, rep.gap_ratio);
    }
    emit(out, doc.dump(2) + "\n", out_stream);
    return kSuccess;
  }
};

struct SweepRow {
  int mode = 0;
  Rational r, mu;
  std::string line;
};

std::string sweep_line(const SystemConfig& cfg, bool pipelined) {
  std::ostringstream os;
  os << decimal(to_double(cfg.mu)) << ',' << decimal(to_double(cfg.r)) << ','
     << (pipelined ? "pipelined" : "serial") << ',';
  if (!is_feasible(cfg)) {
    os << "inf,inf,inf,inf,,";
    return os.str();
  }
  if (pipelined) {
    auto rep = analyze_pipelined(cfg);
    os << decimal(to_double(rep.raw.delta_f)) << ',' << decimal(to_double(rep.raw.delta_e)) << ','
       << decimal(to_double(rep.achievable)) << ',' << decimal(*rep.lower_bound) << ',' << decimal(rep.gap_ratio)
       << ',' << (rep.exact ? decimal(to_double(*rep.exact)) : "");
  } else {
    auto rep = analyze_serial(cfg);
    os << decimal(to_double(rep.raw.delta_f)) << ',' << decimal(to_double(rep.raw.delta_e)) << ','
       << decimal(to_double(rep.achievable)) << ',' << decimal(*rep.lower_bound) << ',' << decimal(rep.gap_ratio)
       << ',' << (rep.exact ? decimal(to_double(*rep.exact)) : "");
  }
  return os.str();
}

struct SweepCmd {
  SystemFlags sys;
  std::string mu_list, r_list, mode = "both", out;
  int mu_steps = 0, threads = 0;
  CLI::Option *o_mu_list = nullptr, *o_mu_steps = nullptr, *o_r_list = nullptr, *o_mode = nullptr,
              *o_out = nullptr, *o_threads = nullptr;

  void add(CLI::App* app) {
    sys.add(app, false);
    o_mu_list = app->add_option("--mu-list", mu_list, "comma-separated cache sizes");
    o_mu_steps = app->add_option("--mu-steps", mu_steps, "use mu = i/steps for i = 0..steps (default 2*K_T)");
    o_mu_list->excludes(o_mu_steps);
    o_r_list = app->add_option("--r-list", r_list, "comma-separated fronthaul rates (required)");
    o_mode = app->add_option("--mode", mode, "serial, pipelined or both");
    o_out = app->add_option("--out", out, "CSV output path (stdout when omitted)");
    o_threads = app->add_option("--threads", threads, "worker threads (default: hardware concurrency)");
  }

  int run(const ConfigFile& file, std::ostream& out_stream) {
    sys.fill(file);
    file.fill(o_mu_list, mu_list, "mu_list");
    file.fill(o_mu_steps, mu_steps, "mu_steps");
    file.fill(o_r_list, r_list, "r_list");
    file.fill(o_mode, mode, "mode");
    file.fill(o_out, out, "out");
    auto modes = wanted_modes(mode);
    if (r_list.empty()) throw ConfigError("--r-list is required");
    SystemConfig base = sys.config(Rational(0), Rational(0));
    std::vector<Rational> mus;
    if (!mu_list.empty()) {
      mus = parse_rational_list(mu_list);
    } else {
      int steps = mu_steps > 0 ? mu_steps : 2 * base.k_t;
      for (int i = 0; i <= steps; ++i) mus.push_back(ratio(i, steps));
    }
    std::vector<Rational> rs = parse_rational_list(r_list);

    std::vector<SweepRow> rows;
    for (int mode_id = 0; mode_id < 2; ++mode_id) {
      if (!modes[mode_id]) continue;
      for (const auto& r : rs) {
        for (const auto& mu : mus) {
          SystemConfig cfg = base;
          cfg.mu = mu;
          cfg.r = r;
          validate(cfg);
          rows.push_back({mode_id, r, mu, {}});
        }
      }
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_lock;
    std::string error;
    auto worker = [&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) {
        try {
          SystemConfig cfg = base;
          cfg.mu = rows[i].mu;
          cfg.r = rows[i].r;
          rows[i].line = sweep_line(cfg, rows[i].mode == 1);
        } catch (const std::exception& e) {
          std::lock_guard lock(error_lock);
          error = e.what();
        }
      }
    };
    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!error.empty()) throw std::runtime_error(error);
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
      if (a.mode != b.mode) return a.mode < b.mode;
      if (a.r != b.r) return a.r < b.r;
      return a.mu < b.mu;
    });
    std::ostringstream csv;
    csv << kSweepHeader << '\n';
    for (const auto& row : rows) csv << row.line << '\n';
    emit(out, csv.str(), out_stream);
    return kSuccess;
  }
};

struct SynthesizeCmd {
  SystemFlags sys;
  int example = 0, m = 0;
  std::string rule = "serial", demand, out;
  CLI::Option *o_example = nullptr, *o_m = nullptr, *o_rule = nullptr, *o_demand = nullptr, *o_out = nullptr;

  void add(CLI::App* app) {
    sys.add(app);
    o_example = app->add_option("--example", example, "worked example 1..4");
    for (auto* o : {sys.o_kt, sys.o_kr, sys.o_nt, sys.o_n, sys.o_mu, sys.o_r}) o_example->excludes(o);
    o_m = app->add_option("--m", m, "multiplicity (default from --rule)");
    o_rule = app->add_option("--rule", rule, "multiplicity rule: serial or pipelined");
    o_demand = app->add_option("--demand", demand, "comma-separated file index per user (default identity)");
    o_out = app->add_option("--out", out, "JSON output path (stdout when omitted)");
  }

  int run(const ConfigFile& file, std::ostream& out_stream, std::ostream& err) {
    sys.fill(file);
    file.fill(o_example, example, "example");
    file.fill(o_m, m, "m");
    file.fill(o_rule, rule, "rule");
    file.fill(o_demand, demand, "demand");
    file.fill(o_out, out, "out");
    SystemConfig cfg;
    std::optional<Multiplicity> mult;
    if (example > 0) {
      auto ex = worked_example(example);
      cfg = ex.cfg;
      mult = ex.m;
    } else {
      cfg = sys.config();
      require_feasible(cfg);
      if (rule == "pipelined") mult = pipelined_multiplicity(cfg);
      else if (rule == "serial") mult = serial_multiplicity(cfg);
      else throw ConfigError("--rule must be serial or pipelined");
    }
    if (m > 0) mult = Multiplicity(m);
    std::optional<std::vector<int>> d;
    if (!demand.empty()) d = parse_int_list(demand);
    SynthesizedScheme s = synthesize(cfg, mult, d);
    ValidationReport report = validate(s);
    NdtBreakdown ndt = measure_ndt(s);
    emit(out, scheme_to_json(s).dump(out.empty() ? 2 : -1) + "\n", out_stream);
    err << "B=" << s.schedule.blocks.size() << " F=" << s.placement.f_total << " m=" << s.placement.m.value
        << " delta_f=" << to_fraction_string(ndt.delta_f) << " delta_e=" << to_fraction_string(ndt.delta_e)
        << " delta=" << to_fraction_string(ndt.delta) << (report.ok() ? "" : " INVALID") << '\n';
    return report.ok() ? kSuccess : kValidationFailure;
  }
};

struct VerifyCmd {
  std::string in, out, snr_db, snr_out;
  int seeds = 100, extra_users = 0;
  std::uint64_t first_seed = 1;
  CLI::Option *o_in = nullptr, *o_out = nullptr, *o_snr = nullptr, *o_snr_out = nullptr, *o_seeds = nullptr,
              *o_extra = nullptr, *o_first = nullptr;

  void add(CLI::App* app) {
    o_in = app->add_option("--in", in, "scheme JSON written by synthesize");
    o_seeds = app->add_option("--seeds", seeds, "number of channel realizations");
    o_first = app->add_option("--first-seed", first_seed, "seed of the first realization");
    o_extra = app->add_option("--extra-users", extra_users, "phantom users added to every block");
    o_snr = app->add_option("--snr-db", snr_db, "comma-separated SNRs in dB for the finite-SNR simulation");
    o_snr_out = app->add_option("--snr-out", snr_out, "CSV path of the finite-SNR sweep");
    o_out = app->add_option("--out", out, "JSON report path (stdout when omitted)");
  }

  int run(const ConfigFile& file, std::ostream& out_stream) {
    file.fill(o_in, in, "in");
    file.fill(o_seeds, seeds, "seeds");
    file.fill(o_first, first_seed, "first_seed");
    file.fill(o_extra, extra_users, "extra_users");
    file.fill(o_snr, snr_db, "snr_db");
    file.fill(o_snr_out, snr_out, "snr_out");
    file.fill(o_out, out, "out");
    if (in.empty()) throw ConfigError("--in is required");
    if (seeds < 1 || extra_users < 0) throw ConfigError("--seeds must be positive and --extra-users non-negative");
    std::ifstream f(in);
    if (!f) throw ConfigError("cannot open '" + in + "'");
    json doc;
    try {
      doc = json::parse(f);
    } catch (const json::exception& e) {
      throw ConfigError("scheme file is not valid JSON: " + std::string(e.what()));
    }
    SynthesizedScheme s = scheme_from_json(doc);
    ValidationReport report = validate(s);
    json result = {{"valid", report.ok()}, {"violation_count", report.violations.size()}};
    json violations = json::array();
    for (std::size_t i = 0; i < report.violations.size() && i < 50; ++i) {
      violations.push_back({{"kind", report.violations[i].kind}, {"detail", report.violations[i].detail}});
    }
    result["violations"] = violations;
    bool ok = report.ok();
    if (report.ok()) {
      NdtBreakdown measured = measure_ndt(s);
      NdtBreakdown analytic = scheme_breakdown(s.cfg, s.placement.m);
      bool match = measured.delta_f == analytic.delta_f && measured.delta_e == analytic.delta_e;
      result["measured"] = {{"delta_f", exact_json(measured.delta_f)},
                            {"delta_e", exact_json(measured.delta_e)},
                            {"delta", exact_json(measured.delta)},
                            {"block_count", s.schedule.blocks.size()},
                            {"f_total", s.placement.f_total}};
      result["analytic_match"] = match;
      ZfReport zf;
      for (int i = 0; i < seeds; ++i) zf.merge(verify_schedule(s, first_seed + i, extra_users));
      result["zf"] = zf.to_json();
      result["seeds"] = seeds;
      ok = ok && match && zf.ok();
      if (!snr_db.empty()) {
        auto points = simulate_finite_snr_mean(s, parse_double_list(snr_db), first_seed, seeds);
        std::ostringstream csv;
        csv << kSnrHeader << '\n';
        for (const auto& p : points) {
          csv << decimal(p.snr_db) << ',' << decimal(p.latency_normalized) << ',' << decimal(p.ndt_target) << '\n';
        }
        if (snr_out.empty()) result["finite_snr_csv"] = csv.str();
        else emit(snr_out, csv.str(), out_stream);
      }
    }
    result["ok"] = ok;
    emit(out, result.dump(2) + "\n", out_stream);
    return ok ? kSuccess : kValidationFailure;
  }
};

struct OracleCmd {
  SystemFlags sys;
  std::string mu_list, r_list, out;
  CLI::Option *o_mu_list = nullptr, *o_r_list = nullptr, *o_out = nullptr;

  void add(CLI::App* app) {
    sys.add(app);
    o_mu_list = app->add_option("--mu-list", mu_list, "cache sizes (default i/K_T for i = 0..K_T)");
    o_r_list = app->add_option("--r-list", r_list, "fronthaul rates (default 0.5,1,2)");
    o_mu_list->excludes(sys.o_mu);
    o_r_list->excludes(sys.o_r);
    o_out = app->add_option("--out", out, "CSV output path (stdout when omitted)");
  }

  int run(const ConfigFile& file, std::ostream& out_stream) {
    sys.fill(file);
    file.fill(o_mu_list, mu_list, "mu_list");
    file.fill(o_r_list, r_list, "r_list");
    file.fill(o_out, out, "out");
    if (sys.n_t <= 0) sys.n_t = 1;
    if (sys.k_t <= 0 || sys.k_r <= 0) throw ConfigError("--kt and --kr are required");
    std::vector<Rational> mus, rs;
    if (!sys.mu.empty()) mus = {parse_rational(sys.mu)};
    else if (!mu_list.empty()) mus = parse_rational_list(mu_list);
    else for (int i = 0; i <= sys.k_t; ++i) mus.push_back(ratio(i, sys.k_t));
    if (!sys.r.empty()) rs = {parse_rational(sys.r)};
    else rs = parse_rational_list(r_list.empty() ? "0.5,1,2" : r_list);

    std::ostringstream csv;
    csv << kOracleHeader << '\n';
    bool all_ok = true;
    for (const auto& r : rs) {
      for (const auto& mu : mus) {
        SystemConfig cfg = sys.config(mu, r);
        SandwichReport rep = sandwich_check(cfg);
        all_ok = all_ok && rep.ok();
        csv << decimal(to_double(mu)) << ',' << decimal(to_double(r)) << ',' << decimal(rep.f_min) << ','
            << decimal(to_double(rep.lp_opt)) << ',' << decimal(to_double(rep.achievable_raw)) << ','
            << (rep.ok() ? "true" : "false") << '\n';
      }
    }
    emit(out, csv.str(), out_stream);
    return all_ok ? kSuccess : kValidationFailure;
  }
};

struct GapCmd {
  std::string kt_list, nt_list, kr_list, r_list, out;
  int load_steps = 2;
  CLI::Option *o_kt = nullptr, *o_nt = nullptr, *o_kr = nullptr, *o_r = nullptr, *o_steps = nullptr,
              *o_out = nullptr;

  void add(CLI::App* app) {
    o_kt = app->add_option("--kt-list", kt_list, "edge node counts (default 2..8)");
    o_nt = app->add_option("--nt-list", nt_list, "antenna counts (default 1..4)");
    o_kr = app->add_option("--kr-list", kr_list, "user counts (default 4,8,16,32)");
    o_r = app->add_option("--r-list", r_list, "fronthaul rates (default 0.1,0.5,1,2,5,10)");
    o_steps = app->add_option("--load-steps", load_steps, "grid points per unit of mu*K_T (default 2)");
    o_out = app->add_option("--out", out, "JSON summary path (stdout when omitted)");
  }

  int run(const ConfigFile& file, std::ostream& out_stream) {
    file.fill(o_kt, kt_list, "kt_list");
    file.fill(o_nt, nt_list, "nt_list");
    file.fill(o_kr, kr_list, "kr_list");
    file.fill(o_r, r_list, "r_list");
    file.fill(o_steps, load_steps, "load_steps");
    file.fill(o_out, out, "out");
    GapGrid grid = default_gap_grid();
    if (!kt_list.empty()) grid.k_t = parse_int_list(kt_list);
    if (!nt_list.empty()) grid.n_t = parse_int_list(nt_list);
    if (!kr_list.empty()) grid.k_r = parse_int_list(kr_list);
    if (!r_list.empty()) grid.r = parse_rational_list(r_list);
    if (load_steps < 1) throw ConfigError("--load-steps must be positive");
    grid.load_steps_per_unit = load_steps;
    GapScanResult res = scan_gaps(grid);
    json doc = {{"points", res.points},
                {"max_serial_gap", approx(res.max_serial_gap)},
                {"max_pipelined_gap", approx(res.max_pipelined_gap)},
                {"serial_gap_violations", res.serial_gap_violations},
                {"pipelined_gap_violations", res.pipelined_gap_violations},
                {"ordering_violations", res.ordering_violations},
                {"relation_violations", res.relation_violations},
                {"exact_serial_points", res.exact_serial_points},
                {"exact_pipelined_points", res.exact_pipelined_points},
                {"exact_mismatches", res.exact_mismatches},
                {"examples", res.examples},
                {"ok", res.ok()}};
    emit(out, doc.dump(2) + "\n", out_stream);
    return res.ok() ? kSuccess : kGapViolation;
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delivery-time analysis, synthesis and verification for cache-aided F-RAN", "fran-ndt"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file supplying defaults for any flag");

  AnalyzeCmd analyze;
  SweepCmd sweep;
  SynthesizeCmd synth;
  VerifyCmd verify;
  OracleCmd oracle;
  GapCmd gap;
  auto* c_analyze = app.add_subcommand("analyze", "achievable NDT, lower bound and gap for one instance");
  auto* c_sweep = app.add_subcommand("sweep", "CSV of NDT curves over mu and r");
  auto* c_synth = app.add_subcommand("synthesize", "placement, fronthaul and delivery schedule as JSON");
  auto* c_verify = app.add_subcommand("verify", "structural and zero-forcing checks of a scheme file");
  auto* c_oracle = app.add_subcommand("oracle", "LP lower-bound sandwich on tiny instances");
  auto* c_gap = app.add_subcommand("gap", "gap-ratio scan over a parameter grid");
  analyze.add(c_analyze);
  sweep.add(c_sweep);
  synth.add(c_synth);
  verify.add(c_verify);
  oracle.add(c_oracle);
  gap.add(c_gap);
  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path, "JSON file supplying defaults for any flag");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsage;
  }

  try {
    ConfigFile file;
    file.load(config_path);
    if (c_analyze->parsed()) return analyze.run(file, out);
    if (c_sweep->parsed()) return sweep.run(file, out);
    if (c_synth->parsed()) return synth.run(file, out, err);
    if (c_verify->parsed()) return verify.run(file, out);
    if (c_oracle->parsed()) return oracle.run(file, out);
    if (c_gap->parsed()) return gap.run(file, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fran::cli
