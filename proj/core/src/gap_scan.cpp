#include "fran/gap_scan.hpp"

#include <algorithm>
#include <cmath>

#include "fran/ndt_pipelined.hpp"
#include "fran/ndt_serial.hpp"

namespace fran {

GapGrid default_gap_grid() {
  GapGrid g;
  g.k_t = {2, 3, 4, 5, 6, 7, 8};
  g.n_t = {1, 2, 3, 4};
  g.k_r = {4, 8, 16, 32};
  g.r = {ratio(1, 10), ratio(1, 2), Rational(1), Rational(2), Rational(5), Rational(10)};
  return g;
}

GapScanResult scan_gaps(const GapGrid& grid) {
  GapScanResult out;
  auto note = [&](long& counter, const SystemConfig& cfg, const std::string& what) {
    ++counter;
    if (out.examples.size() < 20) out.examples.push_back(what + ": " + describe(cfg));
  };
  for (int k_t : grid.k_t) {
    for (int n_t : grid.n_t) {
      for (int k_r : grid.k_r) {
        for (const Rational& r : grid.r) {
          SystemConfig cfg = make_config(k_t, k_r, n_t, Rational(0), r);
          bool have_curves = false;
          PiecewiseLinearNdt serial_curve, pipelined_curve;
          for (int step = 0; step <= k_t * grid.load_steps_per_unit; ++step) {
            cfg.mu = ratio(step, static_cast<std::int64_t>(grid.load_steps_per_unit) * k_t);
            if (!is_feasible(cfg)) continue;
            if (!have_curves) {
              serial_curve = serial_envelope(cfg);
              pipelined_curve = pipelined_envelope(cfg);
              have_curves = true;
            }
            ++out.points;
            const Rational ach = serial_curve.evaluate(cfg.mu);
            const Rational ach_p = pipelined_curve.evaluate(cfg.mu);
            const double a = to_double(ach), ap = to_double(ach_p);
            const double lb = *lower_bound_serial(cfg), lbp = *lower_bound_pipelined(cfg);
            const double gs = a / lb, gp = ap / lbp;
            out.max_serial_gap = std::max(out.max_serial_gap, gs);
            out.max_pipelined_gap = std::max(out.max_pipelined_gap, gp);
            if (gs > kSerialGapLimit + kRealTolerance) note(out.serial_gap_violations, cfg, "serial gap");
            if (gp > kPipelinedGapLimit + kRealTolerance) note(out.pipelined_gap_violations, cfg, "pipelined gap");
            if (lb > a + kRealTolerance || lbp > ap + kRealTolerance || ach < 1 || ach_p < 1) {
              note(out.ordering_violations, cfg, "ordering");
            }
            if (ap > a + kRealTolerance || lbp < lb / 2 - kRealTolerance) {
              note(out.relation_violations, cfg, "serial/pipelined relation");
            }
            if (auto ex = exact_serial(cfg)) {
              ++out.exact_serial_points;
              if (*ex != ach || std::abs(lb - to_double(*ex)) > kRealTolerance) {
                note(out.exact_mismatches, cfg, "serial exact regime");
              }
            }
            if (auto ex = exact_pipelined(cfg)) {
              ++out.exact_pipelined_points;
              if (*ex != ach_p || std::abs(lbp - to_double(*ex)) > kRealTolerance) {
                note(out.exact_mismatches, cfg, "pipelined exact regime");
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace fran
