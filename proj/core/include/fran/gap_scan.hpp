#pragma once

#include <string>
#include <vector>

#include "fran/model.hpp"

namespace fran {

/// Cartesian grid of instances; mu*K_T runs over {0, 1/s, 2/s, ..., K_T} with
/// s = load_steps_per_unit. N is set to K_R.
struct GapGrid {
  std::vector<int> k_t;
  std::vector<int> n_t;
  std::vector<int> k_r;
  std::vector<Rational> r;
  int load_steps_per_unit = 2;
};

/// K_T in 2..8, n_T in 1..4, K_R in {4, 8, 16, 32}, r in {0.1, 0.5, 1, 2, 5, 10}.
GapGrid default_gap_grid();

struct GapScanResult {
  long points = 0;
  long exact_serial_points = 0;
  long exact_pipelined_points = 0;
  double max_serial_gap = 0;
  double max_pipelined_gap = 0;
  long serial_gap_violations = 0;
  long pipelined_gap_violations = 0;
  long ordering_violations = 0;   // lower bound above achievable, or NDT below one
  long relation_violations = 0;   // pipelined above serial, or bound below half the serial bound
  long exact_mismatches = 0;
  std::vector<std::string> examples;  // first few offending instances

  long violations() const {
    return serial_gap_violations + pipelined_gap_violations + ordering_violations + relation_violations +
           exact_mismatches;
  }
  bool ok() const { return violations() == 0; }
};

inline constexpr double kSerialGapLimit = 1.5;
inline constexpr double kPipelinedGapLimit = 2.0;

GapScanResult scan_gaps(const GapGrid& grid);

}  // namespace fran
