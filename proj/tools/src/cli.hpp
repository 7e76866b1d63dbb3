#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fran::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kInfeasible = 2,
  kValidationFailure = 3,
  kGapViolation = 4,
};

/// CSV header of `sweep`.
inline constexpr const char* kSweepHeader = "mu,r,mode,delta_f,delta_e,delta_ach,delta_lb,gap,exact";
/// CSV header of `oracle`.
inline constexpr const char* kOracleHeader = "mu,r,f_min,lp_opt,ach_raw,ok";
/// CSV header of the finite-SNR sweep written by `verify --snr-out`.
inline constexpr const char* kSnrHeader = "snr_db,latency_normalized,ndt_target";

/// Entry point of the fran-ndt tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fran::cli
