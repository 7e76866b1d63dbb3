#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "fran/scheme.hpp"

namespace fran {

inline constexpr double kZfConstructionTolerance = 1e-10;
inline constexpr double kZfVerifyTolerance = 1e-9;
inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kMinDesiredGain = 1e-6;
inline constexpr int kMaxChannelDraws = 100;

/// Channels of one block: row t is the served user t (assignment order, then any
/// phantom users) towards the stacked antennas of the serving cluster, EN by EN.
struct BlockChannels {
  Eigen::MatrixXcd h;
  int phantom_users = 0;
  int draws = 1;
};

struct ChannelRealization {
  std::uint64_t seed = 0;
  int n_t = 1;
  std::vector<BlockChannels> blocks;
};

/// i.i.d. CN(0,1) coefficients, seeded per block so results do not depend on
/// evaluation order. `phantom_users` extra rows per block emulate users the
/// cluster would have to serve on top of the schedule. Without phantoms each
/// block is redrawn until its row-normalized matrix has smallest singular value
/// above kRankThreshold; std::runtime_error after kMaxChannelDraws attempts.
ChannelRealization draw_channels(const SynthesizedScheme& scheme, std::uint64_t seed,
                                 int phantom_users = 0);

struct BlockPrecoders {
  Eigen::MatrixXcd v;  // one column per stream, rows = cluster antennas
  double construction_residual = 0;  // max |H V - I| entry
};

/// support[l] lists the antenna columns allowed to carry stream l.
/// Each column is the minimum-norm solution of H[:, S_l] v = e_l.
BlockPrecoders zero_force_block(const Eigen::MatrixXcd& h,
                                const std::vector<std::vector<int>>& support);

/// Antenna columns of the cluster whose EN holds each stream's packet.
/// Phantom streams may use the whole cluster.
std::vector<std::vector<int>> stream_support(const SynthesizedScheme& scheme, const Block& block,
                                             int n_t, int phantom_users);

struct ZfFailure {
  int block = 0;
  int stream = 0;
  double residual = 0;
  std::string reason;
};

struct ZfReport {
  double max_residual = 0;
  double min_desired_gain = 0;
  int blocks_checked = 0;
  std::vector<ZfFailure> failures;

  bool ok() const { return failures.empty(); }
  void merge(const ZfReport& other);
  nlohmann::json to_json() const;
};

/// Builds precoders for every block and checks, for every served stream, that
/// max_l |h_k v_l| / |h_k v_k| over l != k stays at or below kZfVerifyTolerance,
/// that the desired gain is at least kMinDesiredGain and that no EN without the
/// packet carries it.
ZfReport verify_schedule(const SynthesizedScheme& scheme, const ChannelRealization& channels);

ZfReport verify_schedule(const SynthesizedScheme& scheme, std::uint64_t seed, int phantom_users = 0);

struct SnrPoint {
  double snr_db = 0;
  double latency_normalized = 0;
  double ndt_target = 0;
};

/// Serial latency at finite SNR, normalized by L/log2(P). Each stream uses its
/// unit-norm ZF precoder with unit noise, so user k decodes at log2(1 + g_k P);
/// a block lasts as long as its slowest user needs for one packet.
std::vector<SnrPoint> simulate_finite_snr(const SynthesizedScheme& scheme,
                                          const ChannelRealization& channels,
                                          const std::vector<double>& snr_db);

/// Average of simulate_finite_snr over seeds first_seed .. first_seed + count - 1.
std::vector<SnrPoint> simulate_finite_snr_mean(const SynthesizedScheme& scheme,
                                               const std::vector<double>& snr_db,
                                               std::uint64_t first_seed, int count);

struct BlockMarkovResult {
  int frames = 0;
  Rational synchronous;   // fixed slot length set by the heaviest slot
  Rational asynchronous;  // each stage starts as soon as its inputs are ready
  Rational predicted;     // B/(B-1) * max(delta_F, delta_E)
};

/// Splits every packet into B - 1 sub-packets; frame s fetches sub-packet s
/// over the fronthaul while the edge transmits sub-packet s - 1.
BlockMarkovResult simulate_block_markov(const SynthesizedScheme& scheme, int frames);

}  // namespace fran
