#include "fran/zf_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace fran {

namespace {

using Availability = std::vector<std::vector<char>>;

Availability availability(const SynthesizedScheme& s) {
  const PlacementPlan& plan = s.placement;
  const std::size_t universe = static_cast<std::size_t>(s.cfg.n_files) * plan.f_total;
  Availability out(s.cfg.k_t, std::vector<char>(universe, 0));
  for (int en = 0; en < s.cfg.k_t; ++en) {
    for (const auto& q : plan.cache_sets[en]) out[en][plan.packet_index(q)] = 1;
    for (const auto& q : s.fronthaul.sets[en]) out[en][plan.packet_index(q)] = 1;
  }
  return out;
}

std::vector<std::vector<int>> support_for(const SynthesizedScheme& s, const Availability& avail,
                                          const Block& block, int n_t, int phantom_users) {
  std::vector<std::vector<int>> out;
  const int cols = static_cast<int>(block.cluster.size()) * n_t;
  for (const auto& a : block.assignments) {
    out.emplace_back();
    auto idx = s.placement.packet_index(a.packet);
    for (std::size_t e = 0; e < block.cluster.size(); ++e) {
      if (!avail[block.cluster[e]][idx]) continue;
      for (int t = 0; t < n_t; ++t) out.back().push_back(static_cast<int>(e) * n_t + t);
    }
  }
  for (int p = 0; p < phantom_users; ++p) {
    out.emplace_back(cols);
    for (int c = 0; c < cols; ++c) out.back()[c] = c;
  }
  return out;
}

double smallest_singular_value_normalized(const Eigen::MatrixXcd& h) {
  Eigen::MatrixXcd rows = h;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) rows.row(i).normalize();
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(rows);
  return svd.singularValues().minCoeff();
}

Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd h(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) h(i, j) = {normal(rng), normal(rng)};
  }
  return h;
}

// Unit-norm precoder gains |h_k v_k|^2 / |v_k|^2 for one block.
Eigen::VectorXd unit_norm_gains(const Eigen::MatrixXcd& h, const BlockPrecoders& pre) {
  const Eigen::MatrixXcd hv = h * pre.v;
  Eigen::VectorXd g(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    double norm2 = pre.v.col(k).squaredNorm();
    g(k) = norm2 > 0 ? std::norm(hv(k, k)) / norm2 : 0.0;
  }
  return g;
}

}  // namespace

ChannelRealization draw_channels(const SynthesizedScheme& scheme, std::uint64_t seed, int phantom_users) {
  ChannelRealization out;
  out.seed = seed;
  out.n_t = scheme.cfg.n_t;
  for (std::size_t b = 0; b < scheme.schedule.blocks.size(); ++b) {
    const Block& block = scheme.schedule.blocks[b];
    const auto rows = static_cast<Eigen::Index>(block.assignments.size()) + phantom_users;
    const auto cols = static_cast<Eigen::Index>(block.cluster.size()) * scheme.cfg.n_t;
    BlockChannels bc;
    bc.phantom_users = phantom_users;
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxChannelDraws) {
        throw std::runtime_error("no linearly independent channel draw for block " + std::to_string(b));
      }
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(attempt)};
      std::mt19937_64 rng(seq);
      bc.h = gaussian_matrix(rows, cols, rng);
      bc.draws = attempt + 1;
      if (phantom_users > 0 || rows > cols || rows == 0) break;
      if (smallest_singular_value_normalized(bc.h) > kRankThreshold) break;
    }
    out.blocks.push_back(std::move(bc));
  }
  return out;
}

BlockPrecoders zero_force_block(const Eigen::MatrixXcd& h, const std::vector<std::vector<int>>& support) {
  const Eigen::Index streams = static_cast<Eigen::Index>(support.size());
  if (streams != h.rows()) throw std::invalid_argument("one support set per stream required");
  BlockPrecoders out;
  out.v = Eigen::MatrixXcd::Zero(h.cols(), streams);
  for (Eigen::Index l = 0; l < streams; ++l) {
    const auto& cols = support[l];
    if (cols.empty()) continue;
    Eigen::MatrixXcd sub(h.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = h.col(cols[c]);
    Eigen::VectorXcd target = Eigen::VectorXcd::Zero(h.rows());
    target(l) = 1.0;
    Eigen::VectorXcd x = sub.completeOrthogonalDecomposition().solve(target);
    for (std::size_t c = 0; c < cols.size(); ++c) out.v(cols[c], l) = x(static_cast<Eigen::Index>(c));
  }
  Eigen::MatrixXcd hv = h * out.v;
  out.construction_residual = (hv - Eigen::MatrixXcd::Identity(h.rows(), streams)).cwiseAbs().maxCoeff();
  return out;
}

std::vector<std::vector<int>> stream_support(const SynthesizedScheme& scheme, const Block& block, int n_t,
                                             int phantom_users) {
  return support_for(scheme, availability(scheme), block, n_t, phantom_users);
}

void ZfReport::merge(const ZfReport& other) {
  if (blocks_checked == 0) min_desired_gain = other.min_desired_gain;
  else if (other.blocks_checked > 0) min_desired_gain = std::min(min_desired_gain, other.min_desired_gain);
  max_residual = std::max(max_residual, other.max_residual);
  blocks_checked += other.blocks_checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

nlohmann::json ZfReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) {
    f.push_back({{"block", x.block}, {"stream", x.stream}, {"residual", x.residual}, {"reason", x.reason}});
  }
  return {{"max_residual", max_residual},
          {"min_desired_gain", min_desired_gain},
          {"blocks_checked", blocks_checked},
          {"ok", ok()},
          {"failures", std::move(f)}};
}

ZfReport verify_schedule(const SynthesizedScheme& scheme, const ChannelRealization& channels) {
  if (channels.blocks.size() != scheme.schedule.blocks.size()) {
    throw std::invalid_argument("channel realization does not match the schedule");
  }
  const Availability avail = availability(scheme);
  ZfReport report;
  report.min_desired_gain = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < channels.blocks.size(); ++b) {
    const Block& block = scheme.schedule.blocks[b];
    const BlockChannels& bc = channels.blocks[b];
    auto support = support_for(scheme, avail, block, channels.n_t, bc.phantom_users);
    BlockPrecoders pre = zero_force_block(bc.h, support);
    Eigen::MatrixXcd hv = bc.h * pre.v;
    for (Eigen::Index k = 0; k < hv.rows(); ++k) {
      double desired = std::abs(hv(k, k));
      double leak = 0;
      for (Eigen::Index l = 0; l < hv.cols(); ++l) {
        if (l != k) leak = std::max(leak, std::abs(hv(k, l)));
      }
      double residual = desired > 0 ? leak / desired : std::numeric_limits<double>::infinity();
      report.max_residual = std::max(report.max_residual, residual);
      report.min_desired_gain = std::min(report.min_desired_gain, desired);
      const int block_id = static_cast<int>(b);
      const int stream = static_cast<int>(k);
      if (residual > kZfVerifyTolerance) report.failures.push_back({block_id, stream, residual, "interference"});
      if (desired < kMinDesiredGain) report.failures.push_back({block_id, stream, desired, "desired_gain"});
      // Support: only antennas of holding ENs may carry the stream.
      std::vector<char> allowed(static_cast<std::size_t>(pre.v.rows()), 0);
      for (int c : support[k]) allowed[c] = 1;
      for (Eigen::Index row = 0; row < pre.v.rows(); ++row) {
        if (!allowed[row] && pre.v(row, k) != std::complex<double>(0)) {
          report.failures.push_back({block_id, stream, std::abs(pre.v(row, k)), "support"});
        }
      }
    }
    ++report.blocks_checked;
  }
  if (report.blocks_checked == 0) report.min_desired_gain = 0;
  return report;
}

ZfReport verify_schedule(const SynthesizedScheme& scheme, std::uint64_t seed, int phantom_users) {
  return verify_schedule(scheme, draw_channels(scheme, seed, phantom_users));
}

std::vector<SnrPoint> simulate_finite_snr(const SynthesizedScheme& scheme, const ChannelRealization& channels,
                                          const std::vector<double>& snr_db) {
  const NdtBreakdown target = measure_ndt(scheme);
  const double f_total = scheme.placement.f_total;
  const Availability avail = availability(scheme);
  std::vector<Eigen::VectorXd> gains;
  for (std::size_t b = 0; b < channels.blocks.size(); ++b) {
    const auto& bc = channels.blocks[b];
    auto support = support_for(scheme, avail, scheme.schedule.blocks[b], channels.n_t, bc.phantom_users);
    gains.push_back(unit_norm_gains(bc.h, zero_force_block(bc.h, support)));
  }
  std::vector<SnrPoint> out;
  for (double db : snr_db) {
    const double p = std::pow(10.0, db / 10.0);
    const double log_p = std::log2(p);
    // Fronthaul: max_i |F_i| (L/F) / (r log2 P), normalized by L / log2 P.
    double latency = to_double(target.delta_f);
    for (const auto& g : gains) {
      if (g.size() == 0) continue;
      double slowest = std::log2(1.0 + g.minCoeff() * p);
      latency += log_p / (f_total * slowest);
    }
    out.push_back({db, latency, to_double(target.delta)});
  }
  return out;
}

std::vector<SnrPoint> simulate_finite_snr_mean(const SynthesizedScheme& scheme, const std::vector<double>& snr_db,
                                               std::uint64_t first_seed, int count) {
  if (count < 1) throw std::invalid_argument("at least one seed required");
  std::vector<SnrPoint> acc;
  for (int s = 0; s < count; ++s) {
    auto points = simulate_finite_snr(scheme, draw_channels(scheme, first_seed + s), snr_db);
    if (acc.empty()) {
      acc = points;
      for (auto& p : acc) p.latency_normalized = 0;
    }
    for (std::size_t i = 0; i < points.size(); ++i) acc[i].latency_normalized += points[i].latency_normalized;
  }
  for (auto& p : acc) p.latency_normalized /= count;
  return acc;
}

BlockMarkovResult simulate_block_markov(const SynthesizedScheme& scheme, int frames) {
  if (frames < 2) throw std::invalid_argument("block-Markov operation needs at least two frames");
  const NdtBreakdown ndt = measure_ndt(scheme);
  const Rational sub(1, frames - 1);
  const Rational fronthaul_slot = ndt.delta_f * sub;
  const Rational edge_slot = ndt.delta_e * sub;

  BlockMarkovResult out;
  out.frames = frames;
  // Frame s carries fronthaul of sub-packet s (s < B-1) and edge of sub-packet s-1 (s >= 1).
  Rational heaviest(0);
  for (int s = 0; s < frames; ++s) {
    Rational f = s < frames - 1 ? fronthaul_slot : Rational(0);
    Rational e = s >= 1 ? edge_slot : Rational(0);
    heaviest = std::max(heaviest, std::max(f, e));
  }
  out.synchronous = heaviest * frames;

  Rational fronthaul_done(0), edge_done(0);
  for (int s = 0; s < frames - 1; ++s) {
    fronthaul_done += fronthaul_slot;
    edge_done = std::max(fronthaul_done, edge_done) + edge_slot;
  }
  out.asynchronous = edge_done;
  out.predicted = Rational(frames) / (frames - 1) * std::max(ndt.delta_f, ndt.delta_e);
  return out;
}

}  // namespace fran
