#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "footfall/mdp.hpp"

namespace footfall {

/// Time-indexed stochastic policy. probs[t][s][a] is aligned with the
/// MdpModel action order, t = 0..H-1. Rows sum to 1.
struct StochasticPolicy {
  std::vector<std::vector<std::vector<double>>> probs;

  int horizon() const noexcept { return static_cast<int>(probs.size()); }
};

struct TrainConfig {
  int iterations = 100;
  double eta0 = 1.0;        // initial learning rate
  double decay = 0.97;      // eta_n = eta0 * decay^(n-1)
  std::uint64_t seed = 0;   // theta init PRNG seed
  double tolerance = 1e-8;  // stop when grad L1 falls below this
};

struct IterationRecord {
  int iteration = 0;  // 1-based
  double grad_l1 = 0.0;
  double learning_rate = 0.0;
};

struct IrlResult {
  std::vector<double> theta_star;
  std::vector<double> svf;  // expected visitation mass per state, sums to H+1
  std::vector<IterationRecord> history;
};

/// Empirical distribution of trajectory start states.
/// Throws EmptyCorpus or InvalidTrajectory (id out of range).
std::vector<double> empirical_start_distribution(
    std::span<const Trajectory> corpus, int state_count);

/// Expected expert feature count F~: every trajectory is padded to exactly
/// H+1 states by repeating its final state (stay steps), then the padded
/// feature counts are averaged. Throws EmptyCorpus, TrajectoryTooLong,
/// InvalidTrajectory.
std::vector<double> expert_feature_expectation(const MdpModel& m,
                                               std::span<const Trajectory> corpus,
                                               int horizon);

/// Soft backward pass. With R(s) = theta . F_s:
///   V_H(s)     = R(s)
///   Q_t(s,a)   = R(s) + V_{t+1}(transition(s,a))
///   V_t(s)     = logsumexp_a Q_t(s,a)
///   pi_t(a|s)  = exp(Q_t(s,a) - V_t(s))
/// The induced distribution over length-(H+1) state sequences from a fixed
/// start s0 is exactly exp(sum_t R(s_t)) / Z(s0). Computed in log domain.
/// Throws NumericalOverflow when any value goes non-finite.
StochasticPolicy backward_policy(const MdpModel& m,
                                 std::span<const double> theta);

/// Forward mass propagation:
///   D_{s,0}   = p0(s)
///   D_{s,t+1} = sum_{s',a} pi_t(a|s') [transition(s',a)=s] D_{s',t}
/// Returns svf(s) = sum_{t=0..H} D_{s,t}; total mass H+1.
/// Throws InvalidDistribution when p0 is not a distribution over states.
std::vector<double> expected_svf(const MdpModel& m, const StochasticPolicy& pi,
                                 std::span<const double> start_dist);

/// Gradient of the exact log-likelihood: F~ - F^T svf(theta), with svf
/// obtained through backward_policy + expected_svf.
std::vector<double> likelihood_gradient(const MdpModel& m,
                                        std::span<const double> theta,
                                        std::span<const double> f_expert,
                                        std::span<const double> start_dist);

/// Gradient-ascent training loop. theta starts uniform on [-0.01, 0.01] from
/// the seeded PRNG; iteration n uses eta_n = eta0 * decay^(n-1) and records
/// the gradient L1 norm; stops early once it falls below cfg.tolerance.
/// The start distribution is the empirical one of the corpus.
/// Throws NumericalOverflow (message carries the iteration index).
IrlResult train_maxent(const MdpModel& m, std::span<const Trajectory> corpus,
                       const TrainConfig& cfg);

/// Brute-force oracle: enumerates every length-(H+1) state sequence reachable
/// from the start distribution, weights it exp(theta . F_z), normalizes per
/// start state and mixes with p0. Guarded by N^(H+1) <= 1e6 (TooLarge).
std::map<Trajectory, double> enumerate_path_distribution(
    const MdpModel& m, std::span<const double> theta,
    std::span<const double> start_dist);

/// model.json:
///   {"theta":[...],"svf":[...],"horizon":H,"seed":S,"config":{...}}
struct ModelFile {
  std::vector<double> theta;
  std::vector<double> svf;
  int horizon = 1;
  std::uint64_t seed = 0;
  TrainConfig config;
};

std::string model_to_json(const ModelFile& f);
ModelFile model_from_json(const std::string& text);
void save_model(const ModelFile& f, const std::filesystem::path& path);
ModelFile load_model(const std::filesystem::path& path);

/// history.csv: header iter,grad_l1,learning_rate, one row per iteration.
std::string history_to_csv(std::span<const IterationRecord> history);
std::vector<IterationRecord> history_from_csv(const std::string& text);
void save_history(std::span<const IterationRecord> history,
                  const std::filesystem::path& path);

}  // namespace footfall
