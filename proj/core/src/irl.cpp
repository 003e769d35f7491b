#include "footfall/irl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "footfall/errors.hpp"
#include "footfall/random.hpp"
#include "textio.hpp"

namespace footfall {

using detail::fmt_double;
using nlohmann::json;

namespace {

double logsumexp(std::span<const double> xs) {
  double m = -std::numeric_limits<double>::infinity();
  for (const double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double sum = 0.0;
  for (const double x : xs) sum += std::exp(x - m);
  return m + std::log(sum);
}

std::vector<double> state_rewards(const MdpModel& m,
                                  std::span<const double> theta) {
  if (static_cast<int>(theta.size()) != m.feature_dim()) {
    throw ConfigError("theta dimension does not match feature dimension");
  }
  const int n = m.state_count();
  std::vector<double> r(static_cast<std::size_t>(n), 0.0);
  for (NodeId s = 0; s < n; ++s) {
    const auto row = m.features().row(s);
    double dot = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) dot += theta[j] * row[j];
    r[static_cast<std::size_t>(s)] = dot;
  }
  return r;
}

void check_start_distribution(std::span<const double> p0, int n) {
  if (static_cast<int>(p0.size()) != n) {
    throw InvalidDistribution("start distribution has wrong length");
  }
  double sum = 0.0;
  for (const double p : p0) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InvalidDistribution("start distribution entry < 0 or non-finite");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidDistribution("start distribution sums to " + fmt_double(sum));
  }
}

}  // namespace

std::vector<double> empirical_start_distribution(
    std::span<const Trajectory> corpus, int state_count) {
  if (corpus.empty()) {
    throw EmptyCorpus("no trajectories");
  }
  std::vector<double> p0(static_cast<std::size_t>(state_count), 0.0);
  for (const Trajectory& z : corpus) {
    if (z.empty()) throw InvalidTrajectory("empty trajectory");
    if (z.front() < 0 || z.front() >= state_count) {
      throw InvalidTrajectory("start state out of range");
    }
    p0[static_cast<std::size_t>(z.front())] += 1.0;
  }
  const double inv = 1.0 / static_cast<double>(corpus.size());
  for (double& p : p0) p *= inv;
  return p0;
}

std::vector<double> expert_feature_expectation(const MdpModel& m,
                                               std::span<const Trajectory> corpus,
                                               int horizon) {
  if (corpus.empty()) {
    throw EmptyCorpus("no trajectories");
  }
  const std::size_t target_len = static_cast<std::size_t>(horizon) + 1;

  std::vector<double> mean(static_cast<std::size_t>(m.feature_dim()), 0.0);
  for (const Trajectory& z : corpus) {
    if (z.empty()) throw InvalidTrajectory("empty trajectory");
    if (z.size() > target_len) {
      throw TrajectoryTooLong("trajectory has " + std::to_string(z.size()) +
                              " states, horizon admits " +
                              std::to_string(target_len));
    }
    Trajectory padded = z;
    padded.resize(target_len, z.back());  // stay steps at the goal
    const auto counts = path_feature_counts(m, padded);
    for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += counts[j];
  }
  const double inv = 1.0 / static_cast<double>(corpus.size());
  for (double& v : mean) v *= inv;
  return mean;
}

StochasticPolicy backward_policy(const MdpModel& m,
                                 std::span<const double> theta) {
  const int n = m.state_count();
  const int horizon = m.horizon();
  const auto reward = state_rewards(m, theta);

  StochasticPolicy pi;
  pi.probs.resize(static_cast<std::size_t>(horizon));

  // V_H(s) = R(s): reward is collected at every occupied state, the final
  // one included, matching the trajectory feature count F_z.
  std::vector<double> value_next = reward;
  std::vector<double> value(static_cast<std::size_t>(n), 0.0);
  std::vector<double> q;

  for (int t = horizon - 1; t >= 0; --t) {
    auto& step = pi.probs[static_cast<std::size_t>(t)];
    step.resize(static_cast<std::size_t>(n));
    for (NodeId s = 0; s < n; ++s) {
      const int num_actions = m.action_count(s);
      q.assign(static_cast<std::size_t>(num_actions), 0.0);
      for (int a = 0; a < num_actions; ++a) {
        q[static_cast<std::size_t>(a)] =
            reward[static_cast<std::size_t>(s)] +
            value_next[static_cast<std::size_t>(m.transition(s, a))];
      }
      const double v = logsumexp(q);
      if (!std::isfinite(v)) {
        throw NumericalOverflow("non-finite soft value at t=" +
                                std::to_string(t) + ", s=" + std::to_string(s));
      }
      value[static_cast<std::size_t>(s)] = v;
      auto& probs = step[static_cast<std::size_t>(s)];
      probs.resize(static_cast<std::size_t>(num_actions));
      for (int a = 0; a < num_actions; ++a) {
        probs[static_cast<std::size_t>(a)] =
            std::exp(q[static_cast<std::size_t>(a)] - v);
      }
    }
    std::swap(value, value_next);
  }
  return pi;
}

std::vector<double> expected_svf(const MdpModel& m, const StochasticPolicy& pi,
                                 std::span<const double> start_dist) {
  const int n = m.state_count();
  check_start_distribution(start_dist, n);
  if (pi.horizon() != m.horizon()) {
    throw InvalidDistribution("policy horizon does not match model horizon");
  }

  std::vector<double> occupancy(start_dist.begin(), start_dist.end());
  std::vector<double> svf = occupancy;
  std::vector<double> next(static_cast<std::size_t>(n), 0.0);

  for (int t = 0; t < m.horizon(); ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    const auto& step = pi.probs[static_cast<std::size_t>(t)];
    for (NodeId s = 0; s < n; ++s) {
      const double mass = occupancy[static_cast<std::size_t>(s)];
      if (mass == 0.0) continue;
      const auto& probs = step[static_cast<std::size_t>(s)];
      for (int a = 0; a < static_cast<int>(probs.size()); ++a) {
        next[static_cast<std::size_t>(m.transition(s, a))] +=
            mass * probs[static_cast<std::size_t>(a)];
      }
    }
    std::swap(occupancy, next);
    for (NodeId s = 0; s < n; ++s) {
      svf[static_cast<std::size_t>(s)] += occupancy[static_cast<std::size_t>(s)];
    }
  }
  return svf;
}

std::vector<double> likelihood_gradient(const MdpModel& m,
                                        std::span<const double> theta,
                                        std::span<const double> f_expert,
                                        std::span<const double> start_dist) {
  if (static_cast<int>(f_expert.size()) != m.feature_dim()) {
    throw ConfigError("expert feature vector has wrong dimension");
  }
  const auto pi = backward_policy(m, theta);
  const auto svf = expected_svf(m, pi, start_dist);

  std::vector<double> grad(f_expert.begin(), f_expert.end());
  for (NodeId s = 0; s < m.state_count(); ++s) {
    const auto row = m.features().row(s);
    const double mass = svf[static_cast<std::size_t>(s)];
    for (std::size_t j = 0; j < grad.size(); ++j) grad[j] -= mass * row[j];
  }
  return grad;
}

IrlResult train_maxent(const MdpModel& m, std::span<const Trajectory> corpus,
                       const TrainConfig& cfg) {
  if (cfg.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(cfg.eta0 > 0.0)) throw ConfigError("eta0 must be > 0");
  if (!(cfg.decay > 0.0) || cfg.decay > 1.0) {
    throw ConfigError("decay must lie in (0,1]");
  }

  const auto f_expert = expert_feature_expectation(m, corpus, m.horizon());
  const auto p0 = empirical_start_distribution(corpus, m.state_count());

  Rng rng(cfg.seed);
  std::vector<double> theta(static_cast<std::size_t>(m.feature_dim()));
  for (double& v : theta) v = uniform_range(rng, -0.01, 0.01);

  IrlResult result;
  result.history.reserve(static_cast<std::size_t>(cfg.iterations));

  double eta = cfg.eta0;
  for (int n = 1; n <= cfg.iterations; ++n) {
    std::vector<double> grad;
    try {
      grad = likelihood_gradient(m, theta, f_expert, p0);
    } catch (const NumericalOverflow& e) {
      throw NumericalOverflow("iteration " + std::to_string(n) + ": " +
                              e.what());
    }
    double grad_l1 = 0.0;
    for (const double g : grad) grad_l1 += std::abs(g);

    result.history.push_back({n, grad_l1, eta});
    if (grad_l1 < cfg.tolerance) break;

    for (std::size_t j = 0; j < theta.size(); ++j) theta[j] += eta * grad[j];
    eta *= cfg.decay;
  }

  result.theta_star = std::move(theta);
  result.svf = expected_svf(m, backward_policy(m, result.theta_star), p0);
  return result;
}

std::map<Trajectory, double> enumerate_path_distribution(
    const MdpModel& m, std::span<const double> theta,
    std::span<const double> start_dist) {
  const int n = m.state_count();
  check_start_distribution(start_dist, n);

  double size_guard = 1.0;
  for (int t = 0; t <= m.horizon(); ++t) {
    size_guard *= static_cast<double>(n);
    if (size_guard > 1e6) {
      throw TooLarge("N^(H+1) exceeds 1e6");
    }
  }

  const auto reward = state_rewards(m, theta);
  std::map<Trajectory, double> dist;

  // Per start state: enumerate every action sequence, weight by
  // exp(sum of rewards), normalize, then mix with the start distribution.
  std::vector<std::pair<Trajectory, double>> paths;
  for (NodeId s0 = 0; s0 < n; ++s0) {
    const double p_start = start_dist[static_cast<std::size_t>(s0)];
    if (p_start == 0.0) continue;

    paths.clear();
    Trajectory current{s0};
    double log_weight = reward[static_cast<std::size_t>(s0)];

    // Depth-first over action sequences of length H.
    struct Frame {
      NodeId state;
      int next_action;
    };
    std::vector<Frame> stack{{s0, 0}};
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (static_cast<int>(stack.size()) == m.horizon() + 1) {
        paths.emplace_back(current, log_weight);
        log_weight -= reward[static_cast<std::size_t>(top.state)];
        current.pop_back();
        stack.pop_back();
        continue;
      }
      if (top.next_action >= m.action_count(top.state)) {
        log_weight -= reward[static_cast<std::size_t>(top.state)];
        current.pop_back();
        stack.pop_back();
        continue;
      }
      const NodeId next = m.transition(top.state, top.next_action);
      ++top.next_action;
      stack.push_back({next, 0});
      current.push_back(next);
      log_weight += reward[static_cast<std::size_t>(next)];
    }

    double max_log = -std::numeric_limits<double>::infinity();
    for (const auto& [path, lw] : paths) max_log = std::max(max_log, lw);
    double z = 0.0;
    for (const auto& [path, lw] : paths) z += std::exp(lw - max_log);

    for (const auto& [path, lw] : paths) {
      dist[path] += p_start * std::exp(lw - max_log) / z;
    }
  }
  return dist;
}

std::string model_to_json(const ModelFile& f) {
  std::ostringstream out;
  out << "{\"theta\":[";
  for (std::size_t i = 0; i < f.theta.size(); ++i) {
    if (i > 0) out << ",";
    out << fmt_double(f.theta[i]);
  }
  out << "],\n\"svf\":[";
  for (std::size_t i = 0; i < f.svf.size(); ++i) {
    if (i > 0) out << ",";
    out << fmt_double(f.svf[i]);
  }
  out << "],\n\"horizon\":" << f.horizon << ",\"seed\":" << f.seed
      << ",\"config\":{\"iterations\":" << f.config.iterations
      << ",\"eta0\":" << fmt_double(f.config.eta0)
      << ",\"decay\":" << fmt_double(f.config.decay)
      << ",\"tolerance\":" << fmt_double(f.config.tolerance) << "}}\n";
  return out.str();
}

ModelFile model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("model json: ") + e.what());
  }
  try {
    ModelFile f;
    f.theta = doc.at("theta").get<std::vector<double>>();
    f.svf = doc.at("svf").get<std::vector<double>>();
    f.horizon = doc.at("horizon").get<int>();
    f.seed = doc.at("seed").get<std::uint64_t>();
    const auto& cfg = doc.at("config");
    f.config.iterations = cfg.at("iterations").get<int>();
    f.config.eta0 = cfg.at("eta0").get<double>();
    f.config.decay = cfg.at("decay").get<double>();
    f.config.tolerance = cfg.at("tolerance").get<double>();
    f.config.seed = f.seed;
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("model json: ") + e.what());
  }
}

void save_model(const ModelFile& f, const std::filesystem::path& path) {
  detail::write_text_file(path, model_to_json(f));
}

ModelFile load_model(const std::filesystem::path& path) {
  return model_from_json(detail::read_text_file(path));
}

std::string history_to_csv(std::span<const IterationRecord> history) {
  std::ostringstream out;
  out << "iter,grad_l1,learning_rate\n";
  for (const IterationRecord& rec : history) {
    out << rec.iteration << ',' << fmt_double(rec.grad_l1) << ','
        << fmt_double(rec.learning_rate) << '\n';
  }
  return out.str();
}

std::vector<IterationRecord> history_from_csv(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "iter,grad_l1,learning_rate") {
    throw ParseError("history csv: bad header");
  }
  std::vector<IterationRecord> history;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = detail::split_csv(lines[i]);
    if (fields.size() != 3) throw ParseError("history csv: bad row");
    history.push_back({static_cast<int>(detail::parse_int(fields[0])),
                       detail::parse_double(fields[1]),
                       detail::parse_double(fields[2])});
  }
  return history;
}

void save_history(std::span<const IterationRecord> history,
                  const std::filesystem::path& path) {
  detail::write_text_file(path, history_to_csv(history));
}

}  // namespace footfall
