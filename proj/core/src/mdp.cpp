#include "footfall/mdp.hpp"

#include <cmath>
#include <string>

#include "footfall/errors.hpp"

namespace footfall {

FeatureMatrix::FeatureMatrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows < 0 || cols < 0 ||
      data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw ConfigError("feature matrix shape mismatch");
  }
  for (const double v : data_) {
    if (!std::isfinite(v)) {
      throw ConfigError("feature matrix contains a non-finite entry");
    }
  }
}

FeatureMatrix FeatureMatrix::identity(int n) {
  std::vector<double> data(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    data[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  return FeatureMatrix(n, n, std::move(data));
}

MdpModel::MdpModel(const ConnectivityGraph& g, int horizon,
                   FeatureMatrix features, double gamma)
    : horizon_(horizon), gamma_(gamma), features_(std::move(features)) {
  if (g.node_count() == 0) {
    throw EmptyGraph("mdp needs at least one state");
  }
  if (horizon < 1) {
    throw ConfigError("horizon must be >= 1");
  }
  if (features_.rows() != g.node_count()) {
    throw ConfigError("feature matrix must have one row per state");
  }
  if (gamma < 0.0 || gamma > 1.0) {
    throw ConfigError("gamma must lie in [0,1]");
  }

  actions_.resize(static_cast<std::size_t>(g.node_count()));
  for (NodeId s = 0; s < g.node_count(); ++s) {
    auto& acts = actions_[static_cast<std::size_t>(s)];
    acts.reserve(g.neighbors(s).size() + 1);
    acts.push_back(s);  // stay
    for (const Neighbor& nb : g.neighbors(s)) acts.push_back(nb.id);
  }
}

bool MdpModel::is_valid_trajectory(const Trajectory& z) const {
  const int n = state_count();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] < 0 || z[i] >= n) return false;
    if (i == 0) continue;
    const auto& acts = actions_[static_cast<std::size_t>(z[i - 1])];
    bool ok = false;
    for (const NodeId a : acts) {
      if (a == z[i]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

MdpModel mdp_from_graph(const ConnectivityGraph& g, int horizon, double gamma) {
  if (g.node_count() == 0) {
    throw EmptyGraph("mdp needs at least one state");
  }
  return MdpModel(g, horizon, FeatureMatrix::identity(g.node_count()), gamma);
}

MdpModel mdp_from_graph(const ConnectivityGraph& g, int horizon,
                        FeatureMatrix features, double gamma) {
  return MdpModel(g, horizon, std::move(features), gamma);
}

std::vector<double> path_feature_counts(const MdpModel& m,
                                        const Trajectory& z) {
  if (!m.is_valid_trajectory(z)) {
    throw InvalidTrajectory("trajectory leaves the graph's adjacency");
  }
  std::vector<double> counts(static_cast<std::size_t>(m.feature_dim()), 0.0);
  for (const NodeId s : z) {
    const auto row = m.features().row(s);
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += row[j];
  }
  return counts;
}

}  // namespace footfall
