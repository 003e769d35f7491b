#pragma once

#include <span>
#include <vector>

#include "footfall/graph.hpp"

namespace footfall {

/// Dense row-major matrix of per-state features (one row per state).
class FeatureMatrix {
public:
  FeatureMatrix() = default;

  /// Throws ConfigError on shape mismatch or non-finite entries.
  FeatureMatrix(int rows, int cols, std::vector<double> data);

  static FeatureMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Deterministic finite-horizon MDP over a connectivity graph.
///
/// States are the graph nodes. Each state has degree+1 actions: action 0 is
/// `stay` (self-transition), the rest move to adjacent nodes in ascending id
/// order. Transitions are point masses. gamma is carried for completeness but
/// the fixed-horizon formulation absorbs it (default 1.0).
///
/// Immutable after construction; read-only concurrent access is fine.
class MdpModel {
public:
  MdpModel(const ConnectivityGraph& g, int horizon, FeatureMatrix features,
           double gamma);

  int state_count() const noexcept {
    return static_cast<int>(actions_.size());
  }
  int action_count(NodeId s) const {
    return static_cast<int>(actions_[static_cast<std::size_t>(s)].size());
  }
  /// Successor state of action a in state s. actions_[s][0] == s.
  NodeId transition(NodeId s, int a) const {
    return actions_[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)];
  }

  int horizon() const noexcept { return horizon_; }
  double gamma() const noexcept { return gamma_; }
  const FeatureMatrix& features() const noexcept { return features_; }
  int feature_dim() const noexcept { return features_.cols(); }

  /// True when consecutive nodes are adjacent or equal (stay) and all ids are
  /// in range.
  bool is_valid_trajectory(const Trajectory& z) const;

private:
  std::vector<std::vector<NodeId>> actions_;
  int horizon_ = 1;
  double gamma_ = 1.0;
  FeatureMatrix features_;
};

/// One-hot features: F is the NxN identity, so reward weights are per-state
/// rewards. Throws EmptyGraph; ConfigError when horizon < 1.
MdpModel mdp_from_graph(const ConnectivityGraph& g, int horizon,
                        double gamma = 1.0);

/// Custom feature rows, one per state.
MdpModel mdp_from_graph(const ConnectivityGraph& g, int horizon,
                        FeatureMatrix features, double gamma = 1.0);

/// F_z: sum of feature rows over every visited state, start and end included,
/// revisits counted multiply. Throws InvalidTrajectory.
std::vector<double> path_feature_counts(const MdpModel& m, const Trajectory& z);

}  // namespace footfall
