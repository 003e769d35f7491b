#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace footfall {

/// Dense node index, 0..n-1.
using NodeId = std::int32_t;

/// A node sequence on the graph. Consecutive entries are adjacent, or equal
/// when a stay step was introduced by horizon padding.
using Trajectory = std::vector<NodeId>;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 1.0;  // length in meters, or unit steps on synthetic graphs
};

struct Neighbor {
  NodeId id = 0;
  double w = 1.0;
};

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

/// Undirected weighted street graph. Nodes are spaces/intersections.
/// Immutable after construction; all member functions are read-only and safe
/// to call from multiple threads.
///
/// Construction validates: endpoints in range, no self-loops, no duplicate
/// undirected edges, all weights > 0.
class ConnectivityGraph {
public:
  /// Throws InvalidEdge (self-loop, out-of-range id, non-positive weight)
  /// or DuplicateEdge.
  ConnectivityGraph(std::vector<Edge> edges, NodeId node_count,
                    std::optional<std::vector<LatLon>> coords = std::nullopt);

  NodeId node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Neighbors of u, sorted ascending by node id.
  std::span<const Neighbor> neighbors(NodeId u) const {
    return adjacency_[static_cast<std::size_t>(u)];
  }

  int degree(NodeId u) const {
    return static_cast<int>(adjacency_[static_cast<std::size_t>(u)].size());
  }

  /// Canonical edge list: u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::optional<std::vector<LatLon>>& coords() const noexcept {
    return coords_;
  }

  bool contains(NodeId u) const noexcept { return u >= 0 && u < node_count_; }

  bool operator==(const ConnectivityGraph& other) const;

private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<std::vector<LatLon>> coords_;
};

/// Spec-level alias for the validating constructor.
inline ConnectivityGraph build_graph(
    std::vector<Edge> edges, NodeId node_count,
    std::optional<std::vector<LatLon>> coords = std::nullopt) {
  return ConnectivityGraph(std::move(edges), node_count, std::move(coords));
}

/// Hop-count depths from `source`, ignoring edge weights. Returns only nodes
/// with 0 < d <= radius; the source itself and unreachable nodes are absent.
/// radius == nullopt means unbounded. Throws NodeNotFound.
std::map<NodeId, int> bfs_depths(const ConnectivityGraph& g, NodeId source,
                                 std::optional<int> radius = std::nullopt);

/// Minimum-total-weight path src..dst. Among equal-weight shortest paths the
/// result is the one that takes the smallest next node id at every step, so
/// the output is deterministic. Throws NodeNotFound or Unreachable.
Trajectory dijkstra_path(const ConnectivityGraph& g, NodeId src, NodeId dst);

/// Total edge weight along a path. Throws InvalidTrajectory if a consecutive
/// pair is not an edge (stay steps are not allowed here).
double path_weight(const ConnectivityGraph& g, const Trajectory& path);

}  // namespace footfall
