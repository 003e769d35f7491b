#include "footfall/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <string>

#include "footfall/errors.hpp"

namespace footfall {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

ConnectivityGraph::ConnectivityGraph(std::vector<Edge> edges, NodeId node_count,
                                     std::optional<std::vector<LatLon>> coords)
    : node_count_(node_count), coords_(std::move(coords)) {
  if (node_count < 0) {
    throw InvalidEdge("node_count must be non-negative");
  }
  if (coords_ && static_cast<NodeId>(coords_->size()) != node_count) {
    throw InvalidEdge("coords size does not match node_count");
  }

  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) {
      throw InvalidEdge("self-loop " + edge_str(e));
    }
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      throw InvalidEdge("endpoint out of range " + edge_str(e));
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw InvalidEdge("non-positive weight on " + edge_str(e));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw DuplicateEdge("duplicate undirected edge " + edge_str(edges_[i]));
    }
  }

  adjacency_.assign(static_cast<std::size_t>(node_count), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
  }
}

bool ConnectivityGraph::operator==(const ConnectivityGraph& other) const {
  if (node_count_ != other.node_count_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& a = edges_[i];
    const Edge& b = other.edges_[i];
    if (a.u != b.u || a.v != b.v || a.w != b.w) return false;
  }
  if (coords_.has_value() != other.coords_.has_value()) return false;
  if (coords_) {
    for (std::size_t i = 0; i < coords_->size(); ++i) {
      if ((*coords_)[i].lat != (*other.coords_)[i].lat ||
          (*coords_)[i].lon != (*other.coords_)[i].lon) {
        return false;
      }
    }
  }
  return true;
}

std::map<NodeId, int> bfs_depths(const ConnectivityGraph& g, NodeId source,
                                 std::optional<int> radius) {
  if (!g.contains(source)) {
    throw NodeNotFound("bfs source " + std::to_string(source));
  }

  std::map<NodeId, int> depths;
  std::vector<int> depth(static_cast<std::size_t>(g.node_count()), -1);
  std::deque<NodeId> queue;
  depth[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);

  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const int du = depth[static_cast<std::size_t>(u)];
    if (radius && du >= *radius) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      if (depth[static_cast<std::size_t>(nb.id)] >= 0) continue;
      depth[static_cast<std::size_t>(nb.id)] = du + 1;
      depths.emplace(nb.id, du + 1);
      queue.push_back(nb.id);
    }
  }
  return depths;
}

Trajectory dijkstra_path(const ConnectivityGraph& g, NodeId src, NodeId dst) {
  if (!g.contains(src)) throw NodeNotFound("src " + std::to_string(src));
  if (!g.contains(dst)) throw NodeNotFound("dst " + std::to_string(dst));
  if (src == dst) return {src};

  constexpr double kInf = std::numeric_limits<double>::infinity();

  // Distances toward dst, so the path can then be walked forward from src
  // taking the smallest next id that stays on a shortest path.
  std::vector<double> dist(static_cast<std::size_t>(g.node_count()), kInf);
  using QueueItem = std::pair<double, NodeId>;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
  dist[static_cast<std::size_t>(dst)] = 0.0;
  queue.emplace(0.0, dst);

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (const Neighbor& nb : g.neighbors(u)) {
      const double alt = d + nb.w;
      if (alt < dist[static_cast<std::size_t>(nb.id)]) {
        dist[static_cast<std::size_t>(nb.id)] = alt;
        queue.emplace(alt, nb.id);
      }
    }
  }

  if (dist[static_cast<std::size_t>(src)] == kInf) {
    throw Unreachable("no path " + std::to_string(src) + " -> " +
                      std::to_string(dst));
  }

  // dist[u] was produced as w(u,v) + dist[v] for at least one settled
  // neighbor v, so the exact floating-point equality below always finds a
  // successor. Neighbors are scanned in ascending id order.
  Trajectory path{src};
  NodeId u = src;
  while (u != dst) {
    NodeId next = -1;
    const double du = dist[static_cast<std::size_t>(u)];
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.w + dist[static_cast<std::size_t>(nb.id)] == du) {
        next = nb.id;
        break;
      }
    }
    if (next < 0) {
      throw Unreachable("shortest-path walk stalled at " + std::to_string(u));
    }
    path.push_back(next);
    u = next;
  }
  return path;
}

double path_weight(const ConnectivityGraph& g, const Trajectory& path) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    bool found = false;
    for (const Neighbor& nb : g.neighbors(path[i - 1])) {
      if (nb.id == path[i]) {
        total += nb.w;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InvalidTrajectory("nodes " + std::to_string(path[i - 1]) + " and " +
                              std::to_string(path[i]) + " are not adjacent");
    }
  }
  return total;
}

}  // namespace footfall
