#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "footfall/graph.hpp"

namespace footfall {

/// Per-node space-syntax metrics at a fixed step radius.
///
/// total_depth  TD_i = sum of hop depths d_ij over nodes with 0 < d_ij <= radius
/// k_local      count of nodes within the radius, including i itself
/// closeness    C_i  = 1 / TD_i                    (needs TD_i > 0)
/// mean_depth   MD_i = TD_i / (k_local - 1)        (needs k_local >= 2)
/// ra           RA_i = 2 (MD_i - 1) / (k_local - 2) (needs k_local >= 3)
/// score        -RA_i, the syntax movement predictor: higher = more integrated
///
/// Quantities whose denominator would vanish are left unset rather than
/// thrown; downstream consumers skip them explicitly.
struct NodeSyntax {
  NodeId node_id = 0;
  long long total_depth = 0;
  int k_local = 1;
  std::optional<double> closeness;
  std::optional<double> mean_depth;
  std::optional<double> ra;
  std::optional<double> score;
};

struct SyntaxMetrics {
  int radius = 2;
  std::vector<NodeSyntax> nodes;  // indexed by node_id
};

/// C_i = 1 / sum of depths within `radius` steps of node i.
/// Throws NodeNotFound, or IsolatedNode when nothing lies within the radius.
double local_closeness(const ConnectivityGraph& g, NodeId i, int radius = 2);

/// All metrics for every node. Throws EmptyGraph on a node-less graph.
SyntaxMetrics compute_syntax_metrics(const ConnectivityGraph& g,
                                     int radius = 2);

/// Node ids sorted ascending by RA (most integrated first). Nodes with
/// undefined RA come last; ties break by node id.
std::vector<NodeId> rank_by_integration(const SyntaxMetrics& m);

/// metrics.csv: header node_id,total_depth,k_local,closeness,mean_depth,ra,score
/// Rows sorted by node_id, undefined values as empty fields, doubles with
/// 17 significant digits.
std::string metrics_to_csv(const SyntaxMetrics& m);

/// Parses metrics.csv back. The radius is not recorded in the file; the
/// returned struct carries radius = -1.
SyntaxMetrics metrics_from_csv(const std::string& text);

void save_metrics(const SyntaxMetrics& m, const std::filesystem::path& path);
SyntaxMetrics load_metrics(const std::filesystem::path& path);

}  // namespace footfall
