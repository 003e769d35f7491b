#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "footfall/corpus.hpp"
#include "footfall/irl.hpp"
#include "footfall/syntax.hpp"

namespace footfall {

struct PerNodeRow {
  NodeId node_id = 0;
  long long test_count = 0;
  std::optional<double> syntax_score;  // unset when RA undefined
  double irl_svf = 0.0;
};

struct EvalReport {
  double pearson_syntax = 0.0;
  double pearson_irl = 0.0;
  int n_nodes_used = 0;
  std::vector<PerNodeRow> per_node;  // all nodes, sorted by node_id
};

/// Total state occurrences per node over all trajectories; revisits count.
/// Throws InvalidTrajectory when an id is out of range.
std::vector<long long> visit_counts(std::span<const Trajectory> trajectories,
                                    NodeId node_count);

/// Pearson product-moment coefficient. Throws DegenerateInput when lengths
/// differ, are < 3, or either side has zero variance.
double pearson_r(std::span<const double> x, std::span<const double> y);

/// Correlates both predictors against test-set visit counts over the same
/// node subset: nodes with undefined syntax score are dropped from both
/// coefficients. Throws GraphMismatch when metrics, model, and test set do
/// not refer to the same graph; DegenerateInput propagates from pearson_r.
EvalReport compare_methods(const SyntaxMetrics& metrics, const IrlResult& irl,
                           const TrajectorySet& test);

/// report.json with per_node sorted by node_id; undefined syntax scores are
/// serialized as null.
std::string report_to_json(const EvalReport& r);
EvalReport report_from_json(const std::string& text);
void save_report(const EvalReport& r, const std::filesystem::path& path);

}  // namespace footfall
