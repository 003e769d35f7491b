#include "footfall/eval.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "footfall/errors.hpp"
#include "textio.hpp"

namespace footfall {

using detail::fmt_double;
using nlohmann::json;

std::vector<long long> visit_counts(std::span<const Trajectory> trajectories,
                                    NodeId node_count) {
  std::vector<long long> counts(static_cast<std::size_t>(node_count), 0);
  for (const Trajectory& z : trajectories) {
    for (const NodeId s : z) {
      if (s < 0 || s >= node_count) {
        throw InvalidTrajectory("node " + std::to_string(s) +
                                " outside graph of size " +
                                std::to_string(node_count));
      }
      ++counts[static_cast<std::size_t>(s)];
    }
  }
  return counts;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DegenerateInput("pearson_r needs equal-length vectors");
  }
  const std::size_t n = x.size();
  if (n < 3) {
    throw DegenerateInput("pearson_r needs at least 3 points");
  }

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DegenerateInput("pearson_r input has zero variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

EvalReport compare_methods(const SyntaxMetrics& metrics, const IrlResult& irl,
                           const TrajectorySet& test) {
  const auto n = static_cast<NodeId>(metrics.nodes.size());
  if (n == 0 || irl.svf.size() != metrics.nodes.size()) {
    throw GraphMismatch("metrics cover " + std::to_string(metrics.nodes.size()) +
                        " nodes, model covers " + std::to_string(irl.svf.size()));
  }

  std::vector<long long> counts;
  try {
    counts = visit_counts(test.trajectories, n);
  } catch (const InvalidTrajectory& e) {
    throw GraphMismatch(std::string("test set: ") + e.what());
  }

  EvalReport report;
  report.per_node.reserve(static_cast<std::size_t>(n));

  std::vector<double> retained_score;
  std::vector<double> retained_svf;
  std::vector<double> retained_counts;
  for (NodeId i = 0; i < n; ++i) {
    const NodeSyntax& row = metrics.nodes[static_cast<std::size_t>(i)];
    PerNodeRow out;
    out.node_id = i;
    out.test_count = counts[static_cast<std::size_t>(i)];
    out.syntax_score = row.score;
    out.irl_svf = irl.svf[static_cast<std::size_t>(i)];
    report.per_node.push_back(out);

    // Nodes without a defined syntax score leave both correlations, so the
    // two methods are compared on the identical node subset.
    if (row.score) {
      retained_score.push_back(*row.score);
      retained_svf.push_back(out.irl_svf);
      retained_counts.push_back(static_cast<double>(out.test_count));
    }
  }

  report.n_nodes_used = static_cast<int>(retained_counts.size());
  report.pearson_syntax = pearson_r(retained_score, retained_counts);
  report.pearson_irl = pearson_r(retained_svf, retained_counts);
  return report;
}

std::string report_to_json(const EvalReport& r) {
  std::ostringstream out;
  out << "{\"pearson_syntax\":" << fmt_double(r.pearson_syntax)
      << ",\"pearson_irl\":" << fmt_double(r.pearson_irl)
      << ",\"n_nodes_used\":" << r.n_nodes_used << ",\"per_node\":[";
  for (std::size_t i = 0; i < r.per_node.size(); ++i) {
    const PerNodeRow& row = r.per_node[i];
    if (i > 0) out << ",";
    out << "\n{\"node_id\":" << row.node_id
        << ",\"test_count\":" << row.test_count << ",\"syntax_score\":"
        << (row.syntax_score ? fmt_double(*row.syntax_score) : "null")
        << ",\"irl_svf\":" << fmt_double(row.irl_svf) << "}";
  }
  out << "\n]}\n";
  return out.str();
}

EvalReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
    EvalReport r;
    r.pearson_syntax = doc.at("pearson_syntax").get<double>();
    r.pearson_irl = doc.at("pearson_irl").get<double>();
    r.n_nodes_used = doc.at("n_nodes_used").get<int>();
    for (const auto& row : doc.at("per_node")) {
      PerNodeRow out;
      out.node_id = row.at("node_id").get<NodeId>();
      out.test_count = row.at("test_count").get<long long>();
      if (!row.at("syntax_score").is_null()) {
        out.syntax_score = row.at("syntax_score").get<double>();
      }
      out.irl_svf = row.at("irl_svf").get<double>();
      r.per_node.push_back(out);
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report json: ") + e.what());
  }
}

void save_report(const EvalReport& r, const std::filesystem::path& path) {
  detail::write_text_file(path, report_to_json(r));
}

}  // namespace footfall
