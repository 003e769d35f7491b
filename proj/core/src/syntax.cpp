#include "footfall/syntax.hpp"

#include <algorithm>
#include <sstream>

#include "footfall/errors.hpp"
#include "textio.hpp"

namespace footfall {

using detail::fmt_double;

double local_closeness(const ConnectivityGraph& g, NodeId i, int radius) {
  const auto depths = bfs_depths(g, i, radius);
  long long total = 0;
  for (const auto& [node, d] : depths) total += d;
  if (total == 0) {
    throw IsolatedNode("node " + std::to_string(i) +
                       " has no neighbors within radius " +
                       std::to_string(radius));
  }
  return 1.0 / static_cast<double>(total);
}

SyntaxMetrics compute_syntax_metrics(const ConnectivityGraph& g, int radius) {
  if (g.node_count() == 0) {
    throw EmptyGraph("cannot compute syntax metrics on an empty graph");
  }

  SyntaxMetrics m;
  m.radius = radius;
  m.nodes.resize(static_cast<std::size_t>(g.node_count()));

  for (NodeId i = 0; i < g.node_count(); ++i) {
    NodeSyntax& row = m.nodes[static_cast<std::size_t>(i)];
    row.node_id = i;

    const auto depths = bfs_depths(g, i, radius);
    long long total = 0;
    for (const auto& [node, d] : depths) total += d;
    row.total_depth = total;
    row.k_local = static_cast<int>(depths.size()) + 1;  // includes i

    if (total > 0) {
      row.closeness = 1.0 / static_cast<double>(total);
    }
    if (row.k_local >= 2) {
      row.mean_depth =
          static_cast<double>(total) / static_cast<double>(row.k_local - 1);
    }
    if (row.k_local >= 3) {
      row.ra = 2.0 * (*row.mean_depth - 1.0) /
               static_cast<double>(row.k_local - 2);
      row.score = -*row.ra;
    }
  }
  return m;
}

std::vector<NodeId> rank_by_integration(const SyntaxMetrics& m) {
  std::vector<NodeId> order;
  order.reserve(m.nodes.size());
  for (const NodeSyntax& row : m.nodes) order.push_back(row.node_id);

  std::sort(order.begin(), order.end(), [&m](NodeId a, NodeId b) {
    const auto& ra_a = m.nodes[static_cast<std::size_t>(a)].ra;
    const auto& ra_b = m.nodes[static_cast<std::size_t>(b)].ra;
    if (ra_a.has_value() != ra_b.has_value()) return ra_a.has_value();
    if (ra_a && *ra_a != *ra_b) return *ra_a < *ra_b;
    return a < b;
  });
  return order;
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

}  // namespace

std::string metrics_to_csv(const SyntaxMetrics& m) {
  std::ostringstream out;
  out << "node_id,total_depth,k_local,closeness,mean_depth,ra,score\n";
  for (const NodeSyntax& row : m.nodes) {
    out << row.node_id << ',' << row.total_depth << ',' << row.k_local << ','
        << opt_field(row.closeness) << ',' << opt_field(row.mean_depth) << ','
        << opt_field(row.ra) << ',' << opt_field(row.score) << '\n';
  }
  return out.str();
}

SyntaxMetrics metrics_from_csv(const std::string& text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() ||
      lines[0] != "node_id,total_depth,k_local,closeness,mean_depth,ra,score") {
    throw ParseError("metrics csv: bad header");
  }

  SyntaxMetrics m;
  m.radius = -1;  // not stored in the file
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto fields = detail::split_csv(lines[i]);
    if (fields.size() != 7) {
      throw ParseError("metrics csv: row with " +
                       std::to_string(fields.size()) + " fields");
    }
    NodeSyntax row;
    row.node_id = static_cast<NodeId>(detail::parse_int(fields[0]));
    row.total_depth = detail::parse_int(fields[1]);
    row.k_local = static_cast<int>(detail::parse_int(fields[2]));
    if (!fields[3].empty()) row.closeness = detail::parse_double(fields[3]);
    if (!fields[4].empty()) row.mean_depth = detail::parse_double(fields[4]);
    if (!fields[5].empty()) row.ra = detail::parse_double(fields[5]);
    if (!fields[6].empty()) row.score = detail::parse_double(fields[6]);
    m.nodes.push_back(row);
  }

  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    if (m.nodes[i].node_id != static_cast<NodeId>(i)) {
      throw ParseError("metrics csv: rows must be dense and sorted by node_id");
    }
  }
  return m;
}

void save_metrics(const SyntaxMetrics& m, const std::filesystem::path& path) {
  detail::write_text_file(path, metrics_to_csv(m));
}

SyntaxMetrics load_metrics(const std::filesystem::path& path) {
  return metrics_from_csv(detail::read_text_file(path));
}

}  // namespace footfall
