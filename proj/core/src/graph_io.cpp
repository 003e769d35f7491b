#include "footfall/graph_io.hpp"

#include <cstdint>
#include <sstream>

#include <json.hpp>

#include "footfall/errors.hpp"
#include "textio.hpp"

namespace footfall {

using nlohmann::json;
using detail::fmt_double;

std::string graph_to_json(const ConnectivityGraph& g) {
  std::ostringstream out;
  out << "{\"nodes\":[";
  const bool with_coords = g.coords().has_value();
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (i > 0) out << ",";
    out << "\n{\"id\":" << i;
    if (with_coords) {
      const LatLon& c = (*g.coords())[static_cast<std::size_t>(i)];
      out << ",\"lat\":" << fmt_double(c.lat)
          << ",\"lon\":" << fmt_double(c.lon);
    }
    out << "}";
  }
  out << "\n],\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ",";
    first = false;
    out << "\n{\"u\":" << e.u << ",\"v\":" << e.v
        << ",\"w\":" << fmt_double(e.w) << "}";
  }
  out << "\n]}\n";
  return out.str();
}

ConnectivityGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges") ||
      !doc["nodes"].is_array() || !doc["edges"].is_array()) {
    throw ParseError("graph json: expected object with nodes and edges arrays");
  }

  const auto& nodes = doc["nodes"];
  const NodeId n = static_cast<NodeId>(nodes.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<LatLon> coords(static_cast<std::size_t>(n));
  int with_coords = 0;

  for (const auto& node : nodes) {
    if (!node.is_object() || !node.contains("id") ||
        !node["id"].is_number_integer()) {
      throw ParseError("graph json: node without integer id");
    }
    const auto id = node["id"].get<std::int64_t>();
    if (id < 0 || id >= n) {
      throw ParseError("graph json: node ids must be dense 0..n-1");
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw ParseError("graph json: duplicate node id " + std::to_string(id));
    }
    seen[static_cast<std::size_t>(id)] = true;

    const bool has_lat = node.contains("lat");
    const bool has_lon = node.contains("lon");
    if (has_lat != has_lon) {
      throw ParseError("graph json: node with lat but no lon (or vice versa)");
    }
    if (has_lat) {
      coords[static_cast<std::size_t>(id)] = {node["lat"].get<double>(),
                                              node["lon"].get<double>()};
      ++with_coords;
    }
  }
  if (with_coords != 0 && with_coords != n) {
    throw ParseError("graph json: coords must be present on all nodes or none");
  }

  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& edge : doc["edges"]) {
    if (!edge.is_object() || !edge.contains("u") || !edge.contains("v")) {
      throw ParseError("graph json: edge without u/v");
    }
    Edge e;
    e.u = static_cast<NodeId>(edge["u"].get<std::int64_t>());
    e.v = static_cast<NodeId>(edge["v"].get<std::int64_t>());
    e.w = edge.contains("w") ? edge["w"].get<double>() : 1.0;
    edges.push_back(e);
  }

  std::optional<std::vector<LatLon>> maybe_coords;
  if (with_coords == n && n > 0) maybe_coords = std::move(coords);
  return ConnectivityGraph(std::move(edges), n, std::move(maybe_coords));
}

void save_graph(const ConnectivityGraph& g, const std::filesystem::path& path) {
  detail::write_text_file(path, graph_to_json(g));
}

ConnectivityGraph load_graph(const std::filesystem::path& path) {
  return graph_from_json(detail::read_text_file(path));
}

std::string graph_hash(const ConnectivityGraph& g) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64 offset basis
  const auto mix = [&h](const std::string& s) {
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  };
  mix("n:" + std::to_string(g.node_count()) + ";");
  for (const Edge& e : g.edges()) {
    mix(std::to_string(e.u) + "," + std::to_string(e.v) + "," +
        fmt_double(e.w) + ";");
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace footfall
