#include "footfall/osm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "footfall/errors.hpp"
#include "textio.hpp"

namespace footfall {

namespace {

constexpr double kEarthRadiusM = 6371000.0;
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

using OsmId = std::int64_t;

struct OsmWay {
  std::vector<OsmId> refs;
};

}  // namespace

double haversine_m(const LatLon& a, const LatLon& b) {
  const double lat1 = a.lat * kDegToRad;
  const double lat2 = b.lat * kDegToRad;
  const double dlat = (b.lat - a.lat) * kDegToRad;
  const double dlon = (b.lon - a.lon) * kDegToRad;
  const double s = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(s)));
}

ConnectivityGraph parse_osm_extract(const std::string& xml_text) {
  namespace pt = boost::property_tree;

  pt::ptree doc;
  try {
    std::istringstream in(xml_text);
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw MalformedXml(std::string("osm xml: ") + e.what());
  }

  const auto osm = doc.get_child_optional("osm");
  if (!osm) {
    throw MalformedXml("osm xml: missing <osm> root element");
  }

  std::map<OsmId, LatLon> node_coords;
  std::vector<OsmWay> highways;

  try {
    for (const auto& [name, child] : *osm) {
      if (name == "node") {
        const auto id = child.get<OsmId>("<xmlattr>.id");
        node_coords[id] = {child.get<double>("<xmlattr>.lat"),
                           child.get<double>("<xmlattr>.lon")};
      } else if (name == "way") {
        OsmWay way;
        bool is_highway = false;
        for (const auto& [elem, sub] : child) {
          if (elem == "nd") {
            way.refs.push_back(sub.get<OsmId>("<xmlattr>.ref"));
          } else if (elem == "tag" &&
                     sub.get<std::string>("<xmlattr>.k", "") == "highway") {
            is_highway = true;
          }
        }
        if (is_highway && way.refs.size() >= 2) {
          highways.push_back(std::move(way));
        }
      }
    }
  } catch (const pt::ptree_error& e) {
    throw MalformedXml(std::string("osm xml: ") + e.what());
  }

  if (highways.empty()) {
    throw NoHighways("extract contains no way tagged highway");
  }

  // Intersections: way endpoints, plus nodes used by two or more kept ways.
  std::map<OsmId, int> way_usage;
  std::set<OsmId> cut_nodes;
  for (const OsmWay& way : highways) {
    cut_nodes.insert(way.refs.front());
    cut_nodes.insert(way.refs.back());
    std::set<OsmId> distinct(way.refs.begin(), way.refs.end());
    for (const OsmId id : distinct) ++way_usage[id];
  }
  for (const auto& [id, uses] : way_usage) {
    if (uses >= 2) cut_nodes.insert(id);
  }

  const auto coord_of = [&node_coords](OsmId id) -> const LatLon& {
    const auto it = node_coords.find(id);
    if (it == node_coords.end()) {
      throw MalformedXml("way references unknown node " + std::to_string(id));
    }
    return it->second;
  };

  // Collapse geometry chains between cut nodes into weighted edges; parallel
  // chains keep the shortest, loops back to the same cut node are dropped.
  std::map<std::pair<OsmId, OsmId>, double> chain_edges;
  for (const OsmWay& way : highways) {
    OsmId chain_start = way.refs.front();
    double length = 0.0;
    for (std::size_t i = 1; i < way.refs.size(); ++i) {
      length += haversine_m(coord_of(way.refs[i - 1]), coord_of(way.refs[i]));
      if (!cut_nodes.count(way.refs[i])) continue;

      const OsmId a = std::min(chain_start, way.refs[i]);
      const OsmId b = std::max(chain_start, way.refs[i]);
      if (a != b && length > 0.0) {
        const auto it = chain_edges.find({a, b});
        if (it == chain_edges.end() || length < it->second) {
          chain_edges[{a, b}] = length;
        }
      }
      chain_start = way.refs[i];
      length = 0.0;
    }
  }

  // Dense relabeling in ascending OSM-id order.
  std::map<OsmId, NodeId> dense;
  for (const auto& [pair, w] : chain_edges) {
    dense.emplace(pair.first, 0);
    dense.emplace(pair.second, 0);
  }
  NodeId next_id = 0;
  for (auto& [osm_id, node_id] : dense) node_id = next_id++;

  std::vector<std::vector<NodeId>> adjacency(dense.size());
  for (const auto& [pair, w] : chain_edges) {
    const NodeId u = dense[pair.first];
    const NodeId v = dense[pair.second];
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }

  // Largest connected component (ties: the one with the smallest node id).
  std::vector<int> component(dense.size(), -1);
  int best_component = -1;
  std::size_t best_size = 0;
  int num_components = 0;
  for (std::size_t root = 0; root < dense.size(); ++root) {
    if (component[root] >= 0) continue;
    const int label = num_components++;
    std::size_t size = 0;
    std::deque<NodeId> queue{static_cast<NodeId>(root)};
    component[root] = label;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      ++size;
      for (const NodeId v : adjacency[static_cast<std::size_t>(u)]) {
        if (component[static_cast<std::size_t>(v)] < 0) {
          component[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_component = label;
    }
  }

  std::vector<NodeId> final_id(dense.size(), -1);
  std::vector<LatLon> coords;
  NodeId kept = 0;
  for (const auto& [osm_id, node_id] : dense) {
    if (component[static_cast<std::size_t>(node_id)] == best_component) {
      final_id[static_cast<std::size_t>(node_id)] = kept++;
      coords.push_back(coord_of(osm_id));
    }
  }

  std::vector<Edge> edges;
  for (const auto& [pair, w] : chain_edges) {
    const NodeId u = final_id[static_cast<std::size_t>(dense[pair.first])];
    const NodeId v = final_id[static_cast<std::size_t>(dense[pair.second])];
    if (u >= 0 && v >= 0) {
      edges.push_back({u, v, w});
    }
  }

  return ConnectivityGraph(std::move(edges), kept, std::move(coords));
}

ConnectivityGraph load_osm_extract(const std::filesystem::path& path) {
  return parse_osm_extract(detail::read_text_file(path));
}

}  // namespace footfall
