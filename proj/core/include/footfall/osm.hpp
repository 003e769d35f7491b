#pragma once

#include <filesystem>
#include <string>

#include "footfall/graph.hpp"

namespace footfall {

/// Great-circle distance in meters (earth radius 6371000 m).
double haversine_m(const LatLon& a, const LatLon& b);

/// Builds an intersection graph from an OSM XML extract.
///
/// Keeps only ways carrying a `highway` tag. Graph nodes are way endpoints
/// plus any OSM node used by two or more kept ways; chains of geometry nodes
/// between them collapse into single edges whose weight is the summed
/// haversine length in meters. Parallel chains between the same node pair
/// keep the shortest one, and degenerate loops back to the same node are
/// dropped. Only the largest connected component is retained, relabeled to
/// dense ids in ascending OSM-id order.
///
/// Throws MalformedXml or NoHighways.
ConnectivityGraph parse_osm_extract(const std::string& xml_text);

ConnectivityGraph load_osm_extract(const std::filesystem::path& path);

}  // namespace footfall
