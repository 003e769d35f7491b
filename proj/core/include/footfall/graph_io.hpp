#pragma once

#include <filesystem>
#include <string>

#include "footfall/graph.hpp"

namespace footfall {

/// graph.json:
///   {"nodes":[{"id":0,"lat":...,"lon":...}],"edges":[{"u":0,"v":1,"w":1.0}]}
/// lat/lon are optional but must be present on all nodes or none. Node ids
/// must be exactly 0..n-1. Edge weight defaults to 1.0 when absent.
/// Output is byte-deterministic; doubles carry 17 significant digits.
std::string graph_to_json(const ConnectivityGraph& g);
ConnectivityGraph graph_from_json(const std::string& text);

void save_graph(const ConnectivityGraph& g, const std::filesystem::path& path);
ConnectivityGraph load_graph(const std::filesystem::path& path);

/// FNV-1a over node count and the canonical weighted edge list, as a 16-char
/// hex string. Used by trace files to detect graph/corpus mismatches.
std::string graph_hash(const ConnectivityGraph& g);

}  // namespace footfall
