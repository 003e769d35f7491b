#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "footfall/graph.hpp"

namespace footfall {

enum class CorpusRole { unsplit, train, test };

const char* to_string(CorpusRole role);
CorpusRole corpus_role_from_string(const std::string& s);

/// A demonstration set D = {z_1..z_M} with the seed that produced it and its
/// train/test role. Trajectories are raw (unpadded) node sequences.
struct TrajectorySet {
  std::vector<Trajectory> trajectories;
  std::uint64_t seed = 0;
  CorpusRole role = CorpusRole::unsplit;

  int size() const noexcept { return static_cast<int>(trajectories.size()); }
};

/// width x height lattice with unit edge weights; node id = row*width + col.
/// Throws ConfigError when either dimension is < 1.
ConnectivityGraph make_grid(int width, int height);

/// Draws (start, goal) pairs uniformly with the seeded PRNG, resampling when
/// start == goal, and routes each pair with dijkstra_path. Fully
/// deterministic per seed. Expects a connected graph; throws GraphTooSmall
/// below 2 nodes, Unreachable if a drawn pair is disconnected.
TrajectorySet generate_corpus(const ConnectivityGraph& g, int count,
                              std::uint64_t seed);

/// Seeded shuffle, then the first train_count trajectories become the train
/// set and the remaining test_count the test set. Throws BadSplit when the
/// counts do not sum to the corpus size.
std::pair<TrajectorySet, TrajectorySet> split_corpus(const TrajectorySet& d,
                                                     int train_count,
                                                     int test_count,
                                                     std::uint64_t seed);

/// traces.jsonl: first line is a header object
///   {"seed":S,"role":"train","graph_hash":"..."}
/// then one JSON array of node ids per line.
std::string traces_to_jsonl(const TrajectorySet& d,
                            const std::string& graph_hash);

/// Parses traces.jsonl; when graph_hash_out is non-null it receives the
/// header hash. Throws ParseError.
TrajectorySet traces_from_jsonl(const std::string& text,
                                std::string* graph_hash_out = nullptr);

void save_traces(const TrajectorySet& d, const std::string& graph_hash,
                 const std::filesystem::path& path);
TrajectorySet load_traces(const std::filesystem::path& path,
                          std::string* graph_hash_out = nullptr);

}  // namespace footfall
