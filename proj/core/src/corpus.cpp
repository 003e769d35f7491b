#include "footfall/corpus.hpp"

#include <sstream>

#include <json.hpp>

#include "footfall/errors.hpp"
#include "footfall/random.hpp"
#include "textio.hpp"

namespace footfall {

using nlohmann::json;

const char* to_string(CorpusRole role) {
  switch (role) {
    case CorpusRole::train:
      return "train";
    case CorpusRole::test:
      return "test";
    default:
      return "unsplit";
  }
}

CorpusRole corpus_role_from_string(const std::string& s) {
  if (s == "train") return CorpusRole::train;
  if (s == "test") return CorpusRole::test;
  if (s == "unsplit") return CorpusRole::unsplit;
  throw ParseError("unknown corpus role '" + s + "'");
}

ConnectivityGraph make_grid(int width, int height) {
  if (width < 1 || height < 1) {
    throw ConfigError("grid dimensions must be >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(width) * height * 2);
  const auto id = [width](int r, int c) {
    return static_cast<NodeId>(r * width + c);
  };
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < height) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  }
  return ConnectivityGraph(std::move(edges),
                           static_cast<NodeId>(width) * height);
}

TrajectorySet generate_corpus(const ConnectivityGraph& g, int count,
                              std::uint64_t seed) {
  if (g.node_count() < 2) {
    throw GraphTooSmall("corpus generation needs at least 2 nodes");
  }
  if (count < 1) {
    throw ConfigError("count must be >= 1");
  }

  Rng rng(seed);
  const auto n = static_cast<std::uint64_t>(g.node_count());

  TrajectorySet d;
  d.seed = seed;
  d.role = CorpusRole::unsplit;
  d.trajectories.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    NodeId start = 0;
    NodeId goal = 0;
    do {
      start = static_cast<NodeId>(uniform_below(rng, n));
      goal = static_cast<NodeId>(uniform_below(rng, n));
    } while (start == goal);
    d.trajectories.push_back(dijkstra_path(g, start, goal));
  }
  return d;
}

std::pair<TrajectorySet, TrajectorySet> split_corpus(const TrajectorySet& d,
                                                     int train_count,
                                                     int test_count,
                                                     std::uint64_t seed) {
  if (train_count < 0 || test_count < 0 ||
      train_count + test_count != d.size()) {
    throw BadSplit("train " + std::to_string(train_count) + " + test " +
                   std::to_string(test_count) + " != corpus size " +
                   std::to_string(d.size()));
  }

  std::vector<std::size_t> order(d.trajectories.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {  // Fisher-Yates
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(order[i - 1], order[j]);
  }

  TrajectorySet train{{}, seed, CorpusRole::train};
  TrajectorySet test{{}, seed, CorpusRole::test};
  train.trajectories.reserve(static_cast<std::size_t>(train_count));
  test.trajectories.reserve(static_cast<std::size_t>(test_count));
  for (int i = 0; i < train_count; ++i) {
    train.trajectories.push_back(d.trajectories[order[static_cast<std::size_t>(i)]]);
  }
  for (int i = train_count; i < d.size(); ++i) {
    test.trajectories.push_back(d.trajectories[order[static_cast<std::size_t>(i)]]);
  }
  return {std::move(train), std::move(test)};
}

std::string traces_to_jsonl(const TrajectorySet& d,
                            const std::string& graph_hash) {
  std::ostringstream out;
  out << "{\"seed\":" << d.seed << ",\"role\":\"" << to_string(d.role)
      << "\",\"graph_hash\":\"" << graph_hash << "\"}\n";
  for (const Trajectory& z : d.trajectories) {
    out << '[';
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (i > 0) out << ',';
      out << z[i];
    }
    out << "]\n";
  }
  return out.str();
}

TrajectorySet traces_from_jsonl(const std::string& text,
                                std::string* graph_hash_out) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) {
    throw ParseError("traces jsonl: empty file");
  }

  TrajectorySet d;
  try {
    const json header = json::parse(lines[0]);
    d.seed = header.at("seed").get<std::uint64_t>();
    d.role = corpus_role_from_string(header.at("role").get<std::string>());
    if (graph_hash_out) {
      *graph_hash_out = header.at("graph_hash").get<std::string>();
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("traces jsonl header: ") + e.what());
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    try {
      const json arr = json::parse(lines[i]);
      if (!arr.is_array()) {
        throw ParseError("traces jsonl: line " + std::to_string(i + 1) +
                         " is not an array");
      }
      Trajectory z;
      z.reserve(arr.size());
      for (const auto& v : arr) z.push_back(v.get<NodeId>());
      d.trajectories.push_back(std::move(z));
    } catch (const json::exception& e) {
      throw ParseError("traces jsonl line " + std::to_string(i + 1) + ": " +
                       e.what());
    }
  }
  return d;
}

void save_traces(const TrajectorySet& d, const std::string& graph_hash,
                 const std::filesystem::path& path) {
  detail::write_text_file(path, traces_to_jsonl(d, graph_hash));
}

TrajectorySet load_traces(const std::filesystem::path& path,
                          std::string* graph_hash_out) {
  return traces_from_jsonl(detail::read_text_file(path), graph_hash_out);
}

}  // namespace footfall
