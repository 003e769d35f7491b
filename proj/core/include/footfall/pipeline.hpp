#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "footfall/eval.hpp"

namespace footfall {

/// One experiment end to end. The graph comes either from graph_path or, when
/// that is empty, from a generated grid_width x grid_height unit-weight grid.
/// A single seed drives corpus generation, the split, and theta init.
struct PipelineConfig {
  std::string graph_path;  // empty: generate the grid below
  int grid_width = 12;
  int grid_height = 12;
  std::string output_dir = "out";

  int count = 400;
  int train_count = 300;
  int test_count = 100;
  std::uint64_t seed = 1;

  int radius = 2;

  int iterations = 100;
  double eta0 = 1.0;
  double decay = 0.97;
  double tolerance = 1e-8;
  std::string feature_mode = "one-hot";
};

/// Throws ConfigError or BadSplit on invalid combinations.
void validate_config(const PipelineConfig& cfg);

/// Config file: INI-style sections with key = value lines and # comments.
/// Sections: [graph] path, grid_width, grid_height; [corpus] count, train,
/// test; [syntax] radius; [train] iterations, eta0, decay, tolerance,
/// feature_mode; [run] seed, output_dir. Unknown keys are rejected.
PipelineConfig parse_pipeline_config(const std::string& text);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

struct PipelineOutputs {
  std::filesystem::path graph_json;
  std::filesystem::path traces_jsonl;
  std::filesystem::path traces_train_jsonl;
  std::filesystem::path traces_test_jsonl;
  std::filesystem::path metrics_csv;
  std::filesystem::path model_json;
  std::filesystem::path history_csv;
  std::filesystem::path report_json;
  EvalReport report;
};

/// Runs every stage: graph -> corpus -> split -> syntax -> train -> evaluate,
/// writing all artifact files into cfg.output_dir (created if missing).
/// Outputs are byte-deterministic given identical config.
PipelineOutputs run_pipeline(const PipelineConfig& cfg);

}  // namespace footfall
