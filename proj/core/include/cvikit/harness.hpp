#pragma once

// Benchmark pipeline: cluster each dataset (or ingest external labelings
// and score matrices), score every labeling with ARI and the configured
// indices, then evaluate and aggregate across datasets.
//
// Corpus directory layout, all files discovered by suffix:
//   <name>.csv                   labeled dataset in canonical CSV
//   <name>.<method>.labels.csv   external labeling of <name> by <method>
//   <name>.scores.csv            precomputed score matrix (no clustering)

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvikit/clustering.hpp"
#include "cvikit/dataset.hpp"
#include "cvikit/eval_metrics.hpp"
#include "cvikit/report.hpp"
#include "cvikit/scores.hpp"
#include "cvikit/validity.hpp"

namespace cvikit {

struct MethodLabeling {
  std::string method;
  Labeling labels;
};

struct BenchmarkConfig {
  std::filesystem::path corpus_dir;
  std::optional<std::filesystem::path> output_dir;
  std::vector<Algorithm> clusterers{Algorithm::KMeans, Algorithm::Ward, Algorithm::GmmEm};
  std::vector<Cvi> cvis = all_cvis();
  std::uint64_t seed = 0;
  CviOptions cvi_options;
  bool standardize = false;
  OutputFormat format = OutputFormat::Csv;
};

struct BenchmarkResult {
  std::vector<ScoreMatrix> matrices;
  std::vector<DatasetEvaluation> evaluations;
  EvalReport report;
  std::vector<std::string> warnings;
};

/// Display name of a built-in clusterer column: KMeans, Ward, EM.
std::string method_name(Algorithm algorithm);

/// ARI row plus one row per index. A method whose labeling leaves any
/// index undefined is dropped with a warning; throws degenerate-partition
/// if fewer than two methods remain. Requires dataset.true_labels.
ScoreMatrix build_score_matrix(const Dataset& dataset, const std::vector<MethodLabeling>& methods,
                               std::span<const Cvi> cvis, const CviOptions& options,
                               std::vector<std::string>& warnings);

/// Evaluates and aggregates already-built score matrices.
BenchmarkResult evaluate_matrices(std::vector<ScoreMatrix> matrices);

/// Runs the full pipeline over a corpus directory; datasets are processed
/// in file-name order. Writes reports when `output_dir` is set.
BenchmarkResult run_benchmark(const BenchmarkConfig& config);

/// Per-dataset `<name>.scores.csv` and `<name>.ranks.*`, plus
/// `hit_table.*` and `rankdiff_table.*` in the requested format.
void write_reports(const BenchmarkResult& result, const std::filesystem::path& dir,
                   OutputFormat format);

}  // namespace cvikit
