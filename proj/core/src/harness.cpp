#include "cvikit/harness.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "cvikit/ari.hpp"
#include "cvikit/csv_io.hpp"
#include "cvikit/error.hpp"

namespace cvikit {
namespace fs = std::filesystem;

std::string method_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::KMeans: return "KMeans";
    case Algorithm::Ward: return "Ward";
    case Algorithm::GmmEm: return "EM";
  }
  return "";
}

ScoreMatrix build_score_matrix(const Dataset& dataset, const std::vector<MethodLabeling>& methods,
                               std::span<const Cvi> cvis, const CviOptions& options,
                               std::vector<std::string>& warnings) {
  if (!dataset.true_labels) {
    throw Error(ErrorKind::MissingGroundTruth, "dataset '" + dataset.name + "' has no true labels");
  }
  ScoreMatrix matrix;
  matrix.dataset = dataset.name;
  matrix.ari_row = {"ARI", Direction::Max, {}};
  for (Cvi cvi : cvis) matrix.cvi_rows.push_back({std::string(cvi_name(cvi)), cvi_direction(cvi), {}});

  for (const auto& method : methods) {
    std::vector<double> column;
    try {
      column.push_back(adjusted_rand_index(*dataset.true_labels, method.labels));
      for (Cvi cvi : cvis) column.push_back(compute_cvi(cvi, dataset.points, method.labels, options));
    } catch (const Error& e) {
      warnings.push_back(dataset.name + ": dropping method " + method.method + ": " +
                         std::string(to_string(e.kind())) + ": " + e.what());
      continue;
    }
    matrix.methods.push_back(method.method);
    matrix.ari_row.scores.push_back(column[0]);
    for (std::size_t c = 0; c < cvis.size(); ++c) matrix.cvi_rows[c].scores.push_back(column[c + 1]);
  }
  if (matrix.methods.size() < 2) {
    throw Error(ErrorKind::DegeneratePartition,
                "dataset '" + dataset.name + "' has fewer than 2 usable clustering methods");
  }
  matrix.validate();
  return matrix;
}

BenchmarkResult evaluate_matrices(std::vector<ScoreMatrix> matrices) {
  std::stable_sort(matrices.begin(), matrices.end(),
                   [](const ScoreMatrix& a, const ScoreMatrix& b) { return a.dataset < b.dataset; });
  BenchmarkResult result;
  for (const auto& m : matrices) result.evaluations.push_back(evaluate_score_matrix(m));
  result.report = aggregate(result.evaluations);
  result.matrices = std::move(matrices);
  return result;
}

namespace {

bool strip_suffix(std::string& s, std::string_view suffix) {
  if (!s.ends_with(suffix)) return false;
  s.resize(s.size() - suffix.size());
  return true;
}

struct Corpus {
  std::vector<fs::path> datasets;
  std::vector<fs::path> score_files;
  // dataset name -> (method, file)
  std::map<std::string, std::vector<std::pair<std::string, fs::path>>> label_files;
};

Corpus scan_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::Io, "corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& path : files) {
    std::string name = path.filename().string();
    if (strip_suffix(name, ".scores.csv")) {
      corpus.score_files.push_back(path);
    } else if (strip_suffix(name, ".labels.csv")) {
      const auto dot = name.rfind('.');
      if (dot == std::string::npos) continue;
      corpus.label_files[name.substr(0, dot)].emplace_back(name.substr(dot + 1), path);
    } else if (strip_suffix(name, ".csv")) {
      corpus.datasets.push_back(path);
    }
  }
  return corpus;
}

}  // namespace

BenchmarkResult run_benchmark(const BenchmarkConfig& config) {
  const Corpus corpus = scan_corpus(config.corpus_dir);
  std::vector<ScoreMatrix> matrices;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, MethodLabeling>> produced;

  for (const auto& path : corpus.datasets) {
    Dataset dataset = load_dataset_csv(path);
    if (!dataset.true_labels) {
      warnings.push_back(dataset.name + ": no label column, skipped");
      continue;
    }
    if (config.standardize) dataset.points = standardize(dataset.points);
    const std::size_t classes = dataset.true_labels->k();

    std::vector<MethodLabeling> methods;
    for (Algorithm algorithm : config.clusterers) {
      try {
        auto cfg = ClusteringConfig::defaults(algorithm, classes, config.seed);
        methods.push_back({method_name(algorithm), cluster(dataset.points, cfg)});
        produced.emplace_back(dataset.name, methods.back());
      } catch (const Error& e) {
        warnings.push_back(dataset.name + ": clusterer " + method_name(algorithm) + " failed: " +
                           std::string(to_string(e.kind())) + ": " + e.what());
      }
    }
    if (auto it = corpus.label_files.find(dataset.name); it != corpus.label_files.end()) {
      for (const auto& [method, file] : it->second) {
        Labeling labels = load_label_file(file);
        if (labels.size() != dataset.size()) {
          warnings.push_back(dataset.name + ": label file " + file.filename().string() +
                             " has the wrong length, skipped");
          continue;
        }
        methods.push_back({method, std::move(labels)});
      }
    }

    try {
      matrices.push_back(build_score_matrix(dataset, methods, config.cvis, config.cvi_options, warnings));
    } catch (const Error& e) {
      warnings.push_back(dataset.name + ": skipped: " + e.what());
    }
  }
  for (const auto& path : corpus.score_files) matrices.push_back(load_score_matrix(path));

  BenchmarkResult result = evaluate_matrices(std::move(matrices));
  result.warnings = std::move(warnings);
  if (config.output_dir) {
    write_reports(result, *config.output_dir, config.format);
    for (const auto& [name, m] : produced)
      save_label_file(*config.output_dir / (name + "." + m.method + ".labels.csv"), m.labels);
  }
  return result;
}

void write_reports(const BenchmarkResult& result, const fs::path& dir, OutputFormat format) {
  fs::create_directories(dir);
  const std::string ext = format == OutputFormat::Csv ? ".csv" : ".txt";
  auto write = [&](const fs::path& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    render_table(out, table, format);
  };
  for (std::size_t i = 0; i < result.matrices.size(); ++i) {
    const auto& m = result.matrices[i];
    save_score_matrix(dir / (m.dataset + ".scores.csv"), m);
    if (format == OutputFormat::Text) write(dir / (m.dataset + ".scores.txt"), score_table(m));
    write(dir / (m.dataset + ".ranks" + ext), rank_sequence_table(m, result.evaluations[i]));
  }
  write(dir / ("hit_table" + ext), hit_table(result.report));
  write(dir / ("rankdiff_table" + ext), rankdiff_table(result.report));
}

}  // namespace cvikit
