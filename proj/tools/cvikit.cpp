// cvikit: cluster validity scoring, CVI evaluation and benchmark reports.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cvikit/ari.hpp"
#include "cvikit/csv_io.hpp"
#include "cvikit/dsi.hpp"
#include "cvikit/error.hpp"
#include "cvikit/harness.hpp"
#include "cvikit/k_prediction.hpp"
#include "cvikit/report.hpp"
#include "cvikit/synthetic.hpp"
#include "cvikit/validity.hpp"

namespace fs = std::filesystem;
using namespace cvikit;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string cvis = "all";
  std::string clusterers = "kmeans,ward,gmm";
  std::string k_range = "2..6";
  std::optional<std::size_t> subsample_cap;
  bool standardize = false;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "text"}))->capture_default_str();
}

void add_seed(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "RNG seed for clusterers and subsampling")->capture_default_str();
}

CviOptions cvi_options(const Common& c) {
  CviOptions o;
  o.subsample_cap = c.subsample_cap;
  o.seed = c.seed;
  return o;
}

std::vector<Algorithm> parse_clusterers(const std::string& list) {
  std::vector<Algorithm> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    if (end > start) out.push_back(parse_algorithm(std::string_view(list).substr(start, end - start)));
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty clusterer list");
  return out;
}

Dataset load_for_cli(const std::string& path, bool standardize_points) {
  Dataset d = load_dataset_csv(path);
  if (standardize_points) d.points = standardize(d.points);
  return d;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

std::string value_cell(double v, OutputFormat f) {
  return f == OutputFormat::Csv ? format_double(v) : display_number(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cvikit: internal cluster validity indices, DSI, and CVI evaluation"};
  app.require_subcommand(1);
  Common c;

  // score
  std::string data_path;
  std::optional<std::string> labels_path;
  auto* score = app.add_subcommand("score", "Compute validity indices for one labeling");
  score->add_option("--data", data_path, "Canonical dataset CSV")->required();
  score->add_option("--labels", labels_path, "Label file (default: the dataset's label column)");
  score->add_option("--cvis", c.cvis, "Comma-separated indices or 'all'")->capture_default_str();
  score->add_option("--subsample-cap", c.subsample_cap, "Point cap for pair-based indices");
  score->add_flag("--standardize", c.standardize, "Z-score features first");
  add_seed(score, c);
  add_format(score, c);

  // dsi
  auto* dsi_cmd = app.add_subcommand("dsi", "Compute the Distance-based Separability Index");
  dsi_cmd->add_option("--data", data_path, "Canonical dataset CSV")->required();
  dsi_cmd->add_option("--labels", labels_path, "Label file (default: the dataset's label column)");
  dsi_cmd->add_option("--subsample-cap", c.subsample_cap, "Evaluate on at most this many points");
  dsi_cmd->add_flag("--standardize", c.standardize, "Z-score features first");
  add_seed(dsi_cmd, c);
  add_format(dsi_cmd, c);

  // evaluate
  std::vector<std::string> score_files;
  std::optional<std::string> output_dir;
  auto* evaluate = app.add_subcommand("evaluate", "Hit-the-best and rank-difference from score matrices");
  evaluate->add_option("files", score_files, "Score-matrix CSV files")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--output", output_dir, "Also write reports into this directory");
  add_format(evaluate, c);

  // benchmark
  std::string corpus;
  auto* bench = app.add_subcommand("benchmark", "Cluster, score and evaluate a corpus directory");
  bench->add_option("--corpus", corpus, "Directory of datasets, label files and score matrices")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--output", output_dir, "Report directory");
  bench->add_option("--clusterers", c.clusterers, "kmeans,ward,gmm")->capture_default_str();
  bench->add_option("--cvis", c.cvis, "Comma-separated indices or 'all'")->capture_default_str();
  bench->add_option("--subsample-cap", c.subsample_cap, "Point cap for pair-based indices");
  bench->add_flag("--standardize", c.standardize, "Z-score features first");
  add_seed(bench, c);
  add_format(bench, c);

  // predict-k
  std::optional<std::size_t> true_c;
  auto* predict = app.add_subcommand("predict-k", "Predict the number of clusters by sweeping k");
  predict->add_option("--data", data_path, "Canonical dataset CSV")->required();
  predict->add_option("--clusterers", c.clusterers, "kmeans,ward,gmm")->default_str("kmeans,gmm");
  predict->add_option("--cvis", c.cvis, "Comma-separated indices or 'all'")->capture_default_str();
  predict->add_option("--k-range", c.k_range, "e.g. 2..6 or 2,3,5")->capture_default_str();
  predict->add_option("--true-c", true_c, "Known class count (default: from labels)");
  predict->add_option("--subsample-cap", c.subsample_cap, "Point cap for pair-based indices");
  predict->add_flag("--standardize", c.standardize, "Z-score features first");
  bool show_scores = false;
  predict->add_flag("--scores", show_scores, "Also print the per-k scores");
  add_seed(predict, c);
  add_format(predict, c);

  // synth
  SyntheticSpec spec;
  std::string kind = "blobs";
  std::optional<std::string> synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a seeded labeled synthetic dataset");
  synth->add_option("--kind", kind, "blobs|ring|moons")->capture_default_str();
  synth->add_option("--classes", spec.classes, "Blob count")->capture_default_str();
  synth->add_option("--per-class", spec.per_class, "Points per class")->capture_default_str();
  synth->add_option("--dims", spec.dims, "Blob dimensionality")->capture_default_str();
  synth->add_option("--std", spec.stddev, "Noise standard deviation")->capture_default_str();
  synth->add_option("--separation", spec.separation, "Distance between neighbouring blob centres")
      ->capture_default_str();
  synth->add_option("--radius", spec.radius, "Ring or moon radius")->capture_default_str();
  synth->add_option("--name", spec.name, "Dataset name");
  synth->add_option("-o,--output", synth_out, "Output CSV (default: stdout)");
  add_seed(synth, c);

  CLI11_PARSE(app, argc, argv);

  try {
    const OutputFormat format = parse_output_format(c.format);

    if (score->parsed()) {
      const Dataset d = load_for_cli(data_path, c.standardize);
      const Labeling labels = labels_path ? load_label_file(*labels_path)
                              : d.true_labels ? *d.true_labels
                                              : throw Error(ErrorKind::MissingGroundTruth,
                                                            "no --labels and no label column");
      if (labels.size() != d.size()) throw Error(ErrorKind::InvalidInput, "label count does not match point count");
      Table table;
      table.header = {"Validity", "Direction", "Value"};
      if (labels_path && d.true_labels) {
        table.rows.push_back({"ARI", "+", value_cell(adjusted_rand_index(*d.true_labels, labels), format)});
      }
      int failures = 0;
      for (Cvi cvi : parse_cvi_list(c.cvis)) {
        const std::string marker(1, direction_marker(cvi_direction(cvi)));
        try {
          table.rows.push_back({std::string(cvi_name(cvi)), marker,
                                value_cell(compute_cvi(cvi, d.points, labels, cvi_options(c)), format)});
        } catch (const Error& e) {
          ++failures;
          std::cerr << "warning: " << cvi_name(cvi) << ": " << to_string(e.kind()) << ": " << e.what() << '\n';
          table.rows.push_back({std::string(cvi_name(cvi)), marker, std::string(to_string(e.kind()))});
        }
      }
      render_table(std::cout, table, format);
      return failures == 0 ? 0 : 1;
    }

    if (dsi_cmd->parsed()) {
      const Dataset d = load_for_cli(data_path, c.standardize);
      const Labeling labels = labels_path ? load_label_file(*labels_path)
                              : d.true_labels ? *d.true_labels
                                              : throw Error(ErrorKind::MissingGroundTruth,
                                                            "no --labels and no label column");
      DsiOptions options;
      options.subsample_cap = c.subsample_cap;
      options.seed = c.seed;
      const DsiScore s = dsi(d.points, labels, options);
      for (std::size_t cls : s.skipped_classes)
        std::cerr << "warning: class " << cls << " has fewer than 2 members, excluded\n";
      Table table;
      table.header = {"Class", "KS"};
      for (std::size_t i = 0; i < s.per_class.size(); ++i) {
        const std::size_t cls = s.evaluated_classes[i];
        const std::string name =
            !labels_path && cls < d.class_names.size() ? d.class_names[cls] : std::to_string(cls);
        table.rows.push_back({name, value_cell(s.per_class[i], format)});
      }
      table.footer = {{"DSI", value_cell(s.value, format)}};
      render_table(std::cout, table, format);
      return 0;
    }

    if (evaluate->parsed()) {
      std::vector<ScoreMatrix> matrices;
      for (const auto& f : score_files) matrices.push_back(load_score_matrix(f));
      const BenchmarkResult result = evaluate_matrices(std::move(matrices));
      for (std::size_t i = 0; i < result.matrices.size(); ++i) {
        std::cout << "# " << result.matrices[i].dataset << ": rank sequences\n";
        render_table(std::cout, rank_sequence_table(result.matrices[i], result.evaluations[i]), format);
        std::cout << '\n';
      }
      std::cout << "# hit-the-best\n";
      render_table(std::cout, hit_table(result.report), format);
      std::cout << "\n# rank-difference\n";
      render_table(std::cout, rankdiff_table(result.report), format);
      if (output_dir) write_reports(result, *output_dir, format);
      return 0;
    }

    if (bench->parsed()) {
      BenchmarkConfig config;
      config.corpus_dir = corpus;
      if (output_dir) config.output_dir = fs::path(*output_dir);
      config.clusterers = parse_clusterers(c.clusterers);
      config.cvis = parse_cvi_list(c.cvis);
      config.seed = c.seed;
      config.cvi_options = cvi_options(c);
      config.standardize = c.standardize;
      config.format = format;
      const BenchmarkResult result = run_benchmark(config);
      print_warnings(result.warnings);
      if (result.evaluations.empty()) throw Error(ErrorKind::InvalidInput, "no dataset could be evaluated");
      std::cout << "# hit-the-best\n";
      render_table(std::cout, hit_table(result.report), format);
      std::cout << "\n# rank-difference\n";
      render_table(std::cout, rankdiff_table(result.report), format);
      return 0;
    }

    if (predict->parsed()) {
      const Dataset d = load_for_cli(data_path, c.standardize);
      if (!true_c && d.true_labels) true_c = d.true_labels->k();
      const auto ks = parse_k_range(c.k_range);
      const auto cvis = parse_cvi_list(c.cvis);
      std::vector<std::vector<KPrediction>> grid;
      for (Algorithm algorithm : parse_clusterers(c.clusterers)) {
        const auto base = ClusteringConfig::defaults(algorithm, 2, c.seed);
        grid.push_back(predict_k_all(d.points, base, cvis, ks, true_c, cvi_options(c)));
        for (const auto& p : grid.back()) {
          for (const auto& w : p.warnings) std::cerr << "warning: " << to_string(algorithm) << " " << p.cvi_name << ": " << w << '\n';
        }
      }
      if (true_c) std::cout << "# " << d.name << ": true number of clusters " << *true_c << " ('*' = hit)\n";
      render_table(std::cout, k_prediction_table(grid), format);
      if (show_scores) {
        for (const auto& column : grid) {
          Table table;
          table.header = {"Validity"};
          for (std::size_t k : column.front().k_values) table.header.push_back("k=" + std::to_string(k));
          for (const auto& p : column) {
            std::vector<std::string> row{p.cvi_name};
            for (const auto& s : p.scores) row.push_back(s ? value_cell(*s, format) : "NA");
            table.rows.push_back(std::move(row));
          }
          std::cout << "\n# " << to_string(column.front().algorithm) << " scores\n";
          render_table(std::cout, table, format);
        }
      }
      return 0;
    }

    if (synth->parsed()) {
      spec.kind = parse_synthetic_kind(kind);
      const Dataset d = generate_synthetic(spec, c.seed);
      if (synth_out) {
        save_dataset_csv(*synth_out, d);
      } else {
        write_dataset_csv(std::cout, d);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
