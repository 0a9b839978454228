#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cvikit/ari.hpp"
#include "cvikit/csv_io.hpp"
#include "cvikit/error.hpp"
#include "cvikit/harness.hpp"
#include "cvikit/synthetic.hpp"
#include "test_support.hpp"

using namespace cvikit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path = fs::temp_directory_path() / ("cvikit-" + tag + "-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string dataset_text(const Dataset& d) {
  std::ostringstream s;
  write_dataset_csv(s, d);
  return s.str();
}

ScoreMatrix random_matrix(const std::string& name, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  ScoreMatrix m{name, {"A", "B", "C", "D"}, {"ARI", Direction::Max, {}}, {}};
  for (int i = 0; i < 4; ++i) m.ari_row.scores.push_back(u(rng));
  const char* names[] = {"Dunn", "CH", "DB", "Silhouette", "WB", "I", "CVNN", "CVDD", "DSI"};
  for (const char* n : names) {
    ScoreSequence s{n, Direction::Max, {}};
    if (std::string(n) == "DB" || std::string(n) == "WB" || std::string(n) == "CVNN") s.direction = Direction::Min;
    for (int i = 0; i < 4; ++i) s.scores.push_back(u(rng));
    m.cvi_rows.push_back(std::move(s));
  }
  return m;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("synthetic blobs") {
  SyntheticSpec spec;
  spec.name = "blobs3";
  const auto d = generate_synthetic(spec, 42);
  CHECK(d.size() == 150);
  CHECK(d.points.cols() == 2);
  REQUIRE(d.true_labels);
  CHECK(d.true_labels->k() == 3);
  for (std::size_t s : d.true_labels->cluster_sizes()) CHECK(s == 50);
  CHECK(d.name == "blobs3");
}

TEST_CASE("synthetic output is reproducible") {
  for (auto kind : {SyntheticKind::Blobs, SyntheticKind::Ring, SyntheticKind::Moons}) {
    SyntheticSpec spec;
    spec.kind = kind;
    CHECK(dataset_text(generate_synthetic(spec, 9)) == dataset_text(generate_synthetic(spec, 9)));
    CHECK(dataset_text(generate_synthetic(spec, 9)) != dataset_text(generate_synthetic(spec, 10)));
  }
}

TEST_CASE("ring and moons have two classes") {
  SyntheticSpec spec;
  spec.kind = parse_synthetic_kind("ring");
  spec.per_class = 30;
  const auto ring = generate_synthetic(spec, 1);
  CHECK(ring.size() == 60);
  CHECK(ring.true_labels->k() == 2);
  spec.kind = parse_synthetic_kind("moons");
  CHECK(generate_synthetic(spec, 1).true_labels->k() == 2);
}

TEST_CASE("invalid synthetic specs") {
  SyntheticSpec spec;
  spec.per_class = 1;
  CHECK_THROWS_AS(generate_synthetic(spec, 0), Error);
  spec = {};
  spec.stddev = -1;
  CHECK_THROWS_AS(generate_synthetic(spec, 0), Error);
  spec = {};
  spec.classes = 1;
  try {
    generate_synthetic(spec, 0);
    FAIL("expected invalid-spec");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSpec);
  }
  CHECK_THROWS_AS(parse_synthetic_kind("spiral"), Error);
}

TEST_CASE("benchmark on a two-blob corpus") {
  TempDir dir("bench");
  SyntheticSpec spec;
  spec.classes = 2;
  spec.name = "two";
  save_dataset_csv(dir.path / "two.csv", generate_synthetic(spec, 3));

  BenchmarkConfig cfg;
  cfg.corpus_dir = dir.path;
  cfg.clusterers = {Algorithm::KMeans, Algorithm::Ward};
  cfg.cvis = {Cvi::Dsi};
  cfg.seed = 4;
  const auto r = run_benchmark(cfg);
  REQUIRE(r.matrices.size() == 1);
  CHECK(r.matrices[0].methods == std::vector<std::string>{"KMeans", "Ward"});
  CHECK(r.matrices[0].ari_row.scores == std::vector<double>{1.0, 1.0});
  REQUIRE(r.report.hit_table.size() == 1);
  CHECK(r.report.hit_table[0] == std::vector<int>{1});
  CHECK(r.report.rankdiff_table[0] == std::vector<int>{0});
}

TEST_CASE("external labelings join the score matrix") {
  TempDir dir("labels");
  SyntheticSpec spec;
  spec.classes = 2;
  spec.per_class = 10;
  const auto d = generate_synthetic(spec, 1);
  save_dataset_csv(dir.path / "d.csv", d);
  save_label_file(dir.path / "d.Oracle.labels.csv", *d.true_labels);
  std::vector<std::size_t> bad(d.size());
  for (std::size_t i = 0; i < bad.size(); ++i) bad[i] = i % 2;
  save_label_file(dir.path / "d.Stripes.labels.csv", Labeling(bad, 2));

  BenchmarkConfig cfg;
  cfg.corpus_dir = dir.path;
  cfg.clusterers = {};
  cfg.cvis = {Cvi::Silhouette, Cvi::Dsi};
  const auto r = run_benchmark(cfg);
  REQUIRE(r.matrices.size() == 1);
  CHECK(r.matrices[0].methods == std::vector<std::string>{"Oracle", "Stripes"});
  CHECK(r.report.hit_table[0] == std::vector<int>{1, 1});
}

TEST_CASE("aggregation over random matrices") {
  std::mt19937_64 rng(8);
  std::vector<ScoreMatrix> ms;
  for (const char* n : {"c", "a", "b"}) ms.push_back(random_matrix(n, rng));
  const auto r = evaluate_matrices(ms);
  CHECK(r.report.datasets == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(r.report.hit_table.size() == 3);
  for (std::size_t c = 0; c < 9; ++c) {
    int hits = 0, diffs = 0;
    for (std::size_t d = 0; d < 3; ++d) {
      hits += r.report.hit_table[d][c];
      diffs += r.report.rankdiff_table[d][c];
    }
    CHECK(r.report.hit_totals[c] == hits);
    CHECK(r.report.rankdiff_totals[c] == diffs);
  }
}

TEST_CASE("reference score matrix end to end") {
  TempDir out("wine_scores");
  BenchmarkConfig cfg;
  cfg.corpus_dir = fs::path(CVIKIT_TEST_DATA_DIR) / "wine_scores";
  cfg.output_dir = out.path;
  const auto r = run_benchmark(cfg);
  REQUIRE(r.evaluations.size() == 1);
  CHECK(r.report.hit_table[0] == std::vector<int>{1, 0, 1, 0, 1, 1, 1, 0, 1});
  CHECK(r.report.rankdiff_table[0] == std::vector<int>{9, 1, 3, 1, 1, 0, 0, 7, 0});
  CHECK(read_file(out.path / "hit_table.csv") ==
        "Dataset,Dunn,CH,DB,Silhouette,WB,I,CVNN,CVDD,DSI\n"
        "wine,1,0,1,0,1,1,1,0,1\n"
        "Total,1,0,1,0,1,1,1,0,1\n"
        "(rank),(1),(7),(1),(7),(1),(1),(1),(7),(1)\n");
  CHECK(fs::exists(out.path / "rankdiff_table.csv"));
  CHECK(fs::exists(out.path / "wine.ranks.csv"));
  CHECK(load_score_matrix(out.path / "wine.scores.csv").ari_row.scores == r.matrices[0].ari_row.scores);
}

TEST_CASE("reports are byte-identical across runs") {
  TempDir corpus("corpus"), a("out-a"), b("out-b");
  SyntheticSpec spec;
  spec.per_class = 20;
  spec.separation = 6;
  save_dataset_csv(corpus.path / "blobs.csv", generate_synthetic(spec, 2));
  BenchmarkConfig cfg;
  cfg.corpus_dir = corpus.path;
  cfg.seed = 11;
  cfg.format = OutputFormat::Text;
  cfg.output_dir = a.path;
  run_benchmark(cfg);
  cfg.output_dir = b.path;
  run_benchmark(cfg);
  for (const char* f : {"hit_table.txt", "rankdiff_table.txt", "blobs.ranks.txt", "blobs.scores.csv",
                        "blobs.KMeans.labels.csv", "blobs.EM.labels.csv"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(a.path / f));
    CHECK(read_file(a.path / f) == read_file(b.path / f));
  }
}

TEST_CASE("missing corpus directory") {
  BenchmarkConfig cfg;
  cfg.corpus_dir = "/nonexistent/cvikit";
  CHECK_THROWS_AS(run_benchmark(cfg), Error);
}

TEST_CASE("score matrix needs ground truth and two methods") {
  Dataset d{"u", testing::random_points(10, 2, 1), std::nullopt, {}};
  std::vector<std::string> warnings;
  const std::vector<Cvi> cvis{Cvi::CalinskiHarabasz};
  const std::vector<MethodLabeling> one{{"A", testing::random_labels(10, 2, 1)}};
  try {
    build_score_matrix(d, one, cvis, {}, warnings);
    FAIL("expected missing-ground-truth");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingGroundTruth);
  }
  d.true_labels = testing::random_labels(10, 2, 2);
  try {
    build_score_matrix(d, one, cvis, {}, warnings);
    FAIL("expected degenerate-partition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegeneratePartition);
  }
}

TEST_CASE("text tables are aligned") {
  Table t{{"Dataset", "DSI"}, {{"wine", "1"}}, {{"Total", "1"}, {"(rank)", "(1)"}}};
  std::ostringstream s;
  render_table(s, t, OutputFormat::Text);
  std::istringstream lines(s.str());
  std::string line;
  std::size_t width = 0;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of('-') == std::string::npos) continue;
    if (width == 0) width = line.size();
    CHECK(line.size() == width);
  }
  CHECK(display_number(0.6349) == "0.635");
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_output_format("json"), Error);
}

}  // TEST_SUITE
