#include "cvikit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>

#include "cvikit/error.hpp"

namespace cvikit {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw Error(ErrorKind::InvalidInput, "unknown format '" + std::string(name) + "' (csv|text)");
}

std::string display_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

template <typename T>
std::vector<std::string> to_cells(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(std::to_string(v));
  return out;
}

Table integer_table(const EvalReport& report, const std::vector<std::vector<int>>& body,
                    const std::vector<int>& totals, const std::vector<int>& ranks) {
  Table table;
  table.header.push_back("Dataset");
  table.header.insert(table.header.end(), report.cvi_names.begin(), report.cvi_names.end());
  for (std::size_t r = 0; r < body.size(); ++r) {
    std::vector<std::string> row{report.datasets[r]};
    const auto cells = to_cells(body[r]);
    row.insert(row.end(), cells.begin(), cells.end());
    table.rows.push_back(std::move(row));
  }
  std::vector<std::string> total_row{"Total"};
  const auto total_cells = to_cells(totals);
  total_row.insert(total_row.end(), total_cells.begin(), total_cells.end());
  std::vector<std::string> rank_row{"(rank)"};
  for (int r : ranks) rank_row.push_back("(" + std::to_string(r) + ")");
  table.footer = {std::move(total_row), std::move(rank_row)};
  return table;
}

}  // namespace

void render_table(std::ostream& out, const Table& table, OutputFormat format) {
  std::vector<const std::vector<std::string>*> all{&table.header};
  for (const auto& r : table.rows) all.push_back(&r);
  for (const auto& r : table.footer) all.push_back(&r);

  if (format == OutputFormat::Csv) {
    for (const auto* row : all) {
      for (std::size_t c = 0; c < row->size(); ++c) out << (c ? "," : "") << csv_cell((*row)[c]);
      out << '\n';
    }
    return;
  }

  std::vector<std::size_t> width;
  for (const auto* row : all) {
    if (width.size() < row->size()) width.resize(row->size(), 0);
    for (std::size_t c = 0; c < row->size(); ++c) width[c] = std::max(width[c], (*row)[c].size());
  }
  std::size_t total_width = 0;
  for (std::size_t w : width) total_width += w + 2;
  const std::string rule(total_width > 2 ? total_width - 2 : 0, '-');

  auto print = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      const std::size_t pad = width[c] - row[c].size();
      if (c == 0) {
        out << row[c] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[c];
      }
    }
    out << '\n';
  };
  print(table.header);
  out << rule << '\n';
  for (const auto& r : table.rows) print(r);
  if (!table.footer.empty()) {
    out << rule << '\n';
    for (const auto& r : table.footer) print(r);
  }
}

Table hit_table(const EvalReport& report) {
  return integer_table(report, report.hit_table, report.hit_totals, report.hit_ranks);
}

Table rankdiff_table(const EvalReport& report) {
  return integer_table(report, report.rankdiff_table, report.rankdiff_totals, report.rankdiff_ranks);
}

Table score_table(const ScoreMatrix& matrix) {
  Table table;
  table.header = {"Validity"};
  table.header.insert(table.header.end(), matrix.methods.begin(), matrix.methods.end());
  auto add = [&](const ScoreSequence& row) {
    std::vector<std::string> cells{row.cvi_name + " " + direction_marker(row.direction)};
    for (double s : row.scores) cells.push_back(display_number(s));
    table.rows.push_back(std::move(cells));
  };
  add(matrix.ari_row);
  for (const auto& row : matrix.cvi_rows) add(row);
  return table;
}

Table rank_sequence_table(const ScoreMatrix& matrix, const DatasetEvaluation& evaluation) {
  Table table;
  table.header = {"Validity"};
  table.header.insert(table.header.end(), matrix.methods.begin(), matrix.methods.end());
  auto add = [&](const std::string& name, const RankSequence& ranks) {
    std::vector<std::string> cells{name};
    const auto rest = to_cells(ranks.ranks());
    cells.insert(cells.end(), rest.begin(), rest.end());
    table.rows.push_back(std::move(cells));
  };
  add("ARI", evaluation.ari_ranks);
  for (std::size_t c = 0; c < evaluation.cvi_names.size(); ++c)
    add(evaluation.cvi_names[c], evaluation.cvi_ranks[c]);
  return table;
}

Table k_prediction_table(const std::vector<std::vector<KPrediction>>& grid) {
  Table table;
  table.header = {"Validity"};
  if (grid.empty()) return table;
  for (const auto& column : grid) {
    table.header.emplace_back(column.empty() ? "" : std::string(to_string(column.front().algorithm)));
  }
  for (std::size_t c = 0; c < grid.front().size(); ++c) {
    std::vector<std::string> row{grid.front()[c].cvi_name};
    for (const auto& column : grid) {
      const auto& p = column[c];
      row.push_back(std::to_string(p.k_hat) + (p.success.value_or(false) ? "*" : ""));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cvikit
