#include "cvikit/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cvikit/error.hpp"

namespace cvikit {
namespace {

using Record = std::vector<std::string>;

// RFC 4180 fields: quoted fields may contain commas and doubled quotes.
Record split_record(std::string_view line, std::size_t line_no) {
  Record fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  if (quoted) {
    throw Error(ErrorKind::MalformedFile, "unterminated quote on line " + std::to_string(line_no));
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Non-blank records with their 1-based line numbers.
std::vector<std::pair<std::size_t, Record>> read_records(std::istream& in) {
  std::vector<std::pair<std::size_t, Record>> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    records.emplace_back(line_no, split_record(line, line_no));
  }
  return records;
}

double parse_number(std::string_view text, std::size_t line_no) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line_no) + ": '" +
                                              std::string(text) + "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidValue,
                "line " + std::to_string(line_no) + ": non-finite value '" + std::string(text) + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  return out;
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

Dataset parse_dataset_csv(std::istream& in, std::string name,
                          const std::optional<std::string>& label_column) {
  auto records = read_records(in);
  if (records.empty()) throw Error(ErrorKind::MalformedFile, "dataset '" + name + "' is empty");

  const Record& header = records.front().second;
  std::optional<std::size_t> label_index;
  const std::string wanted = label_column.value_or("label");
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == wanted) label_index = c;
  }
  if (label_column && !label_index) {
    throw Error(ErrorKind::MalformedFile, "label column '" + *label_column + "' not found");
  }

  const std::size_t columns = header.size();
  const std::size_t dims = columns - (label_index ? 1 : 0);
  std::vector<double> values;
  std::vector<std::size_t> ids;
  std::vector<std::string> class_names;
  std::unordered_map<std::string, std::size_t> class_ids;

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& [line_no, record] = records[r];
    if (record.size() != columns) {
      throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line_no) + " has " +
                                                std::to_string(record.size()) + " fields, expected " +
                                                std::to_string(columns));
    }
    for (std::size_t c = 0; c < columns; ++c) {
      if (label_index && c == *label_index) {
        std::string symbol(trim(record[c]));
        auto [it, inserted] = class_ids.try_emplace(symbol, class_names.size());
        if (inserted) class_names.push_back(symbol);
        ids.push_back(it->second);
      } else {
        values.push_back(parse_number(record[c], line_no));
      }
    }
  }

  Dataset dataset;
  dataset.name = std::move(name);
  const std::size_t rows = records.size() - 1;
  dataset.points = PointMatrix(rows, dims, std::move(values));
  if (label_index) {
    dataset.true_labels = Labeling(std::move(ids), class_names.size());
    dataset.class_names = std::move(class_names);
  }
  dataset.validate();
  return dataset;
}

Dataset load_dataset_csv(const std::filesystem::path& path,
                         const std::optional<std::string>& label_column) {
  auto in = open_input(path);
  return parse_dataset_csv(in, path.stem().string(), label_column);
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
  const std::size_t d = dataset.dims();
  for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << 'f' << j;
  if (dataset.true_labels) out << ",label";
  out << '\n';
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) out << (j ? "," : "") << format_double(dataset.points(i, j));
    if (dataset.true_labels) {
      const std::size_t id = (*dataset.true_labels)[i];
      const std::string symbol =
          id < dataset.class_names.size() ? dataset.class_names[id] : std::to_string(id);
      out << ',' << quote_if_needed(symbol);
    }
    out << '\n';
  }
}

void save_dataset_csv(const std::filesystem::path& path, const Dataset& dataset) {
  auto out = open_output(path);
  write_dataset_csv(out, dataset);
}

ScoreMatrix parse_score_matrix(std::istream& in, std::string dataset) {
  auto records = read_records(in);
  if (records.empty()) throw Error(ErrorKind::MalformedFile, "score matrix is empty");
  const Record& header = records.front().second;
  if (header.size() < 3 || trim(header[0]) != "validity" || trim(header[1]) != "direction") {
    throw Error(ErrorKind::MalformedFile,
                "score matrix header must start with 'validity,direction' and name methods");
  }

  ScoreMatrix matrix;
  matrix.dataset = std::move(dataset);
  for (std::size_t c = 2; c < header.size(); ++c) matrix.methods.emplace_back(trim(header[c]));

  std::vector<ScoreSequence> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& [line_no, record] = records[r];
    if (record.size() != header.size()) {
      throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line_no) + " has " +
                                                std::to_string(record.size()) + " fields, expected " +
                                                std::to_string(header.size()));
    }
    ScoreSequence row;
    row.cvi_name = std::string(trim(record[0]));
    const auto marker = trim(record[1]);
    if (marker == "+") {
      row.direction = Direction::Max;
    } else if (marker == "-") {
      row.direction = Direction::Min;
    } else {
      throw Error(ErrorKind::InvalidValue, "line " + std::to_string(line_no) +
                                               ": unknown direction marker '" + std::string(marker) +
                                               "'");
    }
    for (std::size_t c = 2; c < record.size(); ++c) row.scores.push_back(parse_number(record[c], line_no));
    rows.push_back(std::move(row));
  }

  if (rows.empty() || rows.front().cvi_name != "ARI") {
    throw Error(ErrorKind::MissingGroundTruth, "first score row must be ARI");
  }
  matrix.ari_row = std::move(rows.front());
  matrix.cvi_rows.assign(std::make_move_iterator(rows.begin() + 1),
                         std::make_move_iterator(rows.end()));
  matrix.validate();
  return matrix;
}

ScoreMatrix load_score_matrix(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string name = path.filename().string();
  for (std::string_view suffix : {".scores.csv", ".csv"}) {
    if (name.ends_with(suffix)) {
      name.resize(name.size() - suffix.size());
      break;
    }
  }
  return parse_score_matrix(in, std::move(name));
}

void write_score_matrix(std::ostream& out, const ScoreMatrix& matrix) {
  out << "validity,direction";
  for (const auto& m : matrix.methods) out << ',' << quote_if_needed(m);
  out << '\n';
  auto write_row = [&](const ScoreSequence& row) {
    out << quote_if_needed(row.cvi_name) << ',' << direction_marker(row.direction);
    for (double s : row.scores) out << ',' << format_double(s);
    out << '\n';
  };
  write_row(matrix.ari_row);
  for (const auto& row : matrix.cvi_rows) write_row(row);
}

void save_score_matrix(const std::filesystem::path& path, const ScoreMatrix& matrix) {
  auto out = open_output(path);
  write_score_matrix(out, matrix);
}

Labeling parse_label_file(std::istream& in) {
  auto records = read_records(in);
  if (records.empty() || records.front().second.size() != 1 ||
      trim(records.front().second[0]) != "cluster") {
    throw Error(ErrorKind::MalformedFile, "label file must have a single 'cluster' column");
  }
  std::vector<long long> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& [line_no, record] = records[r];
    if (record.size() != 1) {
      throw Error(ErrorKind::MalformedFile, "line " + std::to_string(line_no) + " has extra fields");
    }
    const auto text = trim(record[0]);
    long long id = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
      throw Error(ErrorKind::MalformedFile,
                  "line " + std::to_string(line_no) + ": '" + std::string(text) + "' is not an integer id");
    }
    ids.push_back(id);
  }
  return Labeling::from_raw(std::span<const long long>(ids));
}

Labeling load_label_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_label_file(in);
}

void write_label_file(std::ostream& out, const Labeling& labels) {
  out << "cluster\n";
  for (std::size_t id : labels.assignments()) out << id << '\n';
}

void save_label_file(const std::filesystem::path& path, const Labeling& labels) {
  auto out = open_output(path);
  write_label_file(out, labels);
}

}  // namespace cvikit
