// SPDX-License-Identifier: Apache-2.0
#include "rssl/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rssl/errors.hpp"

namespace rssl {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_value(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last)
    throw format_error("line " + std::to_string(line_no) +
                       ": cannot parse number '" + field + "'");
  if (!std::isfinite(value))
    throw format_error("line " + std::to_string(line_no) +
                       ": non-finite value '" + field + "'");
  return value;
}

int parse_label(const std::string& field, std::size_t line_no) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw format_error("line " + std::to_string(line_no) +
                     ": label must be 0 or 1, got '" + field + "'");
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void write_dataset_csv(const std::string& path, const Matrix& X,
                       const std::vector<int>* labels) {
  if (labels && static_cast<Eigen::Index>(labels->size()) != X.rows())
    throw config_error("write_dataset_csv: label count mismatch");
  std::ofstream out(path);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if (j) out << ',';
    out << 'f' << (j + 1);
  }
  if (labels) out << ",label";
  out << '\n';
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      if (j) out << ',';
      out << format_double(X(i, j));
    }
    if (labels) out << ',' << (*labels)[static_cast<std::size_t>(i)];
    out << '\n';
  }
  if (!out) throw io_error("failed while writing '" + path + "'");
}

LoadedDataset read_dataset_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line))
    throw format_error("'" + path + "': empty file");
  const auto header = split_fields(strip_cr(line));
  if (header.empty() || header.front().empty())
    throw format_error("'" + path + "': missing header");
  const bool has_labels = header.back() == "label";
  const auto p = header.size() - (has_labels ? 1 : 0);
  if (p < 1) throw format_error("'" + path + "': no feature columns");

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t rows = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size())
      throw format_error("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(header.size()) + " fields, got " +
                         std::to_string(fields.size()));
    for (std::size_t j = 0; j < p; ++j)
      values.push_back(parse_value(fields[j], line_no));
    if (has_labels) labels.push_back(parse_label(fields.back(), line_no));
    ++rows;
  }
  if (rows == 0) throw format_error("'" + path + "': no data rows");

  LoadedDataset ds;
  ds.data.resize(static_cast<Eigen::Index>(rows),
                 static_cast<Eigen::Index>(p));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < p; ++j)
      ds.data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          values[i * p + j];
  if (has_labels) ds.labels = std::move(labels);
  return ds;
}

}  // namespace rssl
