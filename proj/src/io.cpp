#include "pcm/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace pcm {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_display(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& token, int line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) {
    fail(Errc::parse_error,
         "cannot parse '" + token + "' as a number on line " + std::to_string(line_no));
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(Errc::parse_error, "write to '" + path + "' failed");
}

}  // namespace

ComparisonMatrix parse_matrix_csv(const std::string& text, double reciprocity_tol) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "empty matrix file");
  std::vector<std::vector<double>> grid;
  grid.reserve(lines.size());
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    std::vector<double> row;
    for (const auto& field : split_fields(line)) row.push_back(parse_double(field, line_no));
    grid.push_back(std::move(row));
  }
  return ComparisonMatrix::from_grid(grid, reciprocity_tol);
}

ComparisonMatrix read_matrix_csv(const std::string& path, double reciprocity_tol) {
  return parse_matrix_csv(read_file(path), reciprocity_tol);
}

std::string matrix_to_csv(const ComparisonMatrix& a) {
  const int n = a.order();
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out += ',';
      out += fmt_full(a.at(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_csv(const ComparisonMatrix& a, const std::string& path) {
  write_file(path, matrix_to_csv(a));
}

RandomIndexTable parse_ri_table(const std::string& text) {
  RandomIndexTable table;
  const auto lines = split_lines(text);
  if (lines.empty()) fail(Errc::parse_error, "empty Random Index table");
  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    const auto fields = split_fields(line);
    if (!fields.empty() && fields.front() == "provenance") {
      if (fields.size() == 4 && fields[1] == "monte-carlo") {
        table.source = RandomIndexTable::Source::monte_carlo;
        table.seed = static_cast<RngSeed>(std::strtoull(fields[2].c_str(), nullptr, 10));
        table.samples = std::strtol(fields[3].c_str(), nullptr, 10);
      }
      continue;
    }
    if (fields.size() != 2) {
      fail(Errc::parse_error, "expected 'n,RI' on line " + std::to_string(line_no));
    }
    const double n = parse_double(fields[0], line_no);
    const double ri = parse_double(fields[1], line_no);
    if (n < 3 || n != static_cast<double>(static_cast<int>(n))) {
      fail(Errc::parse_error, "bad order '" + fields[0] + "' on line " + std::to_string(line_no));
    }
    table.set(static_cast<int>(n), ri);
  }
  return table;
}

RandomIndexTable read_ri_table(const std::string& path) { return parse_ri_table(read_file(path)); }

std::string ri_table_to_csv(const RandomIndexTable& table) {
  std::string out;
  for (const auto& [n, ri] : table.values) {
    out += std::to_string(n);
    out += ',';
    out += fmt_full(ri);
    out += '\n';
  }
  if (table.source == RandomIndexTable::Source::monte_carlo) {
    out += "provenance,monte-carlo," + std::to_string(table.seed) + ',' +
           std::to_string(table.samples) + '\n';
  }
  return out;
}

void write_ri_table(const RandomIndexTable& table, const std::string& path) {
  write_file(path, ri_table_to_csv(table));
}

}  // namespace pcm
