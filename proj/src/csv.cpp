#include "bridgemi/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bridgemi/errors.hpp"

namespace bridgemi {

namespace {

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

bool parse_number(const std::string& cell, double& out) {
  const char* b = cell.data();
  const char* e = b + cell.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t')) --e;
  if (b == e) return false;
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_record(line));
  }
  if (rows.empty()) throw Error("empty CSV file: " + path);

  CsvTable table;
  std::size_t first_data = 0;
  double tmp;
  for (const auto& cell : rows[0]) {
    if (!parse_number(cell, tmp)) {
      table.header = rows[0];
      first_data = 1;
      break;
    }
  }
  if (first_data == rows.size()) throw Error("CSV has only a header: " + path);

  const std::size_t cols = rows[first_data].size();
  const std::size_t n = rows.size() - first_data;
  table.values = Matrix(n, cols);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& cells = rows[first_data + r];
    if (cells.size() != cols)
      throw ParseError(path + ": row " + std::to_string(r + 1) + " has " +
                           std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(cols),
                       r + 1, 0);
    for (std::size_t c = 0; c < cols; ++c) {
      double v;
      if (!parse_number(cells[c], v))
        throw ParseError(path + ": non-numeric cell at row " +
                             std::to_string(r + 1) + ", column " +
                             std::to_string(c + 1),
                         r + 1, c + 1);
      table.values(r, c) = v;
    }
  }
  return table;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Matrix& values) {
  if (header.size() != values.cols)
    throw ShapeMismatchError("write_csv: header/column count mismatch");
  std::ostringstream out;
  for (std::size_t c = 0; c < header.size(); ++c)
    out << (c ? "," : "") << quote_if_needed(header[c]);
  out << "\n";
  for (std::size_t r = 0; r < values.rows; ++r) {
    for (std::size_t c = 0; c < values.cols; ++c)
      out << (c ? "," : "") << format_double(values(r, c));
    out << "\n";
  }
  write_file_atomic(path, out.str());
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write file: " + tmp.string());
    out << contents;
  }
  fs::rename(tmp, target);
}

}  // namespace bridgemi
