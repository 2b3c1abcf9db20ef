#pragma once

#include <string>
#include <vector>

#include "bridgemi/matrix.hpp"

namespace bridgemi {

struct CsvTable {
  std::vector<std::string> header;  // empty when the file had no header row
  Matrix values;
};

// Comma-separated, UTF-8, one sample per row. A header row is auto-detected:
// if any cell of the first row fails to parse as a number, it is the header.
CsvTable read_csv(const std::string& path);

// RFC-4180-style quoting, header row mandatory, %.17g number formatting so
// reruns are byte-identical.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Matrix& values);

std::string format_double(double v);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace bridgemi
