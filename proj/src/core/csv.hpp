#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gridfleet {

/// Minimal comma-separated reader/writer for the project's file formats
/// (UTF-8, LF line endings, no quoting). Lines starting with '#' are
/// treated as embedded metadata and skipped by the reader.

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> comments;  // leading '#' lines, in order

  int column(const std::string& name) const;  // -1 if absent
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// Currency is held in integer cents so per-driver sums are exact.
std::int64_t parse_money_cents(const std::string& s);
std::string format_money(std::int64_t cents);

double parse_double(const std::string& s);
long long parse_int(const std::string& s);

std::string format_double(double v, int decimals = 6);

}  // namespace gridfleet
