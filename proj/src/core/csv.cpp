#include "core/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gridfleet {

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

static std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line);
      continue;
    }
    if (!have_header) {
      t.header = split_line(line);
      have_header = true;
    } else {
      auto row = split_line(line);
      if (row.size() != t.header.size())
        throw std::runtime_error("csv: row width does not match header");
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

CsvTable read_csv(const std::string& path) {
  return parse_csv(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::int64_t parse_money_cents(const std::string& s) {
  double v = parse_double(s);
  return static_cast<std::int64_t>(std::llround(v * 100.0));
}

std::string format_money(std::int64_t cents) {
  char buf[40];
  bool neg = cents < 0;
  std::int64_t a = neg ? -cents : cents;
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", neg ? "-" : "",
                static_cast<long long>(a / 100), static_cast<long long>(a % 100));
  return buf;
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("not a number: '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw std::runtime_error("not a number: '" + s + "'");
  return v;
}

long long parse_int(const std::string& s) {
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::runtime_error("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::runtime_error("not an integer: '" + s + "'");
  return v;
}

std::string format_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace gridfleet
