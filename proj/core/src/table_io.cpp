#include "loopkit/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace loopkit {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line that is neither blank nor a comment.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    auto end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    int value = 0;
    const auto* first = line.data() + pos;
    const auto* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw FormatError(line_no, "not an integer: '" + line.substr(pos, end - pos) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

std::optional<RawTable> parse_one(LineReader& reader) {
  auto header = reader.next();
  if (!header) return std::nullopt;
  const auto header_line = reader.line_no();
  auto order = parse_ints(*header, header_line);
  if (order.size() != 1) throw FormatError(header_line, "expected a single integer giving the table order");
  const int n = order.front();
  if (n < 1 || n > kMaxOrder) {
    throw FormatError(header_line, "order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
  }
  RawTable rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto line = reader.next();
    if (!line) throw FormatError(reader.line_no(), "expected " + std::to_string(n) + " rows, found " + std::to_string(i));
    auto row = parse_ints(*line, reader.line_no());
    if (row.size() != static_cast<std::size_t>(n)) {
      throw FormatError(reader.line_no(), "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                              " entries, expected " + std::to_string(n));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

RawTable parse_raw_table(std::istream& in) {
  LineReader reader(in);
  auto table = parse_one(reader);
  if (!table) throw FormatError(reader.line_no(), "no table found");
  if (reader.next()) throw FormatError(reader.line_no(), "unexpected content after table");
  return std::move(*table);
}

std::vector<RawTable> parse_raw_tables(std::istream& in) {
  LineReader reader(in);
  std::vector<RawTable> out;
  while (auto table = parse_one(reader)) out.push_back(std::move(*table));
  return out;
}

ValidatedTable read_table(std::istream& in) { return validate(parse_raw_table(in)); }

ValidatedTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_table(in);
}

void write_table(std::ostream& out, const LoopTable& table) {
  const int n = table.order();
  out << n << '\n';
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << table.mul(a, b);
    }
    out << '\n';
  }
}

std::string to_string(const LoopTable& table) {
  std::ostringstream out;
  write_table(out, table);
  return out.str();
}

}  // namespace loopkit
