#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "loopkit/loop_table.hpp"

namespace loopkit {

using RawTable = std::vector<std::vector<int>>;

// Table files: first line holds the order n, the next n lines hold the rows
// as whitespace-separated integers (row i, column j is i*j). Lines whose first
// non-blank character is '#' are comments. Blank lines separate tables in a
// stream and are otherwise ignored.

/// Reads exactly one table; trailing non-comment content is a FormatError.
RawTable parse_raw_table(std::istream& in);

/// Reads every table in a stream.
std::vector<RawTable> parse_raw_tables(std::istream& in);

/// parse_raw_table followed by validate.
ValidatedTable read_table(std::istream& in);
ValidatedTable read_table_file(const std::filesystem::path& path);

void write_table(std::ostream& out, const LoopTable& table);
std::string to_string(const LoopTable& table);

}  // namespace loopkit
