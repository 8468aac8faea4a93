#pragma once

#include "core/sample.hpp"

#include <string>
#include <vector>

namespace tailfence {

// Reads a newline-delimited sample file: one decimal literal per line,
// blank lines and lines starting with '#' ignored.  Throws parse_error with
// the offending 1-based line number on malformed input.
std::vector<double> read_sample_file(const std::string& path);

// Writes one observation per line with 17 significant digits, LF endings.
void write_sample_file(const std::string& path, const std::vector<double>& values);

} // namespace tailfence
