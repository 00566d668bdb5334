#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace newsbias::csv {

// RFC 4180-style rows: quoted fields may contain commas, quotes ("") and
// newlines. parse_file throws std::runtime_error if the file cannot be read.
std::vector<std::vector<std::string>> parse(std::string_view content);
std::vector<std::vector<std::string>> parse_file(const std::string& path);

std::string escape(std::string_view field);
void write_row(std::ostream& os, const std::vector<std::string>& fields);

}  // namespace newsbias::csv
