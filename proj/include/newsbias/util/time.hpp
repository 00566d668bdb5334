#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace newsbias {

// Seconds since the Unix epoch, always UTC.
using UtcSeconds = std::int64_t;

// Accepts the classic Twitter timestamp ("Thu Nov 12 18:52:30 +0000 2015")
// and ISO-8601 ("2015-11-12T18:52:30Z", space separator and numeric offsets
// allowed, fractional seconds truncated). Returns nullopt on anything else.
std::optional<UtcSeconds> parse_timestamp(std::string_view text);

// ISO-8601 "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(UtcSeconds t);

}  // namespace newsbias
