#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace simon {

// Strict hex decode; accepts upper and lower case. Throws HexParseError
// carrying the offending offset (the string length for odd-length input).
[[nodiscard]] std::vector<std::uint8_t> parse_hex(std::string_view s);

// Lowercase hex encode.
[[nodiscard]] std::string format_hex(std::span<const std::uint8_t> bytes);

}  // namespace simon
