#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ast {

std::string base64_encode(std::string_view bytes);

// Throws std::invalid_argument on malformed input.
std::string base64_decode(std::string_view text);

// FNV-1a over raw bytes. Stable across platforms for identical input text.
std::uint64_t fnv1a64(std::string_view bytes);

// 16-digit lowercase hex rendering of a 64-bit value.
std::string to_hex64(std::uint64_t value);

// Shortest decimal form that round-trips a double exactly.
std::string format_double(double value);

} // namespace ast
