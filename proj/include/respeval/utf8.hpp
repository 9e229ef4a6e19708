#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace respeval::utf8 {

inline constexpr char32_t replacement_char = 0xFFFD;

/// Decodes UTF-8 into code points. Malformed sequences decode to U+FFFD, one per offending byte.
std::u32string decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);
std::string encode(char32_t cp);

/// ASCII whitespace plus the Unicode space separators that show up in survey exports.
bool is_space(char32_t cp);

/// Strips leading/trailing whitespace (as defined by is_space).
std::string trim(std::string_view text);

}  // namespace respeval::utf8
