#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace translit::utf8 {

// Decodes one codepoint starting at byte offset `pos`. Advances `pos` past it.
// Returns 0xFFFD on malformed input (pos still advances by one byte).
char32_t decode_at(std::string_view text, std::size_t& pos);

std::vector<char32_t> decode(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

}  // namespace translit::utf8
