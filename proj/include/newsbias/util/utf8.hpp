#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace newsbias::utf8 {

// Decodes UTF-8 into unicode scalar values; malformed sequences become U+FFFD.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& codepoints);
void append(std::string& out, char32_t cp);

// Canonical composition (NFC direction) for the Latin diacritic pairs that
// occur in this corpus (French, German, Spanish text often arrives decomposed
// from upstream tooling). Arabic combining marks have no precomposed forms, so
// Arabic text passes through unchanged. Codepoints outside the table are kept
// as-is; already-precomposed input is a fixed point.
std::vector<char32_t> nfc(const std::vector<char32_t>& codepoints);
std::string nfc(std::string_view text);

// Lowercases Latin-script letters (ASCII, Latin-1, Latin Extended-A);
// all other scripts are untouched.
char32_t to_lower_latin(char32_t cp);
std::string lower_latin(std::string_view text);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_combining_mark(char32_t cp);
bool is_arabic(char32_t cp);

}  // namespace newsbias::utf8
