#include "newsbias/util/utf8.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace newsbias::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// base + combining mark -> precomposed. Covers the Latin diacritics seen in
// French/German/Spanish news text. Kept sorted by (mark, base).
struct Composition {
    char32_t mark;
    char32_t base;
    char32_t composed;
};

constexpr std::array<Composition, 58> kCompositions{{
    // U+0300 combining grave
    {0x0300, U'A', 0x00C0}, {0x0300, U'E', 0x00C8}, {0x0300, U'I', 0x00CC},
    {0x0300, U'O', 0x00D2}, {0x0300, U'U', 0x00D9},
    {0x0300, U'a', 0x00E0}, {0x0300, U'e', 0x00E8}, {0x0300, U'i', 0x00EC},
    {0x0300, U'o', 0x00F2}, {0x0300, U'u', 0x00F9},
    // U+0301 combining acute
    {0x0301, U'A', 0x00C1}, {0x0301, U'E', 0x00C9}, {0x0301, U'I', 0x00CD},
    {0x0301, U'O', 0x00D3}, {0x0301, U'U', 0x00DA}, {0x0301, U'Y', 0x00DD},
    {0x0301, U'a', 0x00E1}, {0x0301, U'e', 0x00E9}, {0x0301, U'i', 0x00ED},
    {0x0301, U'o', 0x00F3}, {0x0301, U'u', 0x00FA}, {0x0301, U'y', 0x00FD},
    // U+0302 combining circumflex
    {0x0302, U'A', 0x00C2}, {0x0302, U'E', 0x00CA}, {0x0302, U'I', 0x00CE},
    {0x0302, U'O', 0x00D4}, {0x0302, U'U', 0x00DB},
    {0x0302, U'a', 0x00E2}, {0x0302, U'e', 0x00EA}, {0x0302, U'i', 0x00EE},
    {0x0302, U'o', 0x00F4}, {0x0302, U'u', 0x00FB},
    // U+0303 combining tilde
    {0x0303, U'A', 0x00C3}, {0x0303, U'N', 0x00D1}, {0x0303, U'O', 0x00D5},
    {0x0303, U'a', 0x00E3}, {0x0303, U'n', 0x00F1}, {0x0303, U'o', 0x00F5},
    // U+0308 combining diaeresis
    {0x0308, U'A', 0x00C4}, {0x0308, U'E', 0x00CB}, {0x0308, U'I', 0x00CF},
    {0x0308, U'O', 0x00D6}, {0x0308, U'U', 0x00DC},
    {0x0308, U'a', 0x00E4}, {0x0308, U'e', 0x00EB}, {0x0308, U'i', 0x00EF},
    {0x0308, U'o', 0x00F6}, {0x0308, U'u', 0x00FC}, {0x0308, U'y', 0x00FF},
    // U+030A combining ring above
    {0x030A, U'A', 0x00C5}, {0x030A, U'a', 0x00E5},
    // U+0327 combining cedilla
    {0x0327, U'C', 0x00C7}, {0x0327, U'c', 0x00E7},
    // U+030C caron (common in transliterations)
    {0x030C, U'C', 0x010C}, {0x030C, U'S', 0x0160}, {0x030C, U'Z', 0x017D},
    {0x030C, U'c', 0x010D}, {0x030C, U's', 0x0161}, {0x030C, U'z', 0x017E},
}};

char32_t compose_pair(char32_t base, char32_t mark) {
    for (const auto& c : kCompositions) {
        if (c.mark == mark && c.base == base) return c.composed;
    }
    return 0;
}

}  // namespace

std::vector<char32_t> decode(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    while (i < text.size()) {
        const unsigned char b0 = byte(i);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + static_cast<std::size_t>(len) > text.size()) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            const unsigned char bk = byte(i + static_cast<std::size_t>(k));
            if ((bk & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        // Reject overlong encodings and surrogate range.
        if (ok) {
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
                (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
                ok = false;
            }
        }
        if (!ok) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += static_cast<std::size_t>(len);
    }
    return out;
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(const std::vector<char32_t>& codepoints) {
    std::string out;
    out.reserve(codepoints.size());
    for (char32_t cp : codepoints) append(out, cp);
    return out;
}

std::vector<char32_t> nfc(const std::vector<char32_t>& codepoints) {
    std::vector<char32_t> out;
    out.reserve(codepoints.size());
    for (char32_t cp : codepoints) {
        if (!out.empty() && is_combining_mark(cp)) {
            if (const char32_t composed = compose_pair(out.back(), cp)) {
                out.back() = composed;
                continue;
            }
        }
        out.push_back(cp);
    }
    return out;
}

std::string nfc(std::string_view text) { return encode(nfc(decode(text))); }

char32_t to_lower_latin(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    if (cp >= 0x0100 && cp <= 0x0177) {
        // Latin Extended-A: upper/lower alternate; even codepoint is uppercase.
        if ((cp & 1u) == 0) {
            if (cp == 0x0130) return U'i';  // I with dot above
            return cp + 1;
        }
        return cp;
    }
    if (cp == 0x0178) return 0x00FF;
    if (cp >= 0x0179 && cp <= 0x017E) return (cp & 1u) ? cp + 1 : cp;
    return cp;
}

std::string lower_latin(std::string_view text) {
    auto cps = decode(text);
    for (auto& cp : cps) cp = to_lower_latin(cp);
    return encode(cps);
}

bool is_combining_mark(char32_t cp) {
    return (cp >= 0x0300 && cp <= 0x036F) ||  // combining diacritical marks
           (cp >= 0x0610 && cp <= 0x061A) ||  // Arabic signs
           (cp >= 0x064B && cp <= 0x065F) ||  // Arabic harakat
           cp == 0x0670 ||
           (cp >= 0x06D6 && cp <= 0x06DC) || (cp >= 0x06DF && cp <= 0x06E8) ||
           (cp >= 0x06EA && cp <= 0x06ED);
}

bool is_arabic(char32_t cp) {
    return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
           (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
           (cp >= 0xFE70 && cp <= 0xFEFF);
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
    if (cp >= 0x00C0 && cp <= 0x024F && cp != 0x00D7 && cp != 0x00F7) return true;  // Latin suppl./ext.
    if (cp >= 0x0370 && cp <= 0x03FF) return true;                                  // Greek
    if (cp >= 0x0400 && cp <= 0x04FF) return true;                                  // Cyrillic
    if (is_arabic(cp) && !is_combining_mark(cp) && cp != 0x060C && cp != 0x061B && cp != 0x061F &&
        !(cp >= 0x0660 && cp <= 0x0669) && !(cp >= 0x06F0 && cp <= 0x06F9) && cp != 0x066A &&
        cp != 0x066B && cp != 0x066C && cp != 0x06D4) {
        return true;  // Arabic letters (excluding punctuation and digits)
    }
    if (cp >= 0x0590 && cp <= 0x05FF) return true;  // Hebrew
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;  // CJK unified
    if (cp >= 0x3040 && cp <= 0x30FF) return true;  // kana
    return false;
}

}  // namespace newsbias::utf8
