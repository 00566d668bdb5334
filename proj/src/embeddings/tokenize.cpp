#include "newsbias/embeddings/tokenize.hpp"

#include <algorithm>

#include "newsbias/util/utf8.hpp"

namespace newsbias::embeddings {

namespace {

bool is_word_char(char32_t cp) {
    return utf8::is_letter(cp) || utf8::is_digit(cp) || utf8::is_combining_mark(cp) || cp == U'_';
}

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == 0x00A0 || cp == 0x2028 ||
           cp == 0x2029;
}

bool starts_with(const std::vector<char32_t>& cps, std::size_t i, std::string_view ascii) {
    if (i + ascii.size() > cps.size()) return false;
    for (std::size_t k = 0; k < ascii.size(); ++k) {
        if (cps[i + k] != static_cast<char32_t>(ascii[k])) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    auto cps = utf8::nfc(utf8::decode(text));
    for (auto& cp : cps) cp = utf8::to_lower_latin(cp);

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < cps.size()) {
        // URL span: consume to the next whitespace.
        if (starts_with(cps, i, "http://") || starts_with(cps, i, "https://") ||
            starts_with(cps, i, "www.")) {
            while (i < cps.size() && !is_space(cps[i])) ++i;
            tokens.emplace_back(kUrlToken);
            continue;
        }
        // User mention.
        if (cps[i] == U'@' && i + 1 < cps.size() && is_word_char(cps[i + 1])) {
            ++i;
            while (i < cps.size() && is_word_char(cps[i])) ++i;
            tokens.emplace_back(kUserToken);
            continue;
        }
        // Hashtag word keeps its text, '#' dropped.
        if (cps[i] == U'#') {
            ++i;
            continue;
        }
        if (!is_word_char(cps[i])) {
            ++i;
            continue;
        }
        std::string token;
        bool all_digits = true;
        while (i < cps.size() && is_word_char(cps[i])) {
            if (!utf8::is_digit(cps[i])) all_digits = false;
            utf8::append(token, cps[i]);
            ++i;
        }
        tokens.push_back(all_digits ? std::string{kNumToken} : std::move(token));
    }
    return tokens;
}

}  // namespace newsbias::embeddings
