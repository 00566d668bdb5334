#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace newsbias::embeddings {

// Placeholder tokens for masked entities.
inline constexpr const char* kUrlToken = "⟨url⟩";    // ⟨url⟩
inline constexpr const char* kUserToken = "⟨user⟩";  // ⟨user⟩
inline constexpr const char* kNumToken = "⟨num⟩";    // ⟨num⟩
inline constexpr const char* kPadToken = "⟨pad⟩";    // ⟨pad⟩
inline constexpr const char* kUnkToken = "⟨unk⟩";    // ⟨unk⟩

// NFC-normalizes, lowercases Latin scripts, masks URLs / user mentions /
// all-digit runs, strips '#' from hashtag words and splits on whitespace and
// punctuation. Arabic script runs stay intact.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace newsbias::embeddings
