#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace newsbias {

// FNV-1a, used for content fingerprints in provenance and manifests.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t value);

// Hash of an entire file's bytes; throws std::runtime_error if unreadable.
std::uint64_t hash_file(const std::string& path);

}  // namespace newsbias
