#pragma once

#include <cstdint>
#include <string_view>

namespace iocr {

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = kFnvOffset) {
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

constexpr std::uint64_t fnv1a64(std::uint64_t value, std::uint64_t h = kFnvOffset) {
    for (int i = 0; i < 8; ++i) {
        h ^= value & 0xFF;
        h *= kFnvPrime;
        value >>= 8;
    }
    return h;
}

// Derives an independent RNG stream, e.g. per ballot or per contest.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    return fnv1a64(tag, fnv1a64(seed));
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return fnv1a64(tag, fnv1a64(seed));
}

}  // namespace iocr
