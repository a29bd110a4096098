#pragma once

#include <cstdint>
#include <string_view>

namespace emberank {

// MurmurHash3 x86 32-bit (Austin Appleby, public domain).
// Kept bit-exact: hashed-TFIDF vectors and train/test splits depend on it.
inline std::uint32_t murmur3_x86_32(std::string_view key, std::uint32_t seed) {
    const auto* data = reinterpret_cast<const unsigned char*>(key.data());
    const std::size_t len = key.size();
    const std::size_t nblocks = len / 4;

    std::uint32_t h1 = seed;
    constexpr std::uint32_t c1 = 0xcc9e2d51u;
    constexpr std::uint32_t c2 = 0x1b873593u;

    auto rotl32 = [](std::uint32_t x, int r) -> std::uint32_t {
        return (x << r) | (x >> (32 - r));
    };

    for (std::size_t i = 0; i < nblocks; ++i) {
        std::uint32_t k1 = static_cast<std::uint32_t>(data[4 * i]) |
                           static_cast<std::uint32_t>(data[4 * i + 1]) << 8 |
                           static_cast<std::uint32_t>(data[4 * i + 2]) << 16 |
                           static_cast<std::uint32_t>(data[4 * i + 3]) << 24;
        k1 *= c1;
        k1 = rotl32(k1, 15);
        k1 *= c2;
        h1 ^= k1;
        h1 = rotl32(h1, 13);
        h1 = h1 * 5 + 0xe6546b64u;
    }

    const unsigned char* tail = data + nblocks * 4;
    std::uint32_t k1 = 0;
    switch (len & 3) {
        case 3: k1 ^= static_cast<std::uint32_t>(tail[2]) << 16; [[fallthrough]];
        case 2: k1 ^= static_cast<std::uint32_t>(tail[1]) << 8; [[fallthrough]];
        case 1:
            k1 ^= tail[0];
            k1 *= c1;
            k1 = rotl32(k1, 15);
            k1 *= c2;
            h1 ^= k1;
    }

    h1 ^= static_cast<std::uint32_t>(len);
    h1 ^= h1 >> 16;
    h1 *= 0x85ebca6bu;
    h1 ^= h1 >> 13;
    h1 *= 0xc2b2ae35u;
    h1 ^= h1 >> 16;
    return h1;
}

}  // namespace emberank
