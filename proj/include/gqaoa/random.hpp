#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gqaoa {

/**
 * Deterministic random streams.
 *
 * Every stream is a std::mt19937_64 (bit-exact across conforming standard
 * libraries) seeded with a SplitMix64 hash of the master seed and the
 * stream's coordinates, e.g. (seed, trial index). Results therefore do not
 * depend on the order in which streams are consumed. Changing this scheme
 * changes every seeded result.
 */
using Rng = std::mt19937_64;

/// One SplitMix64 finalization step.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_key(std::uint64_t seed,
                                std::initializer_list<std::uint64_t> coords) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t c : coords) {
        h = splitmix64(h ^ splitmix64(c + 0x632BE59BD9B4E019ULL));
    }
    return h;
}

inline Rng make_stream(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> coords) {
    return Rng(stream_key(seed, coords));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine output.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace gqaoa
