#pragma once

#include <cstdint>

#include "kinoplan/core/types.hpp"

namespace kinoplan {

/// splitmix64 generator: tiny state, fast, and bit-stable across platforms.
/// Each parallel work item owns one instance, so sampling never shares
/// mutable state between workers.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// splitmix64 finalizer used as a standalone mixer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for the private RNG stream of one propagation work item. Streams are
/// keyed by (run seed, iteration, node id, branch) so re-expanding a node in
/// a later iteration draws fresh controls and serial replays are exact.
[[nodiscard]] constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t iteration,
                                                    std::uint64_t node_id,
                                                    std::uint64_t branch) noexcept {
    std::uint64_t s = mix64(seed);
    s = mix64(s ^ iteration);
    s = mix64(s ^ node_id);
    s = mix64(s ^ branch);
    return s;
}

/// Uniform draw in [0, 1) with 53-bit resolution.
[[nodiscard]] inline Scalar uniform_unit(SplitMix64& rng) noexcept {
    return static_cast<Scalar>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace kinoplan
