#pragma once

#include <cstdint>
#include <random>

namespace curvlab {

// 64-bit linear congruential generator
//   state' = 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
// Draws use only the high bits of the state, so results are reproducible
// across platforms and standard libraries.
class Rng {
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
    // rejection on the high 32 bits of each draw.
    std::uint64_t below(std::uint64_t bound);

private:
    std::linear_congruential_engine<std::uint64_t, kMultiplier, kIncrement, 0> engine_;
};

// SplitMix64 finalizer over seed and stream id; used to give each vertex
// its own reproducible stream.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace curvlab
