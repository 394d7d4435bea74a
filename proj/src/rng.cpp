#include "curvlab/rng.hpp"

#include <stdexcept>

namespace curvlab {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below needs a positive bound");
    if (bound > 0xffffffffULL) {
        // Large ranges: plain rejection on 64-bit draws.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }
    const std::uint64_t threshold = (0x100000000ULL - bound) % bound;
    for (;;) {
        const std::uint64_t r = next() >> 32;
        const std::uint64_t product = r * bound;
        if ((product & 0xffffffffULL) >= threshold) return product >> 32;
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace curvlab
