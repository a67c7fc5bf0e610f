#pragma once

#include <cstdint>

namespace detblow {

// SplitMix64: platform-stable seeded stream; all sampling goes through this
// so identical (p, seed) inputs reproduce bit-identical objects everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish residue; the O(2^-33) bias is irrelevant for genericity.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

} // namespace detblow
