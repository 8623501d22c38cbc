#pragma once

#include <cstdint>

namespace qclique {

// Strong type for the 64-bit seeds that drive every random choice in the
// toolkit. All randomness flows through explicit seeds; there is no global
// generator state.
struct Seed {
    std::uint64_t value = 0;
};

// SplitMix64 (Steele, Lea & Flood; the java.util.SplittableRandom finalizer).
// Chosen because the whole stream is a pure function of the seed, so results
// are reproducible across platforms and parallel schedules.
class SplitMix64 {
  public:
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound). Unbiased via rejection of the partial
    // top interval; `bound` must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t reject_below = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= reject_below) return x % bound;
        }
    }

  private:
    std::uint64_t state_;
};

// SplitMix64 finalizer as a standalone mixing step.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stateless per-task seed derivation: two mixing rounds, each folding in one
// index scaled by a distinct odd constant. Identical across platforms and
// injective on the index ranges used in practice (see the collision-scan
// test).
inline Seed derive_seed(Seed master, std::uint64_t stream_index,
                        std::uint64_t item_index) {
    std::uint64_t s = master.value;
    s = mix64(s ^ (0x9E3779B97F4A7C15ULL * (stream_index + 1)));
    s = mix64(s ^ (0xC2B2AE3D27D4EB4FULL * (item_index + 1)));
    return Seed{s};
}

}  // namespace qclique
