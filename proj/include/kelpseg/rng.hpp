#ifndef KELPSEG_RNG_HPP
#define KELPSEG_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace kelpseg {

// FNV-1a 64-bit. Stable across platforms, used to key split assignment
// and per-chip augmentation streams.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0) {
    std::uint64_t h = 14695981039346656037ULL ^ seed;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// splitmix64 finalizer; decorrelates sequential seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

// Worker stream derived from (seed, chip_id) so augmentation is
// reproducible regardless of batch composition.
inline Rng make_rng(std::uint64_t seed, std::string_view chip_id) {
    return Rng(mix64(fnv1a64(chip_id, seed)));
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace kelpseg

#endif // KELPSEG_RNG_HPP
