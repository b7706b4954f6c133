#pragma once

#include <cstdint>
#include <random>

namespace qsig {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 12345;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Child seed for stream `index` of `seed`. Streams are independent of
// scheduling order, so parallel and serial runs draw identical numbers.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j) noexcept {
    return derive_seed(derive_seed(seed, i), j);
}

inline Rng make_rng(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return Rng(seq);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return make_rng(derive_seed(seed, stream)); }

}  // namespace qsig
