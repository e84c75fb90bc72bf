#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace osa {

// splitmix64: the standard 64-bit mixer; used to derive independent stream
// seeds from (seed, stream index) without correlated low bits.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0x9e3779b97f4a7c15ULL + 1));
}

// Uniform double in [0,1) with 53 random bits.  mt19937_64 is fully specified
// by the standard, so this is reproducible across platforms — unlike
// std::uniform_real_distribution, which is not.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) by rejection; again avoiding the
// implementation-defined std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Uniformly random size-k subset of {0,...,n-1}, returned sorted.
// Partial Fisher-Yates over an index array; order of draws is fixed.
inline std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    std::vector<int> out(idx.begin(), idx.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace osa
