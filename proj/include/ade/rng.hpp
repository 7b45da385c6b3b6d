#pragma once
#include <cstdint>

namespace ade {

// splitmix64 mixer. Draw i of stream `seed` is a pure function of
// (seed, i), so noise fields do not depend on thread count or call order.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(splitmix64(splitmix64(seed) + counter) >> 11) * 0x1.0p-53;
}

// Uniform on [-amp, amp).
inline double uniform_sym(std::uint64_t seed, std::uint64_t counter, double amp) {
    return amp * (2.0 * uniform01(seed, counter) - 1.0);
}

}  // namespace ade
