#pragma once

#include <cstdint>

namespace ast {

// splitmix64 step. Small counter-based generator used wherever output must
// be reproducible from a plain 64-bit token, independent of the standard
// library engine internals.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

} // namespace ast
