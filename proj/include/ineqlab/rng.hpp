#pragma once

#include <cmath>
#include <cstdint>

namespace ineqlab::rng {

// Counter-based generator: every variate is a pure function of
// (seed, path, step, axis), so parallel path generation is reproducible by
// construction -- no stream state, no dependence on worker count.

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash4(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                           std::uint64_t c) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (a + 0xbf58476d1ce4e5b9ULL));
    h = mix64(h ^ (b + 0x94d049bb133111ebULL));
    h = mix64(h ^ (c + 0x2545f4914f6cdd1dULL));
    return h;
}

// Uniform in (0,1): 53-bit mantissa, offset keeps 0 out.
inline double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

inline double uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                      std::uint64_t c) {
    return to_unit(hash4(seed, a, b, c));
}

// Standard normal via Box-Muller on two derived uniforms.
inline double normal(std::uint64_t seed, std::uint64_t path, std::uint64_t step,
                     std::uint64_t axis) {
    const std::uint64_t h = hash4(seed, path, step, axis);
    const double u1 = to_unit(mix64(h ^ 0x6a09e667f3bcc909ULL));
    const double u2 = to_unit(mix64(h ^ 0xbb67ae8584caa73bULL));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace ineqlab::rng
