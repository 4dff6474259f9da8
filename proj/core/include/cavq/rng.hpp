#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cavq {

using Rng = std::mt19937_64;

/// SplitMix64 step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministically derives a substream seed from (seed, stream ids).
/// Every consumer of randomness in the library draws from its own
/// derived stream, so reordering independent work cannot change results.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = seed;
    splitmix64(s);
    s ^= 0x6a09e667f3bcc909ull + a;
    splitmix64(s);
    s ^= 0xbb67ae8584caa73bull + b;
    splitmix64(s);
    s ^= 0x3c6ef372fe94f82bull + c;
    return splitmix64(s);
}

/// Uniform double in [0, 1) built from the top 53 bits of the generator.
/// std::uniform_real_distribution is implementation-defined; this is not.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// One standard normal draw via Box-Muller (consumes two uniforms).
inline double standard_normal(Rng& rng) {
    const double u1 = 1.0 - uniform_unit(rng);  // (0, 1], keeps log finite
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

/// Circularly symmetric complex normal with unit total variance
/// (each axis has variance 1/2 before external scaling).
inline std::complex<double> complex_standard_normal(Rng& rng) {
    const double u1 = 1.0 - uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    const double r = std::sqrt(-std::log(u1));  // Rayleigh with E[r^2]=1
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

/// Fills a matrix with i.i.d. standard normals, consuming Box-Muller pairs.
inline void fill_standard_normal(Rng& rng, Eigen::Ref<Eigen::MatrixXd> out) {
    const Eigen::Index n = out.size();
    double* data = out.data();
    Eigen::Index i = 0;
    while (i + 1 < n) {
        const double u1 = 1.0 - uniform_unit(rng);
        const double u2 = uniform_unit(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        data[i++] = r * std::cos(2.0 * M_PI * u2);
        data[i++] = r * std::sin(2.0 * M_PI * u2);
    }
    if (i < n) data[i] = standard_normal(rng);
}

}  // namespace cavq
